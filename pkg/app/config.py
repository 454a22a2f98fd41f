"""Runtime settings read from the environment.

A ``.env`` file in the working directory is honoured. Every value can be
overridden on the command line or per request.
"""

from __future__ import annotations

import logging
import os

from dotenv import load_dotenv
from pydantic import BaseModel, Field

load_dotenv()


class Settings(BaseModel):
    """Default budgets and harness parameters."""

    fuel: int = Field(10000, gt=0, description="Recursion steps per verdict")
    nat_bound: int = Field(16, gt=0, description="Probe limit for infinite spaces")
    seed: int = Field(0, ge=0, description="Base seed for rule instances")
    cases: int = Field(20, gt=0, description="Instances generated per rule")
    log_level: str = Field("INFO", description="Root logging level")


def load_settings() -> Settings:
    """Build settings from ``VML_*`` environment variables."""

    return Settings(
        fuel=int(os.getenv("VML_FUEL", "10000")),
        nat_bound=int(os.getenv("VML_NAT_BOUND", "16")),
        seed=int(os.getenv("VML_SEED", "0")),
        cases=int(os.getenv("VML_CASES", "20")),
        log_level=os.getenv("VML_LOG_LEVEL", "INFO"),
    )


def configure_logging(level: str, trace: bool = False) -> None:
    logging.basicConfig(
        level=logging.DEBUG if trace else getattr(logging, level.upper(), logging.INFO),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
