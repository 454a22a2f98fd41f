"""FastAPI wrapper around the checker, the evaluator and the rule suite."""

from __future__ import annotations

import logging
from typing import Dict, List, Optional

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from .config import configure_logging, load_settings
from .errors import KernelError, PremiseFails, ScopeError, VmlSyntaxError
from .harness.runner import run_suite
from .interp.checker import check_source, evaluate, scope_judgment
from .interp.models import CheckConfig, JudgmentResult
from .syntax.parser import parse, parse_expr
from .zf.literals import print_vset

settings = load_settings()
configure_logging(settings.log_level)
logger = logging.getLogger(__name__)

app = FastAPI(title="Setoid Kernel")


class Budgets(BaseModel):
    fuel: int = Field(settings.fuel, gt=0, description="Recursion steps per verdict")
    nat_bound: int = Field(settings.nat_bound, gt=0, description="Numerals probed in infinite contexts")

    def check_config(self) -> CheckConfig:
        return CheckConfig(fuel=self.fuel, nat_bound=self.nat_bound)


class CheckRequest(Budgets):
    source: str = Field(..., description=".vml source text")


class CheckResponse(BaseModel):
    results: List[JudgmentResult]


class EvalRequest(Budgets):
    expr: str = Field(..., description="A closed expression, optionally after def forms")


class EvalResponse(BaseModel):
    value: str = Field(..., description="The set value as a literal")


class SuiteRequest(Budgets):
    cases: int = Field(settings.cases, gt=0, description="Instances per rule")
    seed: int = Field(settings.seed, ge=0)
    rules: Optional[List[str]] = Field(None, description="Only these rule labels")


def _unprocessable(exc: Exception) -> HTTPException:
    return HTTPException(422, detail=str(exc))


@app.post("/check", response_model=CheckResponse)
def check(request: CheckRequest) -> CheckResponse:
    """Verdicts for every judgment of a source file."""
    try:
        src = parse(request.source)
        for item in src.judgments:
            scope_judgment(item.judgment)
        return CheckResponse(results=check_source(src, request.check_config()))
    except (VmlSyntaxError, ScopeError) as exc:
        raise _unprocessable(exc) from exc
    except RecursionError as exc:
        raise HTTPException(422, detail="source nests too deeply to interpret") from exc
    except Exception as exc:  # pragma: no cover - unexpected kernel failure
        logger.exception("check failed", extra={"error": str(exc)})
        raise HTTPException(500, detail="checking failed") from exc


@app.post("/eval", response_model=EvalResponse)
def eval_expr(request: EvalRequest) -> EvalResponse:
    try:
        value = print_vset(evaluate(parse_expr(request.expr), request.check_config()))
    except (VmlSyntaxError, ScopeError, PremiseFails) as exc:
        raise _unprocessable(exc) from exc
    except RecursionError as exc:
        raise HTTPException(422, detail="expression nests too deeply to interpret") from exc
    except KernelError as exc:
        raise HTTPException(409, detail=f"undecided: {exc}") from exc
    return EvalResponse(value=value)


@app.post("/suite")
def suite(request: SuiteRequest) -> Dict[str, object]:
    try:
        report = run_suite(request.check_config(), request.cases, request.seed, request.rules)
    except KeyError as exc:
        raise HTTPException(404, detail=exc.args[0]) from exc
    return report.summary()


@app.get("/health")
def health() -> Dict[str, str]:
    return {"status": "ok"}
