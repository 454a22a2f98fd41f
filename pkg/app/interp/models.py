"""Pydantic models and value carriers shared by the interpreter and checker."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Dict, Optional

from pydantic import BaseModel, Field

from ..config import Settings
from ..universes.codes import UCode
from ..zf.keys import Key
from ..zf.verdict import Budget, Verdict, verdict_label
from ..zf.vset import VSet


class CheckConfig(BaseModel):
    """Budgets for one checking session."""

    fuel: int = Field(10000, gt=0, description="Recursion steps per top-level judgment")
    nat_bound: int = Field(16, gt=0, description="Numerals probed in infinite contexts")
    trace: bool = Field(False, description="Log every pointwise verdict at DEBUG")

    @classmethod
    def from_settings(cls, settings: Settings, trace: bool = False) -> "CheckConfig":
        return cls(fuel=settings.fuel, nat_bound=settings.nat_bound, trace=trace)

    def budget(self) -> Budget:
        return Budget(fuel=self.fuel, nat_bound=self.nat_bound)


@dataclass(eq=False)
class VMap:
    """A type or term read as a map from the keys of its context to sets.

    ``code`` gives a universe code for the value at a point and level when
    one is known. ``ext_checked`` holds the decided extensionality verdict
    once a checker has computed it.
    """

    dom: VSet
    fn: Callable[[Key], VSet]
    code: Optional[Callable[[Key, int], Optional[UCode]]] = field(default=None, repr=False)
    ext_checked: Optional[Verdict] = None
    memo: Dict[Key, VSet] = field(default_factory=dict, repr=False)

    def at(self, key: Key) -> VSet:
        hit = self.memo.get(key)
        if hit is None:
            hit = self.fn(key)
            self.memo[key] = hit
        return hit


class JudgmentResult(BaseModel):
    """Verdict on one judgment of a source file."""

    line: int = Field(0, description="Source line of the judgment")
    judgment: str = Field(..., description="The judgment as printed")
    outcome: str = Field(..., description="holds, bounded, fails or unknown")
    verdict: str = Field(..., description="Printed verdict with counterexample or budget")

    @classmethod
    def of(cls, judgment: str, verdict: Verdict, line: int = 0) -> "JudgmentResult":
        return cls(line=line, judgment=judgment, outcome=verdict_label(verdict), verdict=str(verdict))
