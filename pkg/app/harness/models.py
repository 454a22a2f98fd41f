"""Pydantic report models and the rule-case record."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, List, Tuple

from pydantic import BaseModel, Field

from ..syntax.ast import Judgment


@dataclass(frozen=True)
class Instance:
    """One generated case: premise judgments and the conclusion they license."""

    premises: Tuple[Judgment, ...]
    conclusion: Judgment


@dataclass(frozen=True)
class RuleCase:
    rule_name: str
    group: str
    generator: Callable[..., Instance]


class CaseOutcome(BaseModel):
    seed: int = Field(..., description="Seed the instance was generated from")
    outcome: str = Field(..., description="holds, bounded, fails, unknown or premise_fails")
    conclusion: str = Field(..., description="The conclusion judgment as printed")
    verdict: str = Field(..., description="Printed verdict of the conclusion")


class RuleReport(BaseModel):
    rule: str = Field(..., description="Rule label")
    group: str = Field("", description="Rule family the label belongs to")
    holds: int = 0
    bounded: int = 0
    fails: int = 0
    unknown: int = 0
    premise_fails: int = 0
    non_vacuous: int = Field(0, description="Cases whose premises all held")
    seeds: List[int] = Field(default_factory=list)
    failures: List[CaseOutcome] = Field(default_factory=list, description="Soundness failures")

    @property
    def total(self) -> int:
        return self.holds + self.bounded + self.fails + self.unknown + self.premise_fails

    @property
    def vacuous(self) -> bool:
        """Premises failed on every instance."""
        return self.non_vacuous == 0 and self.unknown == 0

    @property
    def undecided(self) -> bool:
        """No instance decided, but some ran out of budget."""
        return self.non_vacuous == 0 and self.unknown > 0

    def record(self, outcome: str) -> None:
        setattr(self, outcome, getattr(self, outcome) + 1)


class Report(BaseModel):
    seed: int = 0
    cases: int = Field(0, description="Cases generated per rule")
    elapsed: float = Field(0.0, description="Wall-clock seconds")
    rules: List[RuleReport] = Field(default_factory=list)

    @property
    def soundness_failures(self) -> int:
        return sum(r.fails for r in self.rules)

    @property
    def vacuous_rules(self) -> List[str]:
        return [r.rule for r in self.rules if r.vacuous]

    @property
    def undecided_rules(self) -> List[str]:
        return [r.rule for r in self.rules if r.undecided]

    @property
    def ok(self) -> bool:
        return self.soundness_failures == 0 and not self.vacuous_rules

    def summary(self) -> dict:
        """Machine-readable summary, shared by the command line and the service."""

        return {
            "ok": self.ok,
            "seed": self.seed,
            "cases": self.cases,
            "elapsed": round(self.elapsed, 3),
            "soundness_failures": self.soundness_failures,
            "vacuous_rules": self.vacuous_rules,
            "undecided_rules": self.undecided_rules,
            "rules": [
                r.model_dump(include={"rule", "holds", "bounded", "fails", "unknown", "premise_fails", "seeds"})
                for r in self.rules
            ],
        }
