"""Three-valued verdicts and the budget that bounds their computation.

``Holds`` and ``Fails`` are definitive: raising the budget never changes
them. ``Unknown`` records the budget it was computed under; ``bounded``
marks a clean pass over a probed prefix of an infinite quantification.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Optional, Tuple, Union

from .keys import Key


@dataclass(frozen=True)
class Holds:
    witnesses: Tuple[Key, ...] = ()

    definitive = True

    @property
    def witness(self) -> Optional[Key]:
        return self.witnesses[0] if self.witnesses else None

    def __str__(self) -> str:
        return "holds"


@dataclass(frozen=True)
class Fails:
    counterexample: str = ""

    definitive = True

    def __str__(self) -> str:
        return f"fails: {self.counterexample}" if self.counterexample else "fails"


@dataclass(frozen=True)
class Unknown:
    fuel: int
    nat_bound: int
    reason: str = ""
    bounded: bool = False
    points: int = 0

    definitive = False

    def __str__(self) -> str:
        if self.bounded:
            return f"holds-bounded({self.points})"
        return f"unknown(fuel={self.fuel}, nat_bound={self.nat_bound})"


Verdict = Union[Holds, Fails, Unknown]

HOLDS = Holds()


def is_holds(v: Verdict) -> bool:
    return isinstance(v, Holds)


def is_fails(v: Verdict) -> bool:
    return isinstance(v, Fails)


def holds_or_bounded(v: Verdict) -> bool:
    return isinstance(v, Holds) or (isinstance(v, Unknown) and v.bounded)


def verdict_label(v: Verdict) -> str:
    """Short outcome name used in reports: holds, bounded, fails, unknown."""

    if isinstance(v, Holds):
        return "holds"
    if isinstance(v, Fails):
        return "fails"
    return "bounded" if v.bounded else "unknown"


@dataclass
class Budget:
    """Mutable fuel counter shared by one top-level check."""

    fuel: int = 10000
    nat_bound: int = 16
    spent: int = 0

    def spend(self, amount: int = 1) -> bool:
        if self.spent + amount > self.fuel:
            return False
        self.spent += amount
        return True

    @property
    def exhausted(self) -> bool:
        return self.spent >= self.fuel

    def unknown(self, reason: str = "", bounded: bool = False, points: int = 0) -> Unknown:
        return Unknown(self.fuel, self.nat_bound, reason, bounded, points)


def conj(verdicts: Iterable[Verdict], budget: Budget) -> Verdict:
    """Conjunction: the first failure wins, then any unknown, else holds.

    The result is bounded only when every unknown part is bounded; the
    point count is the largest seen.
    """

    unknowns = []
    for v in verdicts:
        if isinstance(v, Fails):
            return v
        if isinstance(v, Unknown):
            unknowns.append(v)
    if not unknowns:
        return HOLDS
    bounded = all(u.bounded for u in unknowns)
    points = max(u.points for u in unknowns)
    reason = next((u.reason for u in unknowns if not u.bounded), unknowns[0].reason)
    return budget.unknown(reason, bounded=bounded, points=points)


def bounded_pass(budget: Budget, points: int) -> Unknown:
    return budget.unknown("probed prefix only", bounded=True, points=points)


def forall(checks: Iterable[Verdict], budget: Budget, complete: bool = True) -> Verdict:
    """Universal quantification over lazily produced instance verdicts.

    Stops at the first failure. ``complete=False`` marks a probed prefix of
    an infinite domain, so a clean pass is only bounded.
    """

    results = []
    for v in checks:
        if isinstance(v, Fails):
            return v
        results.append(v)
    combined = conj(results, budget)
    if complete:
        return combined
    if isinstance(combined, Holds) or (isinstance(combined, Unknown) and combined.bounded):
        return bounded_pass(budget, len(results))
    return combined


def exists(checks: Iterable[Verdict], budget: Budget, complete: bool = True) -> Verdict:
    """Existential quantification; the first positive instance wins."""

    unknown = None
    for v in checks:
        if isinstance(v, Holds):
            return v
        if isinstance(v, Unknown) and unknown is None:
            unknown = v
    if unknown is not None:
        return budget.unknown(unknown.reason)
    if complete:
        return Fails("no instance")
    return budget.unknown("no instance among probed points")


def implies(premise: Verdict, conclusion: Callable[[], Verdict]) -> Verdict:
    if isinstance(premise, Fails):
        return HOLDS
    result = conclusion()
    if isinstance(premise, Holds) or isinstance(result, Holds):
        return result
    return premise
