"""Subsetoids: injective maps into an ambient setoid."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Callable, Dict, Optional, Tuple

from ..errors import NotEqual
from ..zf.keys import Key
from ..zf.verdict import Budget, Fails, Holds, Verdict, conj, exists, forall, implies
from .family import Family
from .setoid import Setoid, SetoidMap, check_extensional

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class SubSetoid:
    delta: Setoid
    incl: SetoidMap

    @property
    def ambient(self) -> Setoid:
        return self.incl.cod


def sub_member(a: Key, s: SubSetoid, budget: Budget) -> Verdict:
    """``a ∈ S``: some element of ``delta S`` is included as ``a``.

    A positive verdict carries the least such element as witness.
    """

    ds, complete = s.delta.points(budget)

    def instances():
        for d in ds:
            v = s.ambient.eq(a, s.incl(d), budget)
            yield Holds((d,)) if isinstance(v, Holds) else v

    return exists(instances(), budget, complete)


def sub_subseteq(s: SubSetoid, t: SubSetoid, budget: Budget) -> Verdict:
    """Every ambient element of ``s`` is an element of ``t``."""

    xs, complete = s.ambient.points(budget)
    return forall(
        (
            implies(sub_member(x, s, budget), lambda x=x: sub_member(x, t, budget))
            for x in xs
        ),
        budget,
        complete,
    )


def sub_subseteq_by_map(
    s: SubSetoid, t: SubSetoid, budget: Budget
) -> Tuple[Verdict, Optional[SetoidMap]]:
    """Inclusion through the mediating map ``f`` with ``incl_t ∘ f = incl_s``.

    The map is returned only when it is shown to be extensional.
    """

    table: Dict[Key, Key] = {}
    ds, _ = s.delta.points(budget)
    for d in ds:
        v = sub_member(s.incl(d), t, budget)
        if not isinstance(v, Holds):
            return v, None
        table[d] = v.witness
    mediating = SetoidMap(s.delta, t.delta, table)
    verdict = check_extensional(mediating, budget)
    return verdict, mediating if isinstance(verdict, Holds) else None


def sub_equiv(s: SubSetoid, t: SubSetoid, budget: Budget) -> Verdict:
    left = sub_subseteq(s, t, budget)
    if isinstance(left, Fails):
        return left
    return conj([left, sub_subseteq(t, s, budget)], budget)


def family_from_sub(base: Setoid, sub_at: Callable[[Key], SubSetoid]) -> Family:
    """Family of the carriers of an extensional subsetoid assignment.

    The transport between equal base points is the unique map commuting
    with both inclusions.
    """

    def transport(x: Key, y: Key, budget: Budget) -> SetoidMap:
        src, dst = sub_at(x), sub_at(y)
        verdict, mediating = sub_subseteq_by_map(src, dst, budget)
        if mediating is None:
            raise NotEqual(f"fibers over {x} and {y} are not equal subsetoids: {verdict}")
        return mediating

    return Family(base, lambda x: sub_at(x).delta, transport)
