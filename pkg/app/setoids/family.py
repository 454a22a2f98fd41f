"""Proof-irrelevant families of setoids with their Σ and Π setoids.

Transports are indexed by pairs of base keys rather than by proofs, so
proof irrelevance holds by construction; the remaining laws (identity,
functoriality, invertibility) are checked by ``check_family_laws``.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from typing import Callable, Mapping, Optional, Union

from ..errors import InfiniteUnsupported, KernelError, NotEqual, UndecidedEquality
from ..zf.keys import Finite, FunTable, Key, KPair, pair_space
from ..zf.verdict import Budget, Fails, Holds, Verdict, conj, forall, implies
from .setoid import Setoid, SetoidMap, check_extensional, compose, identity_map, pointwise_equal

logger = logging.getLogger(__name__)

Transport = Callable[[Key, Key, Budget], SetoidMap]


@dataclass(frozen=True, eq=False)
class Family:
    base: Setoid
    fiber: Callable[[Key], Setoid]
    transport: Transport


def family_compose(f: Family, g: SetoidMap) -> Family:
    """Reindex ``f`` along ``g``: fiber ``x ↦ f(g x)``."""

    return Family(
        g.dom,
        lambda x: f.fiber(g(x)),
        lambda x, y, budget: f.transport(g(x), g(y), budget),
    )


def _transported_eq(
    fam: Family, x: Key, y: Key, u: Key, v: Key, budget: Budget
) -> Verdict:
    """``transport(x, y)(u) = v`` in the fiber over ``y``."""

    try:
        moved = fam.transport(x, y, budget)(u)
    except KernelError as exc:
        return budget.unknown(str(exc))
    return fam.fiber(y).eq(moved, v, budget)


def _transport(fam: Family, x: Key, y: Key, budget: Budget) -> Union[SetoidMap, Verdict]:
    """The transport along ``x ~ y``, or the verdict explaining why there is none."""

    try:
        return fam.transport(x, y, budget)
    except NotEqual as exc:
        return Fails(f"no transport {x}->{y}: {exc}")
    except KernelError as exc:
        return budget.unknown(str(exc))


def check_family_laws(fam: Family, budget: Budget) -> Verdict:
    """Identity, functoriality, invertibility and extensionality of transports."""

    xs, complete = fam.base.points(budget)

    def related(x: Key, y: Key) -> Verdict:
        return fam.base.eq(x, y, budget)

    def instances():
        for x in xs:
            same = _transport(fam, x, x, budget)
            if not isinstance(same, SetoidMap):
                yield same
                continue
            v = pointwise_equal(same, identity_map(fam.fiber(x)), budget)
            yield Fails(f"transport at {x} is not the identity") if isinstance(v, Fails) else v
        for x, y in itertools.product(xs, xs):
            r = related(x, y)
            if isinstance(r, Fails):
                continue
            if not isinstance(r, Holds):
                yield r
                continue
            there, back = _transport(fam, x, y, budget), _transport(fam, y, x, budget)
            if not isinstance(there, SetoidMap) or not isinstance(back, SetoidMap):
                yield there if not isinstance(there, SetoidMap) else back
                continue
            yield check_extensional(there, budget)
            v = pointwise_equal(compose(back, there), identity_map(fam.fiber(x)), budget)
            yield Fails(f"transport {x}->{y} is not invertible") if isinstance(v, Fails) else v
        for x, y, z in itertools.product(xs, xs, xs):
            r = conj([related(x, y), related(y, z)], budget)
            if isinstance(r, Fails):
                continue
            if not isinstance(r, Holds):
                yield r
                continue
            steps = [_transport(fam, a, b, budget) for a, b in ((x, y), (y, z), (x, z))]
            missing = [s for s in steps if not isinstance(s, SetoidMap)]
            if missing:
                yield missing[0]
                continue
            v = pointwise_equal(compose(steps[1], steps[0]), steps[2], budget)
            yield Fails(f"transports {x}->{y}->{z} do not compose") if isinstance(v, Fails) else v

    return forall(instances(), budget, complete)


def sigma_setoid(a: Setoid, fam: Family) -> Setoid:
    """Dependent pairs; ``(x, u) ~ (y, v)`` when ``x ~ y`` and ``u`` moves to ``v``."""

    def eq(p: Key, q: Key, budget: Budget) -> Verdict:
        assert isinstance(p, KPair) and isinstance(q, KPair)
        base = a.eq(p.first, q.first, budget)
        if not isinstance(base, Holds):
            return base
        return _transported_eq(fam, p.first, q.first, p.second, q.second, budget)

    return Setoid(pair_space(a.carrier, lambda x: fam.fiber(x).carrier), eq, name="Sigma")


def global_element_check(fam: Family, h: Mapping[Key, Key], budget: Budget) -> Verdict:
    """``h`` is a global element: it commutes with every transport."""

    xs, complete = fam.base.points(budget)
    return forall(
        (
            implies(
                fam.base.eq(x, y, budget),
                lambda x=x, y=y: _transported_eq(fam, x, y, h[x], h[y], budget),
            )
            for x, y in itertools.product(xs, xs)
        ),
        budget,
        complete,
    )


def pi_setoid(a: Setoid, fam: Family, budget: Optional[Budget] = None) -> Setoid:
    """Global elements of ``fam`` with pointwise equality."""

    budget = budget if budget is not None else Budget()
    if not a.carrier.is_finite:
        raise InfiniteUnsupported("dependent products need a finite base")
    xs = a.carrier.keys()
    fibers = [fam.fiber(x) for x in xs]
    if not all(f.carrier.is_finite for f in fibers):
        raise InfiniteUnsupported("dependent products need finite fibers")
    tables = []
    for choice in itertools.product(*(f.carrier.keys() for f in fibers)):
        table = FunTable(tuple(zip(xs, choice)))
        verdict = global_element_check(fam, dict(table.entries), budget)
        if isinstance(verdict, Holds):
            tables.append(table)
        elif not isinstance(verdict, Fails):
            raise UndecidedEquality("cannot decide whether a table is a global element")

    def eq(f: Key, g: Key, budget: Budget) -> Verdict:
        assert isinstance(f, FunTable) and isinstance(g, FunTable)
        return forall((fam.fiber(x).eq(f(x), g(x), budget) for x in xs), budget)

    return Setoid(Finite.of(tables), eq, name="Pi")
