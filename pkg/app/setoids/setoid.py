"""Setoids and extensional maps.

A setoid is a key space with a decision procedure for its equivalence.
Proofs of equality are erased: a map only records where keys go, and its
extensionality is checked rather than carried.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from typing import Callable, Mapping, Optional, Tuple, Union

from ..errors import InfiniteUnsupported, KeyOutOfRange, UndecidedEquality
from ..zf.keys import Finite, FunTable, Key, KeySpace, KPair, pair_space
from ..zf.verdict import Budget, Fails, Holds, Verdict, conj, forall, implies
from ..zf.vset import VSet

logger = logging.getLogger(__name__)

EqFn = Callable[[Key, Key, Budget], Verdict]
Assignment = Union[Mapping[Key, Key], Callable[[Key], Key]]


@dataclass(frozen=True, eq=False)
class Setoid:
    carrier: KeySpace
    eq: EqFn
    origin: Optional[VSet] = None
    name: str = ""

    def points(self, budget: Budget) -> Tuple[Tuple[Key, ...], bool]:
        """Carrier keys to quantify over and whether that list is complete."""

        if self.carrier.is_finite:
            return self.carrier.keys(), True
        return self.carrier.probe(budget.nat_bound), False

    def __str__(self) -> str:
        return self.name or f"setoid on {self.carrier}"


@dataclass(frozen=True, eq=False)
class SetoidMap:
    dom: Setoid
    cod: Setoid
    assign: Assignment

    def __call__(self, key: Key) -> Key:
        if isinstance(self.assign, Mapping):
            if key not in self.assign:
                raise KeyOutOfRange(f"map is undefined at {key}")
            return self.assign[key]
        return self.assign(key)


def identity_map(s: Setoid) -> SetoidMap:
    return SetoidMap(s, s, lambda k: k)


def compose(f: SetoidMap, g: SetoidMap) -> SetoidMap:
    """``f ∘ g``: apply ``g`` first."""

    return SetoidMap(g.dom, f.cod, lambda k: f(g(k)))


def discrete_setoid(keys, name: str = "") -> Setoid:
    return Setoid(
        Finite.of(keys),
        lambda a, b, _budget: Holds() if a == b else Fails(f"{a} != {b}"),
        name=name,
    )


def codiscrete_setoid(keys, name: str = "") -> Setoid:
    return Setoid(Finite.of(keys), lambda a, b, _budget: Holds(), name=name)


def check_equivalence(s: Setoid, budget: Budget) -> Verdict:
    """Reflexivity, symmetry and transitivity over the carrier."""

    xs, complete = s.points(budget)

    def instances():
        for x in xs:
            yield s.eq(x, x, budget)
        for x, y in itertools.product(xs, xs):
            yield implies(s.eq(x, y, budget), lambda: s.eq(y, x, budget))
        for x, y, z in itertools.product(xs, xs, xs):
            yield implies(
                conj([s.eq(x, y, budget), s.eq(y, z, budget)], budget),
                lambda: s.eq(x, z, budget),
            )

    return forall(instances(), budget, complete)


def check_extensional(f: SetoidMap, budget: Budget) -> Verdict:
    """Equal arguments go to equal values."""

    xs, complete = f.dom.points(budget)

    def instances():
        for x, y in itertools.product(xs, xs):
            v = implies(f.dom.eq(x, y, budget), lambda: f.cod.eq(f(x), f(y), budget))
            if isinstance(v, Fails):
                yield Fails(f"{x} ~ {y} but {f(x)} !~ {f(y)}")
            else:
                yield v

    return forall(instances(), budget, complete)


def pointwise_equal(f: SetoidMap, g: SetoidMap, budget: Budget) -> Verdict:
    xs, complete = f.dom.points(budget)
    return forall((f.cod.eq(f(x), g(x), budget) for x in xs), budget, complete)


def check_iso(f: SetoidMap, g: SetoidMap, budget: Budget) -> Verdict:
    """``f`` and ``g`` are extensional and mutually inverse."""

    def parts():
        yield check_extensional(f, budget)
        yield check_extensional(g, budget)
        yield pointwise_equal(compose(g, f), identity_map(f.dom), budget)
        yield pointwise_equal(compose(f, g), identity_map(g.dom), budget)

    return forall(parts(), budget)


def prod_setoid(a: Setoid, b: Setoid) -> Setoid:
    def eq(p: Key, q: Key, budget: Budget) -> Verdict:
        assert isinstance(p, KPair) and isinstance(q, KPair)
        left = a.eq(p.first, q.first, budget)
        if isinstance(left, Fails):
            return left
        return conj([left, b.eq(p.second, q.second, budget)], budget)

    return Setoid(pair_space(a.carrier, lambda _k: b.carrier), eq, name=f"({a} x {b})")


def exp_setoid(a: Setoid, b: Setoid, budget: Optional[Budget] = None) -> Setoid:
    """Extensional function tables ``a -> b`` with pointwise equality."""

    budget = budget if budget is not None else Budget()
    if not (a.carrier.is_finite and b.carrier.is_finite):
        raise InfiniteUnsupported("exponent setoids need finite carriers")
    xs = a.carrier.keys()
    tables = []
    for choice in itertools.product(b.carrier.keys(), repeat=len(xs)):
        table = FunTable(tuple(zip(xs, choice)))
        verdict = check_extensional(SetoidMap(a, b, table), budget)
        if isinstance(verdict, Holds):
            tables.append(table)
        elif not isinstance(verdict, Fails):
            raise UndecidedEquality("cannot decide extensionality of a function table")

    def eq(f: Key, g: Key, budget: Budget) -> Verdict:
        assert isinstance(f, FunTable) and isinstance(g, FunTable)
        return forall((b.eq(f(x), g(x), budget) for x in xs), budget)

    return Setoid(Finite.of(tables), eq, name=f"[{a} -> {b}]")
