"""Set-theoretic building blocks: pairs, numerals, Σ, Π, identity, squash, sums."""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from typing import Callable, List, Mapping, Optional, Tuple, Union

from ..errors import InfiniteUnsupported, NotAPair, UndecidedEquality
from .equality import eq_v
from .keys import (
    Finite,
    FunTable,
    Inl,
    Inr,
    Key,
    KPair,
    Naturals,
    key_order,
    pair_space,
    sum_space,
)
from .verdict import Budget, Fails, Holds, Verdict
from .vset import (
    EMPTY,
    Fin,
    Rule,
    Table,
    Unranked,
    VSet,
    from_children,
    mk_sup,
    numeral,
    singleton,
)

logger = logging.getLogger(__name__)


def pair_v(a: VSet, b: VSet) -> VSet:
    """Kuratowski pair ``{{a}, {a, b}}``."""

    return from_children([singleton(a), from_children([a, b])])


def _classes(members: List[VSet], budget: Budget) -> List[List[VSet]]:
    classes: List[List[VSet]] = []
    for m in members:
        for cls in classes:
            v = eq_v(m, cls[0], budget)
            if isinstance(v, Holds):
                cls.append(m)
                break
            if not isinstance(v, Fails):
                raise UndecidedEquality("cannot decide the components of a pair")
        else:
            classes.append([m])
    return classes


def _confirmed(p: VSet, a: VSet, b: VSet, budget: Budget) -> Tuple[VSet, VSet]:
    verdict = eq_v(pair_v(a, b), p, budget)
    if isinstance(verdict, Holds):
        return a, b
    if isinstance(verdict, Fails):
        raise NotAPair(f"set has no pair reading: {verdict.counterexample}")
    raise UndecidedEquality("cannot confirm the pair reading")


def unpair_v(p: VSet, budget: Optional[Budget] = None) -> Tuple[VSet, VSet]:
    """Components of a set bisimilar to some ``pair_v(a, b)``.

    The candidate components are read off the member structure and then
    confirmed by comparing their pair with ``p``.
    """

    budget = budget if budget is not None else Budget()
    if not p.space.is_finite:
        raise NotAPair("a pair has finitely many members")
    outer = _classes([c for _, c in p.items()], budget)
    listed = [cls[0] for cls in outer]
    if not all(v.space.is_finite for v in listed):
        raise NotAPair("pair members are finite sets")
    inner = [_classes([c for _, c in v.items()], budget) for v in listed]
    if len(outer) == 1 and len(inner[0]) == 1:
        a = inner[0][0][0]
        return _confirmed(p, a, a, budget)
    if len(outer) == 2:
        for i in (0, 1):
            small, big = inner[i], inner[1 - i]
            if len(small) == 1 and len(big) == 2:
                a = small[0][0]
                for cls in big:
                    if not isinstance(eq_v(cls[0], a, budget), Holds):
                        return _confirmed(p, a, cls[0], budget)
    raise NotAPair("set has no pair reading")


def numeral_of(v: VSet, budget: Optional[Budget] = None) -> Optional[int]:
    """``n`` with ``v =_V numeral(n)``, or ``None``."""

    budget = budget if budget is not None else Budget()
    r = v.rank
    if not isinstance(r, Fin):
        return None
    return r.n if isinstance(eq_v(v, numeral(r.n), budget), Holds) else None


@dataclass(frozen=True, eq=False)
class VFamily:
    """A set-valued family over the keys of ``base``.

    ``assign`` is either a finite table or a rule; rules may range over
    infinite bases.
    """

    base: VSet
    assign: Union[Mapping[Key, VSet], Callable[[Key], VSet]]
    signature: str = ""

    @property
    def is_rule(self) -> bool:
        return not isinstance(self.assign, Mapping)

    def at(self, key: Key) -> VSet:
        if isinstance(self.assign, Mapping):
            return self.assign[key]
        return self.assign(key)


def sigma_v(a: VSet, g: VFamily) -> VSet:
    """Σ-set: keys ``pair(y, u)``, child ``<a▶y, g(y)▶u>``."""

    if not a.space.is_finite and not g.is_rule:
        raise InfiniteUnsupported("a table family cannot cover an infinite base")

    def child(k: Key) -> VSet:
        assert isinstance(k, KPair)
        return pair_v(a.elem(k.first), g.at(k.first).elem(k.second))

    space = pair_space(a.space, lambda y: g.at(y).space)
    if space.is_finite:
        return mk_sup(space, Table(tuple((k, child(k)) for k in space.keys())))
    return mk_sup(space, Rule(child, label="sigma"))


def pi_v(a: VSet, g: VFamily, budget: Optional[Budget] = None) -> VSet:
    """Π-set of extensional functions, each represented by its graph."""

    budget = budget if budget is not None else Budget()
    if not a.space.is_finite:
        raise InfiniteUnsupported("function spaces over infinite bases are not enumerated")
    xs = a.space.keys()
    fibers = [g.at(x) for x in xs]
    if not all(f.space.is_finite for f in fibers):
        raise InfiniteUnsupported("function spaces into infinite fibers are not enumerated")
    related = _kappa_related(a, budget)
    entries = []
    for choice in itertools.product(*(f.space.keys() for f in fibers)):
        h = dict(zip(xs, choice))
        if not _respects(h, related, g, budget):
            continue
        graph = mk_sup(
            a.space,
            Table(tuple((x, pair_v(a.elem(x), g.at(x).elem(h[x]))) for x in xs)),
        )
        entries.append((FunTable(tuple(zip(xs, choice))), graph))
    entries.sort(key=lambda e: key_order(e[0]))
    return mk_sup(Finite(tuple(k for k, _ in entries)), Table(tuple(entries)))


def _kappa_related(a: VSet, budget: Budget) -> List[Tuple[Key, Key]]:
    """Pairs of distinct keys of ``a`` whose children are equal."""

    out = []
    xs = a.space.keys()
    for i, x in enumerate(xs):
        for y in xs[i + 1 :]:
            v = eq_v(a.elem(x), a.elem(y), budget)
            if isinstance(v, Holds):
                out.append((x, y))
            elif not isinstance(v, Fails):
                raise UndecidedEquality("cannot decide the kernel of the base")
    return out


def _respects(h, related, g: VFamily, budget: Budget) -> bool:
    for x, y in related:
        v = eq_v(g.at(x).elem(h[x]), g.at(y).elem(h[y]), budget)
        if isinstance(v, Fails):
            return False
        if not isinstance(v, Holds):
            raise UndecidedEquality("cannot decide extensionality of a function table")
    return True


def id_v(a: VSet, x: Key, y: Key, budget: Optional[Budget] = None) -> VSet:
    """One member ``a▶x`` when ``a▶x =_V a▶y``, no members when they differ."""

    budget = budget if budget is not None else Budget()
    left = a.elem(x)
    verdict: Verdict = eq_v(left, a.elem(y), budget)
    if isinstance(verdict, Holds):
        return singleton(left)
    if isinstance(verdict, Fails):
        return EMPTY
    raise UndecidedEquality(f"identity between {x} and {y} is undecided: {verdict}")


def sq_v(alpha: VSet) -> VSet:
    """Squash: same key space, every child empty."""

    if alpha.space.is_finite:
        return mk_sup(alpha.space, Table(tuple((k, EMPTY) for k in alpha.space.keys())))
    rank = Fin(1) if isinstance(alpha.space, Naturals) else Unranked()
    return mk_sup(alpha.space, Rule(lambda _k: EMPTY, label="squash", rank=rank))


def inl_v(a: VSet) -> VSet:
    return pair_v(numeral(0), a)


def inr_v(b: VSet) -> VSet:
    return pair_v(numeral(1), b)


def sum_v(alpha: VSet, beta: VSet) -> VSet:
    """Tagged disjoint union: ``inl(k) ↦ <0, alpha▶k>``, ``inr(k) ↦ <1, beta▶k>``."""

    def child(k: Key) -> VSet:
        if isinstance(k, Inl):
            return inl_v(alpha.elem(k.key))
        assert isinstance(k, Inr)
        return inr_v(beta.elem(k.key))

    space = sum_space(alpha.space, beta.space)
    if space.is_finite:
        return mk_sup(space, Table(tuple((k, child(k)) for k in space.keys())))
    return mk_sup(space, Rule(child, label="sum"))


def constant_family(base: VSet, value: VSet) -> VFamily:
    return VFamily(base, lambda _k: value, signature="const")


def table_family(base: VSet, values: Mapping[Key, VSet]) -> VFamily:
    return VFamily(base, dict(values), signature="table")
