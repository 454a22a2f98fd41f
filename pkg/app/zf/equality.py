"""Bisimulation equality, membership and inclusion of iterative sets.

Equality is decided by the bisimulation closure on listed children and
semi-decided by probing on infinite spaces. Only definitive verdicts are
memoised, keyed by the digests of both sides, in a bounded LRU table.
"""

from __future__ import annotations

import logging
from typing import List, Optional, Tuple

from .cache import LruCache
from .keys import Numeral
from .verdict import (
    HOLDS,
    Budget,
    Fails,
    Holds,
    Unknown,
    Verdict,
    bounded_pass,
    conj,
)
from .vset import Fin, Infinite, NumeralGen, Table, UnivGen, VSet, numeral, rank_known

logger = logging.getLogger(__name__)

EQ_CACHE_SIZE = 200_000

_EQ_CACHE: LruCache[Tuple[str, str], Verdict] = LruCache(EQ_CACHE_SIZE)


def clear_caches() -> None:
    _EQ_CACHE.clear()


def cache_size() -> int:
    return len(_EQ_CACHE)


def eq_v(x: VSet, y: VSet, budget: Optional[Budget] = None) -> Verdict:
    """``x =_V y``: every child of each side matches some child of the other."""

    budget = budget if budget is not None else Budget()
    if x is y or x.digest == y.digest:
        return HOLDS
    key = (x.digest, y.digest)
    hit = _EQ_CACHE.get(key)
    if hit is not None:
        return hit
    if not budget.spend():
        return budget.unknown("fuel exhausted")
    verdict = _bisimilar(x, y, budget)
    if verdict.definitive:
        _EQ_CACHE.put(key, verdict)
        _EQ_CACHE.put((y.digest, x.digest), verdict)
    return verdict


def _bisimilar(x: VSet, y: VSet, budget: Budget) -> Verdict:
    if isinstance(x.children, UnivGen) and isinstance(y.children, UnivGen):
        return budget.unknown(
            f"universes of levels {x.children.level} and {y.children.level} are not compared"
        )
    rx, ry = x.rank, y.rank
    if rank_known(rx) and rank_known(ry) and rx != ry:
        return Fails(f"ranks differ ({rx} vs {ry})")
    left = _covers(x, y, budget)
    if isinstance(left, Fails):
        return left
    right = _covers(y, x, budget)
    if isinstance(right, Fails):
        return right
    return conj([left, right], budget)


def _covers(x: VSet, y: VSet, budget: Budget) -> Verdict:
    """Every child of ``x`` is a member of ``y``."""

    finite = x.space.is_finite
    results: List[Verdict] = []
    for k, child in x.items(budget.nat_bound):
        v = mem_v(child, y, budget)
        if isinstance(v, Fails):
            return Fails(f"child at {k} has no counterpart")
        results.append(v)
    if all(isinstance(v, Holds) for v in results):
        return HOLDS if finite else bounded_pass(budget, len(results))
    combined = conj(results, budget)
    if not finite and isinstance(combined, Unknown) and combined.bounded:
        return bounded_pass(budget, len(results))
    return combined


def mem_v(x: VSet, alpha: VSet, budget: Optional[Budget] = None) -> Verdict:
    """``x ∈_V alpha``; a positive verdict carries the least witness key."""

    budget = budget if budget is not None else Budget()
    ch = alpha.children
    if isinstance(ch, NumeralGen):
        return _mem_natv(x, budget)
    if isinstance(ch, UnivGen):
        return ch.recognize(x, budget)
    ra, rx = alpha.rank, x.rank
    if isinstance(ra, Fin) and rank_known(rx):
        if isinstance(rx, Infinite) or rx.n >= ra.n:
            return Fails(f"rank {rx} cannot occur below rank {ra}")
    unknowns: List[Unknown] = []
    for k, child in alpha.items(budget.nat_bound):
        v = eq_v(x, child, budget)
        if isinstance(v, Holds):
            return Holds((k,))
        if isinstance(v, Unknown):
            unknowns.append(v)
    if alpha.space.is_finite and not unknowns:
        return Fails("no member matches")
    if not unknowns:
        return budget.unknown("no match among probed members")
    return conj(unknowns, budget)


def _mem_natv(x: VSet, budget: Budget) -> Verdict:
    r = x.rank
    if isinstance(r, Infinite):
        return Fails("numerals have finite rank")
    if not isinstance(r, Fin):
        return budget.unknown("rank of a lazily indexed set is unknown")
    v = eq_v(x, numeral(r.n), budget)
    if isinstance(v, Holds):
        return Holds((Numeral(r.n),))
    if isinstance(v, Fails):
        return Fails(f"rank {r.n} set is not the numeral {r.n}")
    return v


def subset_v(alpha: VSet, beta: VSet, budget: Optional[Budget] = None) -> Verdict:
    budget = budget if budget is not None else Budget()
    return _covers(alpha, beta, budget)


def witness(verdict: Verdict):
    """The witness key of a positive membership verdict, else ``None``."""

    return verdict.witness if isinstance(verdict, Holds) else None


def is_hereditarily_tabled(v: VSet) -> bool:
    """True when every node below ``v`` carries an explicit table."""

    if not isinstance(v.children, Table):
        return False
    return all(is_hereditarily_tabled(c) for _, c in v.children.entries)
