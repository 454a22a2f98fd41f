"""Iterative sets ``sup(space, children)``.

A set is a key space plus a child map. Finite spaces carry an explicit
table; infinite spaces carry one of the closed generators (numerals,
universe embeddings) or a lazily evaluated rule. Rank and digest are
cached on first use.
"""

from __future__ import annotations

import hashlib
import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Callable, Dict, Iterable, Tuple, Union

from ..errors import DomainMismatch, KeyOutOfRange
from .keys import Atom, Finite, Key, KeySpace, Naturals, Numeral, key_order


# ---------------------------------------------------------------------------
# Ranks
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Fin:
    n: int

    def __str__(self) -> str:
        return str(self.n)


@dataclass(frozen=True)
class Infinite:
    def __str__(self) -> str:
        return "inf"


@dataclass(frozen=True)
class Unranked:
    """Rank not computed (lazily indexed sets of unknown shape)."""

    def __str__(self) -> str:
        return "?"


Rank = Union[Fin, Infinite, Unranked]


def rank_known(r: Rank) -> bool:
    return not isinstance(r, Unranked)


# ---------------------------------------------------------------------------
# Child maps
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class Table:
    entries: Tuple[Tuple[Key, "VSet"], ...]

    @classmethod
    def of(cls, pairs: Iterable[Tuple[Key, "VSet"]]) -> "Table":
        return cls(tuple(sorted(pairs, key=lambda p: key_order(p[0]))))

    @cached_property
    def lookup(self) -> Dict[Key, "VSet"]:
        return dict(self.entries)

    def child(self, key: Key) -> "VSet":
        return self.lookup[key]


@dataclass(frozen=True)
class NumeralGen:
    """Child at ``numeral(n)`` is the von Neumann-style numeral nV(n)."""

    def child(self, key: Key) -> "VSet":
        assert isinstance(key, Numeral)
        return numeral(key.n)


@dataclass(frozen=True)
class UnivGen:
    """Child at each small-tree key is that tree's embedding."""

    level: int
    embed: Callable[[Key], "VSet"] = field(compare=False, repr=False)
    recognize: Callable[["VSet", Any], Any] = field(compare=False, repr=False)

    def child(self, key: Key) -> "VSet":
        return self.embed(key)


_lazy_tokens = itertools.count()


@dataclass(frozen=True, eq=False)
class Rule:
    """Lazily evaluated children for infinite or expensive spaces."""

    fn: Callable[[Key], "VSet"]
    label: str = "rule"
    rank: Rank = field(default_factory=Unranked)
    token: int = field(default_factory=lambda: next(_lazy_tokens))
    memo: Dict[Key, "VSet"] = field(default_factory=dict, repr=False)

    def child(self, key: Key) -> "VSet":
        hit = self.memo.get(key)
        if hit is None:
            hit = self.fn(key)
            self.memo[key] = hit
        return hit


ChildMap = Union[Table, NumeralGen, UnivGen, Rule]


# ---------------------------------------------------------------------------
# Sets
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class VSet:
    space: KeySpace
    children: ChildMap

    def elem(self, key: Key) -> "VSet":
        if key not in self.space:
            raise KeyOutOfRange(f"key {key} is not an index of this set")
        return self.children.child(key)

    def items(self, bound: int = 0) -> Tuple[Tuple[Key, "VSet"], ...]:
        """Listed children; a probe prefix of ``bound`` keys when infinite."""

        keys = self.space.keys() if self.space.is_finite else self.space.probe(bound)
        return tuple((k, self.children.child(k)) for k in keys)

    @property
    def is_table(self) -> bool:
        return isinstance(self.children, Table)

    @cached_property
    def rank(self) -> Rank:
        _settle(self)
        return self.__dict__["rank"]

    @cached_property
    def digest(self) -> str:
        _settle(self)
        return self.__dict__["digest"]


def _local_rank(v: VSet) -> Rank:
    ch = v.children
    if isinstance(ch, Table):
        best = -1
        for _, c in ch.entries:
            r = c.rank
            if not isinstance(r, Fin):
                if isinstance(r, Infinite):
                    return r
                return Unranked()
            best = max(best, r.n)
        return Fin(best + 1)
    if isinstance(ch, (NumeralGen, UnivGen)):
        return Infinite()
    return ch.rank


def _local_digest(v: VSet) -> str:
    ch = v.children
    if isinstance(ch, Table):
        h = hashlib.blake2b(b"T", digest_size=16)
        for k, c in ch.entries:
            h.update(repr(key_order(k)).encode())
            h.update(c.digest.encode())
        return h.hexdigest()
    if isinstance(ch, NumeralGen):
        return "natv"
    if isinstance(ch, UnivGen):
        return f"univ{ch.level}"
    return f"lazy{ch.token}"


def _settle(root: VSet) -> None:
    """Cache rank and digest below ``root`` children first, without recursion."""

    stack = [root]
    while stack:
        v = stack[-1]
        if "digest" in v.__dict__ and "rank" in v.__dict__:
            stack.pop()
            continue
        if isinstance(v.children, Table):
            pending = [c for _, c in v.children.entries if "digest" not in c.__dict__]
            if pending:
                stack.extend(pending)
                continue
        v.__dict__["rank"] = _local_rank(v)
        v.__dict__["digest"] = _local_digest(v)
        stack.pop()


def mk_sup(space: KeySpace, children: ChildMap) -> VSet:
    if isinstance(children, Table):
        if not space.is_finite:
            raise DomainMismatch("a table needs a finite key space")
        if tuple(k for k, _ in children.entries) != space.keys():
            raise DomainMismatch("table domain differs from the key list of the space")
    elif isinstance(children, NumeralGen) and not isinstance(space, Naturals):
        raise DomainMismatch("the numeral generator is only paired with Naturals")
    return VSet(space, children)


def index_of(v: VSet) -> KeySpace:
    return v.space


def elem_at(v: VSet, key: Key) -> VSet:
    return v.elem(key)


def rank_of(v: VSet) -> Rank:
    return v.rank


def digest_of(v: VSet) -> str:
    return v.digest


def from_children(children: Iterable[VSet]) -> VSet:
    """``{c0, c1, ...}`` presented with keys atom 0, atom 1, ... in order."""

    pairs = [(Atom(i), c) for i, c in enumerate(children)]
    return mk_sup(Finite(tuple(k for k, _ in pairs)), Table(tuple(pairs)))


EMPTY = mk_sup(Finite(()), Table(()))


def singleton(v: VSet) -> VSet:
    return from_children([v])


_NUMERALS = [EMPTY]


def numeral(n: int) -> VSet:
    """nV(0) = empty, nV(n+1) = {nV(n)}; shared so equal numerals are identical."""

    while len(_NUMERALS) <= n:
        _NUMERALS.append(singleton(_NUMERALS[-1]))
    return _NUMERALS[n]


def natv() -> VSet:
    return _NATV


_NATV = mk_sup(Naturals(), NumeralGen())


def is_natv(v: VSet) -> bool:
    return isinstance(v.children, NumeralGen)


def child_sets(v: VSet) -> Tuple[VSet, ...]:
    return tuple(c for _, c in v.items())
