"""Index keys and key spaces.

A key names one branch of an iterative set. Keys are finite trees with
structural equality; ``key_order`` gives the fixed total order used for
sorting spaces and for least-witness extraction.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass
from functools import cached_property
from typing import Any, Callable, Iterable, Iterator, Tuple, Union

from ..errors import DomainMismatch, InfiniteUnsupported


@dataclass(frozen=True)
class Atom:
    index: int

    def __str__(self) -> str:
        return f"atom{self.index}"


@dataclass(frozen=True)
class KPair:
    first: "Key"
    second: "Key"

    def __str__(self) -> str:
        return f"<{self.first},{self.second}>"


@dataclass(frozen=True)
class Inl:
    key: "Key"

    def __str__(self) -> str:
        return f"inl({self.key})"


@dataclass(frozen=True)
class Inr:
    key: "Key"

    def __str__(self) -> str:
        return f"inr({self.key})"


@dataclass(frozen=True)
class Numeral:
    n: int

    def __str__(self) -> str:
        return f"#{self.n}"


@dataclass(frozen=True)
class FunTable:
    """Function graph on keys, sorted by argument, one entry per argument."""

    entries: Tuple[Tuple["Key", "Key"], ...]

    def __post_init__(self) -> None:
        args = [key_order(a) for a, _ in self.entries]
        if args != sorted(args) or len(set(args)) != len(args):
            raise DomainMismatch("funtable entries must be sorted with distinct arguments")

    def __call__(self, arg: "Key") -> "Key":
        for a, b in self.entries:
            if a == arg:
                return b
        raise KeyError(arg)

    def __str__(self) -> str:
        return "[" + " ".join(f"{a}->{b}" for a, b in self.entries) + "]"


@dataclass(frozen=True)
class CodeKey:
    """A universe code used as an index (the index type of a universe level)."""

    code: Any

    def __str__(self) -> str:
        return f"code({self.code})"


@dataclass(frozen=True)
class TreeKey:
    """A small well-founded tree used as an index of a universe set."""

    tree: Any

    def __str__(self) -> str:
        return f"tree({self.tree})"


Key = Union[Atom, KPair, Inl, Inr, Numeral, FunTable, CodeKey, TreeKey]


def key_order(key: Key) -> tuple:
    """Sort token realising the fixed total order on keys."""

    if isinstance(key, Atom):
        return (0, key.index)
    if isinstance(key, KPair):
        return (1, key_order(key.first), key_order(key.second))
    if isinstance(key, Inl):
        return (2, key_order(key.key))
    if isinstance(key, Inr):
        return (3, key_order(key.key))
    if isinstance(key, Numeral):
        return (4, key.n)
    if isinstance(key, FunTable):
        return (5, tuple((key_order(a), key_order(b)) for a, b in key.entries))
    if isinstance(key, CodeKey):
        return (6, repr(key.code))
    if isinstance(key, TreeKey):
        return (7, repr(key.tree))
    raise TypeError(f"not a key: {key!r}")


def sort_keys(keys: Iterable[Key]) -> Tuple[Key, ...]:
    return tuple(sorted(set(keys), key=key_order))


def funtable(pairs: Iterable[Tuple[Key, Key]]) -> FunTable:
    return FunTable(tuple(sorted(pairs, key=lambda p: key_order(p[0]))))


# ---------------------------------------------------------------------------
# Key spaces
# ---------------------------------------------------------------------------


class KeySpace(ABC):
    """The index type of a set: finite and listed, or infinite and probed."""

    is_finite: bool = False

    def keys(self) -> Tuple[Key, ...]:
        raise InfiniteUnsupported(f"cannot list the keys of {self}")

    @abstractmethod
    def probe(self, bound: int) -> Tuple[Key, ...]:
        """Deterministic enumeration prefix; all keys when finite."""

    @abstractmethod
    def __contains__(self, key: object) -> bool:
        ...


@dataclass(frozen=True)
class Finite(KeySpace):
    key_list: Tuple[Key, ...] = ()

    is_finite = True

    def __post_init__(self) -> None:
        tokens = [key_order(k) for k in self.key_list]
        if tokens != sorted(tokens) or len(set(tokens)) != len(tokens):
            raise DomainMismatch("finite key lists must be sorted and duplicate free")

    @classmethod
    def of(cls, keys: Iterable[Key]) -> "Finite":
        return cls(sort_keys(keys))

    def keys(self) -> Tuple[Key, ...]:
        return self.key_list

    def probe(self, bound: int) -> Tuple[Key, ...]:
        return self.key_list

    def __contains__(self, key: object) -> bool:
        return key in self._members

    @cached_property
    def _members(self) -> frozenset:
        return frozenset(self.key_list)

    def __str__(self) -> str:
        return "{" + ", ".join(str(k) for k in self.key_list) + "}"


@dataclass(frozen=True)
class Naturals(KeySpace):
    """The keys ``numeral(n)`` for every natural ``n``."""

    def probe(self, bound: int) -> Tuple[Key, ...]:
        return tuple(Numeral(n) for n in range(bound))

    def __contains__(self, key: object) -> bool:
        return isinstance(key, Numeral) and key.n >= 0

    def __str__(self) -> str:
        return "N"


def _fair_pairs(
    base: Tuple[Key, ...], fibers: Callable[[Key], Tuple[Key, ...]], bound: int
) -> Iterator[KPair]:
    rows = [(y, fibers(y)) for y in base]
    longest = max((len(r) for _, r in rows), default=0)
    emitted = 0
    for stage in range(len(rows) + longest):
        for i in range(min(stage + 1, len(rows))):
            y, row = rows[i]
            j = stage - i
            if j < len(row):
                yield KPair(y, row[j])
                emitted += 1
                if emitted >= bound:
                    return


@dataclass(frozen=True, eq=False)
class DependentPairs(KeySpace):
    """Keys ``pair(y, u)`` with ``y`` in the base and ``u`` in ``fiber(y)``."""

    base: KeySpace
    fiber: Callable[[Key], KeySpace]

    def probe(self, bound: int) -> Tuple[Key, ...]:
        return tuple(
            _fair_pairs(self.base.probe(bound), lambda y: self.fiber(y).probe(bound), bound)
        )

    def __contains__(self, key: object) -> bool:
        return (
            isinstance(key, KPair)
            and key.first in self.base
            and key.second in self.fiber(key.first)
        )

    def __str__(self) -> str:
        return f"Sigma({self.base}, ...)"


@dataclass(frozen=True)
class SumSpace(KeySpace):
    """Disjoint union with ``inl``/``inr`` tags."""

    left: KeySpace
    right: KeySpace

    def probe(self, bound: int) -> Tuple[Key, ...]:
        lefts = [Inl(k) for k in self.left.probe(bound)]
        rights = [Inr(k) for k in self.right.probe(bound)]
        out: list = []
        for i in range(max(len(lefts), len(rights))):
            if i < len(lefts):
                out.append(lefts[i])
            if i < len(rights):
                out.append(rights[i])
        return tuple(out[:bound])

    def __contains__(self, key: object) -> bool:
        if isinstance(key, Inl):
            return key.key in self.left
        if isinstance(key, Inr):
            return key.key in self.right
        return False

    def __str__(self) -> str:
        return f"({self.left} + {self.right})"


def pair_space(base: KeySpace, fiber: Callable[[Key], KeySpace]) -> KeySpace:
    """Dependent pair space, listed when base and every fiber are finite."""

    if base.is_finite:
        fibers = [(y, fiber(y)) for y in base.keys()]
        if all(f.is_finite for _, f in fibers):
            return Finite.of(KPair(y, u) for y, f in fibers for u in f.keys())
    return DependentPairs(base, fiber)


def sum_space(left: KeySpace, right: KeySpace) -> KeySpace:
    if left.is_finite and right.is_finite:
        return Finite.of([Inl(k) for k in left.keys()] + [Inr(k) for k in right.keys()])
    return SumSpace(left, right)
