"""Universe codes, small trees and their decoding to key spaces.

Level ``k`` codes are built from ``n0``, ``n1``, ``n``, the index code ``ix``
(codes of level ``k-1``) and ``lft`` (the decoding of a level ``k-1`` code),
closed under ``plus``, ``times``, ``sigma``, ``pi`` and ``w``. Level 0 has
no index codes.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterator, List, Tuple, Union

from ..errors import IllFormedCode, InfiniteUnsupported
from ..zf.keys import (
    Atom,
    CodeKey,
    Finite,
    FunTable,
    Inl,
    Inr,
    Key,
    KeySpace,
    KPair,
    Naturals,
    TreeKey,
    key_order,
    pair_space,
    sum_space,
)

# ---------------------------------------------------------------------------
# Codes
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class N0Code:
    def __str__(self) -> str:
        return "n0"


@dataclass(frozen=True)
class N1Code:
    def __str__(self) -> str:
        return "n1"


@dataclass(frozen=True)
class NCode:
    def __str__(self) -> str:
        return "n"


@dataclass(frozen=True)
class IxCode:
    def __str__(self) -> str:
        return "ix"


@dataclass(frozen=True)
class LftCode:
    code: "UCode"

    def __str__(self) -> str:
        return f"lft({self.code})"


@dataclass(frozen=True)
class PlusCode:
    left: "UCode"
    right: "UCode"

    def __str__(self) -> str:
        return f"plus({self.left}, {self.right})"


@dataclass(frozen=True)
class TimesCode:
    left: "UCode"
    right: "UCode"

    def __str__(self) -> str:
        return f"times({self.left}, {self.right})"


@dataclass(frozen=True)
class SigmaCode:
    base: "UCode"
    fam: "CodeFamily"

    def __str__(self) -> str:
        return f"sigma({self.base}, {self.fam})"


@dataclass(frozen=True)
class PiCode:
    base: "UCode"
    fam: "CodeFamily"

    def __str__(self) -> str:
        return f"pi({self.base}, {self.fam})"


@dataclass(frozen=True)
class WCode:
    base: "UCode"
    fam: "CodeFamily"

    def __str__(self) -> str:
        return f"w({self.base}, {self.fam})"


UCode = Union[N0Code, N1Code, NCode, IxCode, LftCode, PlusCode, TimesCode, SigmaCode, PiCode, WCode]

N0, N1, N = N0Code(), N1Code(), NCode()

# ---------------------------------------------------------------------------
# Code families
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ConstFamily:
    code: UCode

    def at(self, key: Key) -> UCode:
        return self.code

    def __str__(self) -> str:
        return f"const {self.code}"


@dataclass(frozen=True)
class TableFamily:
    entries: Tuple[Tuple[Key, UCode], ...]

    def at(self, key: Key) -> UCode:
        for k, c in self.entries:
            if k == key:
                return c
        raise IllFormedCode(f"code family is undefined at {key}")

    def __str__(self) -> str:
        return "{" + ", ".join(f"{k}: {c}" for k, c in self.entries) + "}"


@dataclass(frozen=True)
class ExtTable(TableFamily):
    """Marks the extensional function tables of a ``pi`` code with ``n1``."""


@dataclass(frozen=True)
class LiftFamily:
    """``c ↦ lft(c)`` over the index codes."""

    def at(self, key: Key) -> UCode:
        if not isinstance(key, CodeKey):
            raise IllFormedCode(f"lift family expects a code key, got {key}")
        return LftCode(key.code)

    def __str__(self) -> str:
        return "lift"


@dataclass(frozen=True, eq=False)
class RuleFamily:
    """A closed-form family, used over infinite bases."""

    fn: Callable[[Key], UCode]
    label: str = "rule"

    def at(self, key: Key) -> UCode:
        return self.fn(key)

    def __str__(self) -> str:
        return self.label


CodeFamily = Union[ConstFamily, TableFamily, LiftFamily, RuleFamily]


@dataclass(frozen=True)
class UEnv:
    """The pair (index codes, decoding) of one level of the hierarchy."""

    level: int

    def index_space(self) -> KeySpace:
        if self.level == 0:
            raise IllFormedCode("level 0 has no index codes")
        return CodeSpace(self.level - 1)

    def below(self) -> "UEnv":
        if self.level == 0:
            raise IllFormedCode("level 0 has nothing below it")
        return UEnv(self.level - 1)


# ---------------------------------------------------------------------------
# Well-formedness
# ---------------------------------------------------------------------------


def well_formed(code: UCode, level: int) -> bool:
    try:
        _check(code, level)
    except (IllFormedCode, InfiniteUnsupported):
        return False
    return True


def _check(code: UCode, level: int) -> None:
    if isinstance(code, (N0Code, N1Code, NCode)):
        return
    if isinstance(code, IxCode):
        UEnv(level).index_space()
        return
    if isinstance(code, LftCode):
        _check(code.code, UEnv(level).below().level)
        return
    if isinstance(code, (PlusCode, TimesCode)):
        _check(code.left, level)
        _check(code.right, level)
        return
    if isinstance(code, (SigmaCode, PiCode, WCode)):
        _check(code.base, level)
        _check_family(code.base, code.fam, level)
        return
    raise IllFormedCode(f"not a code: {code!r}")


def _check_family(base: UCode, fam: CodeFamily, level: int) -> None:
    if isinstance(fam, ConstFamily):
        _check(fam.code, level)
    elif isinstance(fam, TableFamily):
        space = _decode(base, level)
        if not space.is_finite:
            raise IllFormedCode("a table family needs a finite base")
        if tuple(k for k, _ in fam.entries) != space.keys():
            raise IllFormedCode("code family table does not cover its base")
        for _, c in fam.entries:
            _check(c, level)
    elif isinstance(fam, LiftFamily):
        if not isinstance(base, IxCode):
            raise IllFormedCode("the lift family ranges over ix")
    elif not isinstance(fam, RuleFamily):
        raise IllFormedCode(f"not a code family: {fam!r}")


# ---------------------------------------------------------------------------
# Small trees
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Node:
    """``sup(code, branches)`` with one branch per decoded key, in key order."""

    code: UCode
    branches: Tuple[Tuple[Key, "SVTree"], ...] = ()

    def __str__(self) -> str:
        if not self.branches:
            return f"sup({self.code})"
        return f"sup({self.code}; " + ", ".join(str(t) for _, t in self.branches) + ")"


@dataclass(frozen=True, eq=False)
class LazyNode:
    """A node over an infinite decoded space; branches computed on demand."""

    code: UCode
    space: KeySpace
    rule: Callable[[Key], "SVTree"]

    def __str__(self) -> str:
        return f"sup({self.code}; ...)"


@dataclass(frozen=True)
class NatTree:
    """The canonical tree of the natural numbers (code ``n``)."""

    def __str__(self) -> str:
        return "nat"


@dataclass(frozen=True)
class UnivTree:
    """The canonical tree of the universe of level ``j``."""

    j: int

    def __str__(self) -> str:
        return f"univ{self.j}"


SVTree = Union[Node, LazyNode, NatTree, UnivTree]


def numeral_tree(n: int) -> Node:
    tree = Node(N0)
    for _ in range(n):
        tree = Node(N1, ((Atom(0), tree),))
    return tree


def tree_well_formed(tree: SVTree, level: int) -> bool:
    if isinstance(tree, NatTree):
        return True
    if isinstance(tree, UnivTree):
        return 0 <= tree.j < level
    if not well_formed(tree.code, level):
        return False
    if isinstance(tree, LazyNode):
        return True
    space = _decode(tree.code, level)
    if not space.is_finite or tuple(k for k, _ in tree.branches) != space.keys():
        return False
    return all(tree_well_formed(t, level) for _, t in tree.branches)


# ---------------------------------------------------------------------------
# Index spaces of the hierarchy
# ---------------------------------------------------------------------------


def _small_codes(level: int) -> Iterator[UCode]:
    atoms: List[UCode] = [N0, N1, N]
    if level > 0:
        atoms.append(IxCode())
    yield from atoms
    for a, b in itertools.product(atoms, atoms):
        yield PlusCode(a, b)
        yield TimesCode(a, b)
    if level > 0:
        for c in _small_codes(level - 1):
            yield LftCode(c)


@dataclass(frozen=True)
class CodeSpace(KeySpace):
    """The codes of one level, as keys."""

    level: int

    def probe(self, bound: int) -> Tuple[Key, ...]:
        return tuple(CodeKey(c) for c in itertools.islice(_small_codes(self.level), bound))

    def __contains__(self, key: object) -> bool:
        return isinstance(key, CodeKey) and well_formed(key.code, self.level)

    def __str__(self) -> str:
        return f"I{self.level + 1}"


@dataclass(frozen=True)
class TreeSpace(KeySpace):
    """The small trees of one level, as keys."""

    level: int

    def probe(self, bound: int) -> Tuple[Key, ...]:
        trees: List[SVTree] = [numeral_tree(i) for i in range(max(bound - 1, 0))]
        trees.append(NatTree())
        trees.extend(UnivTree(j) for j in range(self.level))
        return tuple(TreeKey(t) for t in trees[:bound])

    def __contains__(self, key: object) -> bool:
        return isinstance(key, TreeKey) and tree_well_formed(key.tree, self.level)

    def __str__(self) -> str:
        return f"sV{self.level}"


@dataclass(frozen=True, eq=False)
class WSpace(KeySpace):
    """Well-founded trees over a finite base: keys ``pair(y, table)``."""

    base: KeySpace
    fiber: Callable[[Key], KeySpace]

    def probe(self, bound: int) -> Tuple[Key, ...]:
        found: List[Key] = []
        seen = set()
        grew = True
        while grew and len(found) < bound:
            grew = False
            for y in self.base.keys():
                fib = self.fiber(y)
                if not fib.is_finite:
                    continue
                arity = fib.keys()
                pool = list(found)
                for choice in itertools.product(pool, repeat=len(arity)):
                    key = KPair(y, FunTable(tuple(zip(arity, choice))))
                    if key in seen:
                        continue
                    seen.add(key)
                    found.append(key)
                    grew = True
                    if len(found) >= bound:
                        return tuple(found)
        return tuple(found)

    def __contains__(self, key: object) -> bool:
        if not (isinstance(key, KPair) and key.first in self.base):
            return False
        table = key.second
        if not isinstance(table, FunTable):
            return False
        fib = self.fiber(key.first)
        if not fib.is_finite or tuple(a for a, _ in table.entries) != fib.keys():
            return False
        return all(sub in self for _, sub in table.entries)

    def __str__(self) -> str:
        return f"W({self.base}, ...)"


# ---------------------------------------------------------------------------
# Decoding
# ---------------------------------------------------------------------------


def decode(code: UCode, level: int) -> KeySpace:
    """The key space a well-formed level-``level`` code stands for."""

    _check(code, level)
    return _decode(code, level)


def _decode(code: UCode, level: int) -> KeySpace:
    if isinstance(code, N0Code):
        return Finite(())
    if isinstance(code, N1Code):
        return Finite((Atom(0),))
    if isinstance(code, NCode):
        return Naturals()
    if isinstance(code, IxCode):
        return UEnv(level).index_space()
    if isinstance(code, LftCode):
        return _decode(code.code, UEnv(level).below().level)
    if isinstance(code, PlusCode):
        return sum_space(_decode(code.left, level), _decode(code.right, level))
    if isinstance(code, TimesCode):
        right = _decode(code.right, level)
        return pair_space(_decode(code.left, level), lambda _y: right)
    if isinstance(code, SigmaCode):
        fam = code.fam
        return pair_space(_decode(code.base, level), lambda y: _decode(fam.at(y), level))
    if isinstance(code, PiCode):
        return _decode_pi(code, level)
    if isinstance(code, WCode):
        return _decode_w(code, level)
    raise IllFormedCode(f"not a code: {code!r}")


def _decode_pi(code: PiCode, level: int) -> KeySpace:
    base = _decode(code.base, level)
    if not base.is_finite:
        raise InfiniteUnsupported("pi codes over infinite bases are not decoded")
    xs = base.keys()
    fibers = [_decode(code.fam.at(x), level) for x in xs]
    if not all(f.is_finite for f in fibers):
        raise InfiniteUnsupported("pi codes with infinite fibers are not decoded")
    return Finite.of(
        FunTable(tuple(zip(xs, choice))) for choice in itertools.product(*(f.keys() for f in fibers))
    )


def _decode_w(code: WCode, level: int) -> KeySpace:
    if isinstance(code.base, IxCode) and isinstance(code.fam, LiftFamily):
        return TreeSpace(level - 1)
    base = _decode(code.base, level)
    if not base.is_finite:
        raise InfiniteUnsupported("w codes are decoded over finite bases only")
    fibers = {y: _decode(code.fam.at(y), level) for y in base.keys()}
    leaves = [y for y, f in fibers.items() if f.is_finite and not f.keys()]
    if not leaves:
        return Finite(())
    if all(f.is_finite and not f.keys() for f in fibers.values()):
        return Finite.of(KPair(y, FunTable(())) for y in leaves)
    return WSpace(base, lambda y: fibers[y])


# ---------------------------------------------------------------------------
# Keys of values, lifting, canonical codes
# ---------------------------------------------------------------------------


def value_key(code: UCode, key: Key, level: int) -> Key:
    """Translate a decoded key to the key of the interpreted value."""

    if isinstance(code, LftCode):
        return value_key(code.code, key, level - 1)
    if isinstance(code, PlusCode):
        if isinstance(key, Inl):
            return Inl(value_key(code.left, key.key, level))
        if isinstance(key, Inr):
            return Inr(value_key(code.right, key.key, level))
    if isinstance(code, TimesCode) and isinstance(key, KPair):
        return KPair(
            value_key(code.left, key.first, level), value_key(code.right, key.second, level)
        )
    if isinstance(code, SigmaCode) and isinstance(key, KPair):
        if isinstance(code.fam, ExtTable):
            return value_key(code.base, key.first, level)
        return KPair(
            value_key(code.base, key.first, level),
            value_key(code.fam.at(key.first), key.second, level),
        )
    if isinstance(code, PiCode) and isinstance(key, FunTable):
        return FunTable(
            tuple(
                sorted(
                    (
                        (value_key(code.base, a, level), value_key(code.fam.at(a), b, level))
                        for a, b in key.entries
                    ),
                    key=lambda e: key_order(e[0]),
                )
            )
        )
    return key


def lift_code(code: UCode, levels: int = 1) -> UCode:
    """The same code seen ``levels`` levels higher."""

    for _ in range(levels):
        code = LftCode(code)
    return code


def universe_code(j: int, level: int) -> UCode:
    """Code at ``level`` of the universe of level ``j < level``."""

    if not 0 <= j < level:
        raise IllFormedCode(f"universe {j} has no code at level {level}")
    return lift_code(WCode(IxCode(), LiftFamily()), level - j - 1)


def universe_level_of(code: UCode, level: int):
    """``j`` when ``code`` is ``universe_code(j, level)``, else ``None``."""

    depth = 0
    while isinstance(code, LftCode):
        code = code.code
        depth += 1
    if isinstance(code, WCode) and isinstance(code.base, IxCode) and isinstance(code.fam, LiftFamily):
        j = level - depth - 1
        return j if j >= 0 else None
    return None


def fin_code(m: int) -> UCode:
    """A code with exactly ``m`` decoded keys."""

    if m == 0:
        return N0
    code: UCode = N1
    for _ in range(m - 1):
        code = PlusCode(N1, code)
    return code
