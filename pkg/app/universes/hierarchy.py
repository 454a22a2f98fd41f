"""Embedding of small trees and the cumulative hierarchy of universe sets.

The universe of level ``k`` is indexed by the small trees over level-``k``
codes; its child at a tree is the tree's embedding. Membership in a
universe is checked against a code certificate that fixes the index space
of the candidate set.
"""

from __future__ import annotations

import logging
from typing import Dict, Optional, Tuple, Union

from ..errors import KernelError, UndecidedEquality
from ..zf.cache import LruCache
from ..zf.equality import eq_v
from ..zf.keys import Finite, Key, TreeKey
from ..zf.verdict import Budget, Fails, Holds, Verdict
from ..zf.vset import NumeralGen, Rule, Table, UnivGen, VSet, is_natv, mk_sup, natv
from .codes import (
    LazyNode,
    LftCode,
    NatTree,
    NCode,
    Node,
    SVTree,
    TreeSpace,
    UCode,
    UEnv,
    UnivTree,
    decode,
    fin_code,
    universe_level_of,
    value_key,
    well_formed,
)

logger = logging.getLogger(__name__)

EMBED_CACHE_SIZE = 50_000

_EMB: LruCache[Node, VSet] = LruCache(EMBED_CACHE_SIZE)
_UNIVERSES: Dict[int, VSet] = {}
_TREES: LruCache[Tuple[str, int], Optional[SVTree]] = LruCache(EMBED_CACHE_SIZE)
_MISSING = object()


def emb(tree: SVTree) -> VSet:
    """``emb(sup(c, f)) = sup(decode c, emb ∘ f)``."""

    if isinstance(tree, NatTree):
        return natv()
    if isinstance(tree, UnivTree):
        return v_k(tree.j)
    if isinstance(tree, LazyNode):
        return mk_sup(tree.space, Rule(lambda k: emb(tree.rule(k)), label="emb"))
    hit = _EMB.get(tree)
    if hit is None:
        space = Finite(tuple(k for k, _ in tree.branches))
        hit = mk_sup(space, Table(tuple((k, emb(t)) for k, t in tree.branches)))
        _EMB.put(tree, hit)
    return hit


def v_k(k: int) -> VSet:
    """The universe set of level ``k``; built once per level."""

    hit = _UNIVERSES.get(k)
    if hit is None:
        hit = mk_sup(
            TreeSpace(k),
            UnivGen(
                k,
                embed=lambda key: emb(key.tree),
                recognize=lambda x, budget: recognize(x, k, budget),
            ),
        )
        _UNIVERSES[k] = hit
    return hit


def u_v(env: UEnv) -> VSet:
    return v_k(env.level)


def tree_of(v: VSet, level: int) -> Optional[SVTree]:
    """A canonical level-``level`` tree embedding to ``v``, when one is known.

    Finite sets get finite-code trees, ``natv`` and smaller universes get
    their canonical trees; other lazily indexed sets have none.
    """

    key = (v.digest, level)
    hit = _TREES.get(key, _MISSING)
    if hit is not _MISSING:
        return hit
    tree = _tree_of(v, level)
    _TREES.put(key, tree)
    return tree


def _tree_of(v: VSet, level: int) -> Optional[SVTree]:
    ch = v.children
    if isinstance(ch, NumeralGen):
        return NatTree()
    if isinstance(ch, UnivGen):
        return UnivTree(ch.level) if ch.level < level else None
    if not v.space.is_finite:
        return None
    members = v.items()
    code = fin_code(len(members))
    branches = []
    for k, (_, child) in zip(decode(code, level).keys(), members):
        sub = tree_of(child, level)
        if sub is None:
            return None
        branches.append((k, sub))
    return Node(code, tuple(branches))


def recognize(x: VSet, level: int, budget: Budget) -> Verdict:
    """Membership of ``x`` in the level-``level`` universe without a code."""

    if isinstance(x.children, UnivGen):
        j = x.children.level
        if j < level:
            return Holds((TreeKey(UnivTree(j)),))
        return Fails(f"universe {j} is not a member of universe {level}")
    tree = tree_of(x, level)
    if tree is None:
        return budget.unknown("no canonical tree for a lazily indexed set")
    verdict = eq_v(emb(tree), x, budget)
    return Holds((TreeKey(tree),)) if isinstance(verdict, Holds) else verdict


def _strip_lifts(code: UCode) -> UCode:
    while isinstance(code, LftCode):
        code = code.code
    return code


def _branch(alpha: VSet, code: UCode, key: Key, level: int) -> Union[SVTree, Fails]:
    vk = value_key(code, key, level)
    if vk not in alpha.space:
        return Fails(f"certificate does not index the set (missing {vk})")
    sub = tree_of(alpha.elem(vk), level)
    if sub is None:
        raise UndecidedEquality(f"member at {vk} has no canonical tree")
    return sub


def realize(cert: UCode, alpha: VSet, level: int) -> Union[SVTree, Fails]:
    """The tree with code ``cert`` whose branches are the members of ``alpha``."""

    j = universe_level_of(cert, level)
    if j is not None and isinstance(alpha.children, UnivGen) and alpha.children.level == j:
        return UnivTree(j)
    if isinstance(_strip_lifts(cert), NCode) and is_natv(alpha):
        return NatTree()
    space = decode(cert, level)
    if space.is_finite:
        branches = []
        for k in space.keys():
            sub = _branch(alpha, cert, k, level)
            if isinstance(sub, Fails):
                return sub
            branches.append((k, sub))
        return Node(cert, tuple(branches))

    def rule(k: Key) -> SVTree:
        sub = _branch(alpha, cert, k, level)
        if isinstance(sub, Fails):
            raise UndecidedEquality(sub.counterexample)
        return sub

    return LazyNode(cert, space, rule)


def check_mem_u(alpha: VSet, k: int, cert: UCode, budget: Budget) -> Verdict:
    """``alpha ∈ V_k`` witnessed by the tree that ``cert`` determines."""

    if not well_formed(cert, k):
        return Fails(f"code {cert} is not well formed at level {k}")
    try:
        tree = realize(cert, alpha, k)
        if isinstance(tree, Fails):
            return tree
        verdict = eq_v(emb(tree), alpha, budget)
    except KernelError as exc:
        logger.debug("certificate undecided", extra={"code": str(cert), "error": str(exc)})
        return budget.unknown(str(exc))
    return Holds((TreeKey(tree),)) if isinstance(verdict, Holds) else verdict
