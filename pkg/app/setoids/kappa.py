"""The functor from iterative sets to setoids.

``kappa(alpha)`` keeps the index keys of ``alpha`` and identifies two keys
when their children are equal sets. Equal sets give rise to transport
isomorphisms between their setoids, found by least-witness search.
"""

from __future__ import annotations

import itertools
import logging
from typing import Dict, Optional

from ..errors import NotEqual
from ..zf.constructions import VFamily, pi_v, sigma_v
from ..zf.equality import eq_v, mem_v
from ..zf.keys import Key
from ..zf.verdict import Budget, Fails, Holds, Verdict, forall, holds_or_bounded, implies
from ..zf.vset import VSet
from .family import Family, pi_setoid, sigma_setoid
from .setoid import Setoid, SetoidMap, check_iso, identity_map

logger = logging.getLogger(__name__)


def kappa(alpha: VSet) -> Setoid:
    def eq(a: Key, b: Key, budget: Budget) -> Verdict:
        if a == b:
            return Holds()
        return eq_v(alpha.elem(a), alpha.elem(b), budget)

    return Setoid(alpha.space, eq, origin=alpha, name="kappa")


def _witness_into(beta: VSet, child: VSet, budget: Budget) -> Key:
    verdict = mem_v(child, beta, budget)
    if not isinstance(verdict, Holds):
        raise NotEqual(f"no counterpart for a member: {verdict}")
    return verdict.witness


def kappa_transport(
    alpha: VSet,
    beta: VSet,
    budget: Optional[Budget] = None,
    strict: bool = True,
) -> SetoidMap:
    """Transport ``kappa(alpha) -> kappa(beta)`` along ``alpha =_V beta``.

    With ``strict=False`` a bounded pass on infinite sets is accepted and
    the map is computed lazily.
    """

    budget = budget if budget is not None else Budget()
    if alpha is beta:
        return identity_map(kappa(alpha))
    verdict = eq_v(alpha, beta, budget)
    accepted = isinstance(verdict, Holds) or (not strict and holds_or_bounded(verdict))
    if not accepted:
        logger.debug("transport refused", extra={"verdict": str(verdict)})
        raise NotEqual(f"sets are not known to be equal: {verdict}")
    if alpha.space.is_finite:
        table: Dict[Key, Key] = {
            x: _witness_into(beta, alpha.elem(x), budget) for x in alpha.space.keys()
        }
        return SetoidMap(kappa(alpha), kappa(beta), table)
    return SetoidMap(
        kappa(alpha), kappa(beta), lambda x: _witness_into(beta, alpha.elem(x), budget)
    )


def check_vfamily_ext(g: VFamily, budget: Budget) -> Verdict:
    """Keys with equal base children are sent to equal sets."""

    base = g.base
    complete = base.space.is_finite
    xs = base.space.keys() if complete else base.space.probe(budget.nat_bound)

    def instances():
        for x, y in itertools.combinations(xs, 2):
            v = implies(
                eq_v(base.elem(x), base.elem(y), budget),
                lambda: eq_v(g.at(x), g.at(y), budget),
            )
            yield Fails(f"{x} ~ {y} but their images differ") if isinstance(v, Fails) else v

    return forall(instances(), budget, complete)


def kappa_family(g: VFamily) -> Family:
    """The family ``kappa ∘ g`` over ``kappa(g.base)``."""

    return Family(
        kappa(g.base),
        lambda x: kappa(g.at(x)),
        lambda x, y, budget: kappa_transport(g.at(x), g.at(y), budget),
    )


def par_eq(p: VFamily, q: VFamily, budget: Budget) -> Verdict:
    """Equality of parameterizations ``(I, f)`` and ``(I', f')``."""

    same_index = eq_v(p.base, q.base, budget)
    if not isinstance(same_index, Holds):
        return same_index
    t = kappa_transport(p.base, q.base, budget)
    xs = p.base.space.keys()
    return forall((eq_v(p.at(x), q.at(t(x)), budget) for x in xs), budget)


def _carrier_identity(left: Setoid, right: Setoid, budget: Budget) -> Verdict:
    lk, rk = set(left.carrier.keys()), set(right.carrier.keys())
    if lk != rk:
        return Fails(f"carriers differ in {len(lk ^ rk)} keys")
    forward = SetoidMap(left, right, lambda k: k)
    backward = SetoidMap(right, left, lambda k: k)
    return check_iso(forward, backward, budget)


def check_kappa_sigma_iso(a: VSet, g: VFamily, budget: Budget) -> Verdict:
    """``kappa(sigma_v(a, g))`` is isomorphic to ``Σ(kappa a, kappa ∘ g)``."""

    left = kappa(sigma_v(a, g))
    right = sigma_setoid(kappa(a), kappa_family(g))
    return _carrier_identity(left, right, budget)


def check_kappa_pi_iso(a: VSet, g: VFamily, budget: Budget) -> Verdict:
    """``kappa(pi_v(a, g))`` is isomorphic to ``Π(kappa a, kappa ∘ g)``."""

    left = kappa(pi_v(a, g, budget))
    right = pi_setoid(kappa(a), kappa_family(g), budget)
    return _carrier_identity(left, right, budget)
