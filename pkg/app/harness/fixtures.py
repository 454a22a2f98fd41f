"""Closed pools of contexts, types, terms and substitutions for rule instances.

Every pool entry is known to be well scoped and, where a term is listed
with a type, to be a member of it. ``Gen`` draws from the pools with a
seeded ``random.Random`` so an instance is a function of its seed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence, Tuple, TypeVar

from ..syntax.ast import (
    App,
    Br,
    BrIntro,
    Comp,
    CtxExpr,
    Down,
    Els,
    Empty,
    Ext,
    Id,
    IdT,
    Lam,
    Lf,
    N0,
    Nat,
    Pair,
    PiF,
    Pr,
    Pr1,
    Rec,
    Rg,
    Rr,
    SigmaF,
    SubExpr,
    Succ,
    Sum,
    SumRec,
    TmExpr,
    TmSub,
    TyExpr,
    TySub,
    Var,
    Zero,
)

T = TypeVar("T")

# ----- Closed types and terms -----

UNIT = IdT(Nat(), Zero(), Zero())
TT = Rr(Zero())
BOOL = Sum(UNIT, UNIT)
TRUE = Lf(UNIT, UNIT, TT)
FALSE = Rg(UNIT, UNIT, TT)
THREE = Sum(BOOL, UNIT)
BR_UNIT = Br(UNIT)

ID_BOOL = Lam(BOOL, BOOL, Var())
NOT_BODY = SumRec(UNIT, UNIT, BOOL, FALSE, TRUE, Var())
NOT = Lam(BOOL, BOOL, NOT_BODY)
CONST_TRUE = Lam(BOOL, BOOL, TRUE)

# Depends on the last variable: inhabited over TRUE only.
IS_TRUE = IdT(TySub(BOOL, Down(BOOL)), Var(), TRUE)

ONE = Succ(Zero())
TWO = Succ(ONE)


@dataclass(frozen=True)
class Sample:
    ty: TyExpr
    terms: Tuple[TmExpr, ...]


SAMPLES: Tuple[Sample, ...] = (
    Sample(UNIT, (TT,)),
    Sample(BOOL, (TRUE, FALSE)),
    Sample(THREE, (Lf(BOOL, UNIT, TRUE), Lf(BOOL, UNIT, FALSE), Rg(BOOL, UNIT, TT))),
    Sample(Br(BOOL), (BrIntro(TRUE), BrIntro(FALSE))),
    Sample(BR_UNIT, (BrIntro(TT),)),
    Sample(Sum(UNIT, BR_UNIT), (Lf(UNIT, BR_UNIT, TT), Rg(UNIT, BR_UNIT, BrIntro(TT)))),
    Sample(SigmaF(BOOL, UNIT), (Pr(TRUE, TT), Pr(FALSE, TT))),
    Sample(PiF(BOOL, BOOL), (ID_BOOL, NOT, CONST_TRUE)),
    Sample(IdT(BOOL, TRUE, TRUE), (Rr(TRUE),)),
)

SMALL = (UNIT, BOOL)

# Universe members of level 0, each with a well-known set value.
FINITE_TYPES: Tuple[TyExpr, ...] = (UNIT, BOOL, THREE, N0(), Br(BOOL), SigmaF(BOOL, UNIT), PiF(BOOL, BOOL))
SMALL_TYPES: Tuple[TyExpr, ...] = FINITE_TYPES + (Nat(),)

EQUAL_TYPES: Tuple[Tuple[TyExpr, TyExpr], ...] = (
    (UNIT, BR_UNIT),
    (UNIT, Br(BOOL)),
    (BOOL, Sum(UNIT, BR_UNIT)),
    (BR_UNIT, Br(BOOL)),
)

EQUAL_TERMS: Tuple[Tuple[TyExpr, TmExpr, TmExpr], ...] = (
    (BOOL, TRUE, App(BOOL, BOOL, ID_BOOL, TRUE)),
    (BOOL, FALSE, Pr1(Pr(FALSE, TT))),
    (BOOL, TRUE, App(BOOL, BOOL, NOT, FALSE)),
    (UNIT, TT, Pr1(Pr(TT, TRUE))),
    (Br(BOOL), BrIntro(TRUE), BrIntro(FALSE)),
    (PiF(BOOL, BOOL), ID_BOOL, Lam(BOOL, BOOL, Pr1(Pr(Var(), TT)))),
)

NAT_TERMS: Tuple[TmExpr, ...] = (Zero(), ONE, TWO)

EQUAL_NAT_TERMS: Tuple[Tuple[TmExpr, TmExpr], ...] = (
    (ONE, Pr1(Pr(ONE, TT))),
    (TWO, Rec(Nat(), Zero(), Succ(Var()), TWO)),
    (Zero(), Rec(Nat(), Zero(), Var(), ONE)),
)


def extend(g: CtxExpr, *types: TyExpr) -> CtxExpr:
    for ty in types:
        g = Ext(g, ty)
    return g


def ctx(*types: TyExpr) -> CtxExpr:
    return extend(Empty(), *types)


def depth(g: CtxExpr) -> int:
    n = 0
    while isinstance(g, Ext):
        n, g = n + 1, g.ctx
    return n


def weakened(g: Ext) -> TyExpr:
    """Type of the last variable of ``g``."""

    return TySub(g.ty, Down(g.ty))


CONTEXTS: Tuple[CtxExpr, ...] = (Empty(), ctx(BOOL), ctx(UNIT), ctx(BOOL, UNIT))
NAT_CONTEXTS: Tuple[CtxExpr, ...] = (Empty(), ctx(BOOL))
N0_CONTEXTS: Tuple[CtxExpr, ...] = (ctx(N0()), ctx(BOOL, N0()))

EQUAL_CONTEXTS: Tuple[Tuple[CtxExpr, CtxExpr], ...] = (
    (ctx(UNIT), ctx(BR_UNIT)),
    (ctx(BOOL), ctx(Sum(UNIT, BR_UNIT))),
    (ctx(UNIT), ctx(Br(BOOL))),
)


def terms_of(ty: TyExpr) -> Tuple[TmExpr, ...]:
    for s in SAMPLES:
        if s.ty == ty:
            return s.terms
    return ()


def lift_as(ty: TyExpr, h: SubExpr, dom_ty: TyExpr) -> Pair:
    """``Δ ▷ dom_ty → Γ ▷ ty`` over ``h``; ``dom_ty`` must equal ``ty[h]``."""

    return Pair(Comp(h, Down(dom_ty)), ty, Var())


def n_sub(h: SubExpr) -> Pair:
    return lift_as(Nat(), h, Nat())


class Gen:
    """Seeded draws from the pools."""

    def __init__(self, seed: int) -> None:
        self.seed = seed
        self.rnd = random.Random(seed)

    def pick(self, xs: Sequence[T]) -> T:
        return xs[self.rnd.randrange(len(xs))]

    def coin(self, p: float = 0.5) -> bool:
        return self.rnd.random() < p

    def ctx(self) -> CtxExpr:
        return self.pick(CONTEXTS)

    def small(self) -> TyExpr:
        return self.pick(SMALL)

    def sample(self, g: CtxExpr = Empty()) -> Tuple[TyExpr, TmExpr]:
        """A type valid in ``g`` and one of its terms."""

        if isinstance(g, Ext) and terms_of(g.ty) and self.coin(0.25):
            return weakened(g), Var()
        s = self.pick(SAMPLES)
        return s.ty, self.pick(s.terms)

    def ty(self, g: CtxExpr = Empty()) -> TyExpr:
        return self.sample(g)[0]

    def term(self, ty: TyExpr) -> TmExpr:
        return self.pick(terms_of(ty))

    def equal_types(self) -> Tuple[TyExpr, TyExpr]:
        if self.coin(0.25):
            ty = self.ty()
            return ty, ty
        left, right = self.pick(EQUAL_TYPES)
        return (left, right) if self.coin() else (right, left)

    def equal_terms(self) -> Tuple[TyExpr, TmExpr, TmExpr]:
        if self.coin(0.25):
            ty, tm = self.sample()
            return ty, tm, tm
        ty, left, right = self.pick(EQUAL_TERMS)
        return (ty, left, right) if self.coin() else (ty, right, left)

    def equal_ctxs(self) -> Tuple[CtxExpr, CtxExpr]:
        if self.coin(0.25):
            g = self.ctx()
            return g, g
        left, right = self.pick(EQUAL_CONTEXTS)
        return (left, right) if self.coin() else (right, left)

    def sub_into(self, gamma: CtxExpr) -> Tuple[CtxExpr, SubExpr]:
        """A context ``Δ`` and a substitution ``Δ → gamma``."""

        options = [(gamma, Id(gamma))]
        if depth(gamma) < 2:
            options.append((Ext(gamma, BOOL), Down(BOOL)))
            options.append((extend(gamma, UNIT, BOOL), Comp(Down(UNIT), Down(BOOL))))
        if isinstance(gamma, Ext) and terms_of(gamma.ty):
            a = self.term(gamma.ty)
            options.append((gamma.ctx, Els(gamma.ty, a)))
            options.append((gamma, Pair(Down(gamma.ty), gamma.ty, a)))
            options.append((gamma, Pair(Down(gamma.ty), gamma.ty, Var())))
        return self.pick(options)

    def equal_subs(self, gamma: CtxExpr) -> Tuple[CtxExpr, SubExpr, SubExpr]:
        delta, h = self.sub_into(gamma)
        options = [(delta, h, h), (delta, Comp(h, Id(delta)), h), (delta, Comp(Id(gamma), h), h)]
        if isinstance(gamma, Ext) and terms_of(gamma.ty):
            options.append((gamma, Pair(Down(gamma.ty), gamma.ty, Var()), Id(gamma)))
        d, f, g = self.pick(options)
        return (d, f, g) if self.coin() else (d, g, f)

    def nat_ctx(self) -> CtxExpr:
        return self.pick(NAT_CONTEXTS)

    def nat(self) -> TmExpr:
        return self.pick(NAT_TERMS)

    def numeral(self, top: int = 8) -> TmExpr:
        tm: TmExpr = Zero()
        for _ in range(self.rnd.randrange(top + 1)):
            tm = Succ(tm)
        return tm

    def equal_nats(self) -> Tuple[TmExpr, TmExpr]:
        if self.coin(0.25):
            n = self.nat()
            return n, n
        left, right = self.pick(EQUAL_NAT_TERMS)
        return (left, right) if self.coin() else (right, left)

    def equal_terms_of(self, ty: TyExpr) -> Tuple[TmExpr, TmExpr]:
        """Two equal terms of the closed type ``ty``."""

        options = [(t, t) for t in terms_of(ty)]
        options.extend((left, right) for t, left, right in EQUAL_TERMS if t == ty)
        return self.pick(options)

    def equal_types_in(self, g: CtxExpr) -> Tuple[TyExpr, TyExpr]:
        """Like ``equal_types``, sometimes with the type of the last variable."""

        if isinstance(g, Ext) and terms_of(g.ty) and self.coin(0.3):
            return weakened(g), TySub(g.ty, Comp(Down(g.ty), Id(g)))
        return self.equal_types()

    def equal_terms_in(self, g: CtxExpr) -> Tuple[TyExpr, TmExpr, TmExpr]:
        if isinstance(g, Ext) and terms_of(g.ty) and self.coin(0.3):
            return weakened(g), Var(), TmSub(Var(), Id(g))
        return self.equal_terms()
