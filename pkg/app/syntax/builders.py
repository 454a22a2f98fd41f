"""Derived substitutions and their expansions into pairs and compositions.

The interpreter never interprets a derived substitution directly; it
interprets the expansion returned by ``expand``.
"""

from __future__ import annotations

from .ast import (
    Br,
    BrIntro,
    BrSb,
    Comp,
    CtxExpr,
    Down,
    Els,
    Id,
    Lf,
    Lift,
    Nat,
    Pair,
    PrX,
    PrY,
    Rg,
    StepSub,
    SubExpr,
    Succ,
    Sum,
    SumSubLf,
    SumSubRg,
    TmExpr,
    TmSub,
    TyExpr,
    TySub,
    Var,
)


def els(ty: TyExpr, tm: TmExpr) -> Els:
    return Els(ty, tm)


def lift(ty: TyExpr, h: SubExpr) -> Lift:
    return Lift(ty, h)


def step_sub(ctx: CtxExpr) -> StepSub:
    return StepSub(ctx)


def sum_sub_lf(left: TyExpr, right: TyExpr) -> SumSubLf:
    return SumSubLf(left, right)


def sum_sub_rg(left: TyExpr, right: TyExpr) -> SumSubRg:
    return SumSubRg(left, right)


def pr_x(ty: TyExpr) -> PrX:
    return PrX(ty)


def pr_y(ty: TyExpr) -> PrY:
    return PrY(ty)


def br_sb(ty: TyExpr) -> BrSb:
    return BrSb(ty)


def expand(sub: SubExpr, dom: CtxExpr) -> SubExpr:
    """One step of unfolding of a derived substitution with domain ``dom``.

    Primitive substitutions are returned unchanged.
    """

    if isinstance(sub, Els):
        return Pair(Id(dom), sub.ty, sub.tm)
    if isinstance(sub, Lift):
        down = Down(TySub(sub.ty, sub.sub))
        return Pair(Comp(sub.sub, down), sub.ty, Var())
    if isinstance(sub, StepSub):
        return Pair(Down(Nat()), Nat(), Succ(Var()))
    if isinstance(sub, SumSubLf):
        d = Down(sub.left)
        return Pair(d, Sum(sub.left, sub.right), Lf(TySub(sub.left, d), TySub(sub.right, d), Var()))
    if isinstance(sub, SumSubRg):
        d = Down(sub.right)
        return Pair(d, Sum(sub.left, sub.right), Rg(TySub(sub.left, d), TySub(sub.right, d), Var()))
    if isinstance(sub, (PrX, PrY)):
        inner = Down(TySub(sub.ty, Down(sub.ty)))
        to_base = Comp(Down(sub.ty), inner)
        if isinstance(sub, PrX):
            return Pair(to_base, sub.ty, TmSub(Var(), inner))
        return Pair(to_base, sub.ty, Var())
    if isinstance(sub, BrSb):
        return Pair(Down(sub.ty), Br(sub.ty), BrIntro(Var()))
    return sub


def is_derived(sub: SubExpr) -> bool:
    return isinstance(sub, (Els, Lift, StepSub, SumSubLf, SumSubRg, PrX, PrY, BrSb))
