"""Abstract syntax of the explicit-substitution calculus.

Variables are nameless: ``Var`` is the last variable of its context and
earlier variables are reached through ``TySub``/``TmSub`` with ``Down``.
Proof arguments are not part of the syntax; the checker recomputes them.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Tuple, Union

# ---------------------------------------------------------------------------
# Contexts
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Empty:
    pass


@dataclass(frozen=True)
class Ext:
    ctx: "CtxExpr"
    ty: "TyExpr"


CtxExpr = Union[Empty, Ext]

# ---------------------------------------------------------------------------
# Substitutions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Id:
    ctx: CtxExpr


@dataclass(frozen=True)
class Comp:
    """``f ∘ g``: ``g`` is applied first."""

    f: "SubExpr"
    g: "SubExpr"


@dataclass(frozen=True)
class Down:
    ty: "TyExpr"


@dataclass(frozen=True)
class Pair:
    """``⟨f, a⟩ : Δ → Γ ▷ A`` for ``f : Δ → Γ`` and ``a :: A[f]``."""

    f: "SubExpr"
    ty: "TyExpr"
    tm: "TmExpr"


@dataclass(frozen=True)
class Phi:
    src: CtxExpr
    dst: CtxExpr


@dataclass(frozen=True)
class Els:
    ty: "TyExpr"
    tm: "TmExpr"


@dataclass(frozen=True)
class Lift:
    ty: "TyExpr"
    sub: "SubExpr"


@dataclass(frozen=True)
class StepSub:
    ctx: CtxExpr


@dataclass(frozen=True)
class SumSubLf:
    left: "TyExpr"
    right: "TyExpr"


@dataclass(frozen=True)
class SumSubRg:
    left: "TyExpr"
    right: "TyExpr"


@dataclass(frozen=True)
class PrX:
    ty: "TyExpr"


@dataclass(frozen=True)
class PrY:
    ty: "TyExpr"


@dataclass(frozen=True)
class BrSb:
    ty: "TyExpr"


SubExpr = Union[Id, Comp, Down, Pair, Phi, Els, Lift, StepSub, SumSubLf, SumSubRg, PrX, PrY, BrSb]

# ---------------------------------------------------------------------------
# Types
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PiF:
    dom: "TyExpr"
    cod: "TyExpr"


@dataclass(frozen=True)
class SigmaF:
    dom: "TyExpr"
    cod: "TyExpr"


@dataclass(frozen=True)
class IdT:
    ty: "TyExpr"
    left: "TmExpr"
    right: "TmExpr"


@dataclass(frozen=True)
class Nat:
    pass


@dataclass(frozen=True)
class N0:
    pass


@dataclass(frozen=True)
class Sum:
    left: "TyExpr"
    right: "TyExpr"


@dataclass(frozen=True)
class U:
    level: int


@dataclass(frozen=True)
class Br:
    ty: "TyExpr"


@dataclass(frozen=True)
class TySub:
    ty: "TyExpr"
    sub: SubExpr


# Terms of a universe also stand for types.
TyExpr = Union[PiF, SigmaF, IdT, Nat, N0, Sum, U, Br, TySub]

# ---------------------------------------------------------------------------
# Terms
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Var:
    pass


@dataclass(frozen=True)
class Lam:
    dom: TyExpr
    cod: TyExpr
    body: "TmExpr"


@dataclass(frozen=True)
class App:
    dom: TyExpr
    cod: TyExpr
    fn: "TmExpr"
    arg: "TmExpr"


@dataclass(frozen=True)
class Pr:
    first: "TmExpr"
    second: "TmExpr"


@dataclass(frozen=True)
class Pr1:
    tm: "TmExpr"


@dataclass(frozen=True)
class Pr2:
    tm: "TmExpr"


@dataclass(frozen=True)
class Rr:
    tm: "TmExpr"


@dataclass(frozen=True)
class Zero:
    pass


@dataclass(frozen=True)
class Succ:
    tm: "TmExpr"


@dataclass(frozen=True)
class Rec:
    motive: TyExpr
    base: "TmExpr"
    step: "TmExpr"
    tm: "TmExpr"


@dataclass(frozen=True)
class R0:
    motive: TyExpr
    tm: "TmExpr"


@dataclass(frozen=True)
class Lf:
    left: TyExpr
    right: TyExpr
    tm: "TmExpr"


@dataclass(frozen=True)
class Rg:
    left: TyExpr
    right: TyExpr
    tm: "TmExpr"


@dataclass(frozen=True)
class SumRec:
    left: TyExpr
    right: TyExpr
    motive: TyExpr
    on_left: "TmExpr"
    on_right: "TmExpr"
    tm: "TmExpr"


@dataclass(frozen=True)
class BrIntro:
    tm: "TmExpr"


@dataclass(frozen=True)
class Wh:
    ty: TyExpr
    motive: TyExpr
    tm: "TmExpr"
    body: "TmExpr"


@dataclass(frozen=True)
class TmSub:
    tm: "TmExpr"
    sub: SubExpr


TmExpr = Union[
    Var, Lam, App, Pr, Pr1, Pr2, Rr, Zero, Succ, Rec, R0, Lf, Rg, SumRec, BrIntro, Wh, TmSub
]

TYPE_FORMERS = (PiF, SigmaF, IdT, Nat, N0, Sum, U, Br, TySub)
TERM_FORMERS = (Var, Lam, App, Pr, Pr1, Pr2, Rr, Zero, Succ, Rec, R0, Lf, Rg, SumRec, BrIntro, Wh, TmSub)
SUB_FORMERS = (Id, Comp, Down, Pair, Phi, Els, Lift, StepSub, SumSubLf, SumSubRg, PrX, PrY, BrSb)
CTX_FORMERS = (Empty, Ext)

Expr = Union[CtxExpr, SubExpr, TyExpr, TmExpr]

# ---------------------------------------------------------------------------
# Judgments and files
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CtxValid:
    ctx: CtxExpr


@dataclass(frozen=True)
class CtxEq:
    left: CtxExpr
    right: CtxExpr


@dataclass(frozen=True)
class IsTy:
    ctx: CtxExpr
    ty: TyExpr


@dataclass(frozen=True)
class TyEq:
    ctx: CtxExpr
    left: TyExpr
    right: TyExpr


@dataclass(frozen=True)
class Elt:
    ctx: CtxExpr
    tm: TmExpr
    ty: TyExpr


@dataclass(frozen=True)
class EltEq:
    ctx: CtxExpr
    left: TmExpr
    right: TmExpr
    ty: TyExpr


@dataclass(frozen=True)
class IsSub:
    sub: SubExpr
    dom: CtxExpr
    cod: CtxExpr


@dataclass(frozen=True)
class SubEq:
    left: SubExpr
    right: SubExpr
    dom: CtxExpr
    cod: CtxExpr


Judgment = Union[CtxValid, CtxEq, IsTy, TyEq, Elt, EltEq, IsSub, SubEq]


@dataclass(frozen=True)
class Located:
    """A judgment with the source line it starts on."""

    judgment: Judgment
    line: int = 0


@dataclass(frozen=True)
class SourceFile:
    defs: Tuple[Tuple[str, Expr], ...] = ()
    judgments: Tuple[Located, ...] = ()

    @property
    def def_map(self) -> Dict[str, Expr]:
        return dict(self.defs)
