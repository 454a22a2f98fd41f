"""The rule catalog: one instance generator per inference rule label.

Generators are registered with ``@rule(label, group)``. Each returns an
``Instance`` whose premises, when they hold, must make the conclusion hold
in the set model. ``catalog()`` refuses to run when a label of
``EXPECTED_LABELS`` has no generator.
"""

from __future__ import annotations

from typing import Callable, Dict, List, Optional, Sequence, Tuple

from ..syntax.ast import (
    App,
    Br,
    BrIntro,
    BrSb,
    Comp,
    CtxEq,
    CtxExpr,
    CtxValid,
    Down,
    Elt,
    EltEq,
    Els,
    Empty,
    Ext,
    Id,
    IdT,
    IsSub,
    IsTy,
    Judgment,
    Lam,
    Lf,
    Lift,
    N0,
    Nat,
    Pair,
    Phi,
    PiF,
    Pr,
    Pr1,
    Pr2,
    PrX,
    PrY,
    R0,
    Rec,
    Rg,
    Rr,
    SigmaF,
    StepSub,
    SubEq,
    Succ,
    Sum,
    SumRec,
    SumSubLf,
    SumSubRg,
    TmExpr,
    TmSub,
    TyEq,
    TyExpr,
    TySub,
    U,
    Var,
    Wh,
    Zero,
)
from .fixtures import (
    BOOL,
    BR_UNIT,
    FALSE,
    FINITE_TYPES,
    ID_BOOL,
    IS_TRUE,
    N0_CONTEXTS,
    NOT,
    NOT_BODY,
    ONE,
    SAMPLES,
    SMALL,
    SMALL_TYPES,
    THREE,
    TRUE,
    TT,
    UNIT,
    Gen,
    ctx,
    lift_as,
    n_sub,
    terms_of,
)
from .models import Instance, RuleCase

Generator = Callable[[Gen], Instance]

CATALOG: Dict[str, RuleCase] = {}
CONTROLS: Dict[str, RuleCase] = {}


def rule(label: str, group: str, registry: Optional[Dict[str, RuleCase]] = None):
    """Register the decorated generator under ``label``."""

    target = CATALOG if registry is None else registry

    def register(fn: Generator) -> Generator:
        if label in target:
            raise ValueError(f"duplicate rule label {label}")
        target[label] = RuleCase(label, group, fn)
        return fn

    return register


def _inst(premises: Sequence[Judgment], conclusion: Judgment) -> Instance:
    return Instance(tuple(premises), conclusion)


def _ordered(g: Gen, triple: Tuple) -> Tuple:
    items = list(triple)
    g.rnd.shuffle(items)
    return tuple(items)


EQUAL_CTX_TRIPLES = (
    (ctx(UNIT), ctx(BR_UNIT), ctx(Br(BOOL))),
    (ctx(BOOL), ctx(Sum(UNIT, BR_UNIT)), ctx(BOOL)),
)

EQUAL_TY_TRIPLES = (
    (UNIT, BR_UNIT, Br(BOOL)),
    (BOOL, Sum(UNIT, BR_UNIT), BOOL),
)

EQUAL_TM_TRIPLES = (
    (BOOL, TRUE, App(BOOL, BOOL, ID_BOOL, TRUE), App(BOOL, BOOL, NOT, FALSE)),
    (Br(BOOL), BrIntro(TRUE), BrIntro(FALSE), BrIntro(App(BOOL, BOOL, NOT, TRUE))),
    (UNIT, TT, Pr1(Pr(TT, TRUE)), Pr2(Pr(TRUE, TT))),
)

# ----- Presuppositions -----

PRESUP = "presupposition"


@rule("ctx-eq-presup-l", PRESUP)
def _ctx_eq_presup_l(g: Gen) -> Instance:
    left, right = g.equal_ctxs()
    return _inst([CtxEq(left, right)], CtxValid(left))


@rule("ctx-eq-presup-r", PRESUP)
def _ctx_eq_presup_r(g: Gen) -> Instance:
    left, right = g.equal_ctxs()
    return _inst([CtxEq(left, right)], CtxValid(right))


@rule("sub-presup-dom", PRESUP)
def _sub_presup_dom(g: Gen) -> Instance:
    gamma = g.ctx()
    delta, h = g.sub_into(gamma)
    return _inst([IsSub(h, delta, gamma)], CtxValid(delta))


@rule("sub-presup-cod", PRESUP)
def _sub_presup_cod(g: Gen) -> Instance:
    gamma = g.ctx()
    delta, h = g.sub_into(gamma)
    return _inst([IsSub(h, delta, gamma)], CtxValid(gamma))


@rule("ty-presup-ctx", PRESUP)
def _ty_presup_ctx(g: Gen) -> Instance:
    gamma = g.ctx()
    return _inst([IsTy(gamma, g.ty(gamma))], CtxValid(gamma))


@rule("tyeq-presup-l", PRESUP)
def _tyeq_presup_l(g: Gen) -> Instance:
    gamma = g.ctx()
    a, b = g.equal_types_in(gamma)
    return _inst([TyEq(gamma, a, b)], IsTy(gamma, a))


@rule("tyeq-presup-r", PRESUP)
def _tyeq_presup_r(g: Gen) -> Instance:
    gamma = g.ctx()
    a, b = g.equal_types_in(gamma)
    return _inst([TyEq(gamma, a, b)], IsTy(gamma, b))


@rule("elt-presup-ty", PRESUP)
def _elt_presup_ty(g: Gen) -> Instance:
    gamma = g.ctx()
    ty, tm = g.sample(gamma)
    return _inst([Elt(gamma, tm, ty)], IsTy(gamma, ty))


@rule("subeq-presup-l", PRESUP)
def _subeq_presup_l(g: Gen) -> Instance:
    gamma = g.ctx()
    delta, f, f2 = g.equal_subs(gamma)
    return _inst([SubEq(f, f2, delta, gamma)], IsSub(f, delta, gamma))


@rule("subeq-presup-r", PRESUP)
def _subeq_presup_r(g: Gen) -> Instance:
    gamma = g.ctx()
    delta, f, f2 = g.equal_subs(gamma)
    return _inst([SubEq(f, f2, delta, gamma)], IsSub(f2, delta, gamma))


@rule("elteq-presup-l", PRESUP)
def _elteq_presup_l(g: Gen) -> Instance:
    gamma = g.ctx()
    ty, a, b = g.equal_terms_in(gamma)
    return _inst([EltEq(gamma, a, b, ty)], Elt(gamma, a, ty))


@rule("elteq-presup-r", PRESUP)
def _elteq_presup_r(g: Gen) -> Instance:
    gamma = g.ctx()
    ty, a, b = g.equal_terms_in(gamma)
    return _inst([EltEq(gamma, a, b, ty)], Elt(gamma, b, ty))


# ----- Substitutions and general equality -----

SUBST = "substitution"


@rule("ctx-refl", SUBST)
def _ctx_refl(g: Gen) -> Instance:
    gamma = g.ctx()
    return _inst([CtxValid(gamma)], CtxEq(gamma, gamma))


@rule("ctx-sym", SUBST)
def _ctx_sym(g: Gen) -> Instance:
    left, right = g.equal_ctxs()
    return _inst([CtxEq(left, right)], CtxEq(right, left))


@rule("ctx-trans", SUBST)
def _ctx_trans(g: Gen) -> Instance:
    a, b, c = _ordered(g, g.pick(EQUAL_CTX_TRIPLES))
    return _inst([CtxEq(a, b), CtxEq(b, c)], CtxEq(a, c))


@rule("sub-refl", SUBST)
def _sub_refl(g: Gen) -> Instance:
    gamma = g.ctx()
    delta, h = g.sub_into(gamma)
    return _inst([IsSub(h, delta, gamma)], SubEq(h, h, delta, gamma))


@rule("sub-sym", SUBST)
def _sub_sym(g: Gen) -> Instance:
    gamma = g.ctx()
    delta, f, f2 = g.equal_subs(gamma)
    return _inst([SubEq(f, f2, delta, gamma)], SubEq(f2, f, delta, gamma))


@rule("sub-trans", SUBST)
def _sub_trans(g: Gen) -> Instance:
    gamma = g.ctx()
    delta, h = g.sub_into(gamma)
    a, b, c = _ordered(g, (h, Comp(h, Id(delta)), Comp(Id(gamma), h)))
    return _inst([SubEq(a, b, delta, gamma), SubEq(b, c, delta, gamma)], SubEq(a, c, delta, gamma))


@rule("id-sub", SUBST)
def _id_sub(g: Gen) -> Instance:
    gamma = g.ctx()
    return _inst([CtxValid(gamma)], IsSub(Id(gamma), gamma, gamma))


@rule("comp-sub", SUBST)
def _comp_sub(g: Gen) -> Instance:
    phi = g.ctx()
    delta, f = g.sub_into(phi)
    gamma, h = g.sub_into(delta)
    return _inst([IsSub(h, gamma, delta), IsSub(f, delta, phi)], IsSub(Comp(f, h), gamma, phi))


@rule("comp-id-r", SUBST)
def _comp_id_r(g: Gen) -> Instance:
    gamma = g.ctx()
    delta, h = g.sub_into(gamma)
    return _inst([IsSub(h, delta, gamma)], SubEq(Comp(h, Id(delta)), h, delta, gamma))


@rule("comp-id-l", SUBST)
def _comp_id_l(g: Gen) -> Instance:
    gamma = g.ctx()
    delta, h = g.sub_into(gamma)
    return _inst([IsSub(h, delta, gamma)], SubEq(Comp(Id(gamma), h), h, delta, gamma))


@rule("comp-assoc", SUBST)
def _comp_assoc(g: Gen) -> Instance:
    xi = g.ctx()
    phi, f = g.sub_into(xi)
    delta, k = g.sub_into(phi)
    gamma, h = g.sub_into(delta)
    return _inst(
        [IsSub(h, gamma, delta), IsSub(k, delta, phi), IsSub(f, phi, xi)],
        SubEq(Comp(Comp(f, k), h), Comp(f, Comp(k, h)), gamma, xi),
    )


@rule("comp-cong", SUBST)
def _comp_cong(g: Gen) -> Instance:
    phi = g.ctx()
    delta, f, f2 = g.equal_subs(phi)
    gamma, h, h2 = g.equal_subs(delta)
    return _inst(
        [SubEq(h, h2, gamma, delta), SubEq(f, f2, delta, phi)],
        SubEq(Comp(f, h), Comp(f2, h2), gamma, phi),
    )


@rule("subst-trp", SUBST)
def _subst_trp(g: Gen) -> Instance:
    left, right = g.equal_ctxs()
    return _inst([CtxEq(left, right)], IsSub(Phi(left, right), left, right))


@rule("subst-trp-irr", SUBST)
def _subst_trp_irr(g: Gen) -> Instance:
    left, right = g.equal_ctxs()
    p = CtxEq(left, right)
    return _inst([p, p], SubEq(Phi(left, right), Phi(left, right), left, right))


@rule("subst-trp-id", SUBST)
def _subst_trp_id(g: Gen) -> Instance:
    gamma = g.ctx()
    return _inst([CtxEq(gamma, gamma)], SubEq(Phi(gamma, gamma), Id(gamma), gamma, gamma))


@rule("subst-trp-fun", SUBST)
def _subst_trp_fun(g: Gen) -> Instance:
    a, b, c = _ordered(g, g.pick(EQUAL_CTX_TRIPLES))
    return _inst(
        [CtxEq(a, b), CtxEq(b, c), CtxEq(a, c)],
        SubEq(Comp(Phi(b, c), Phi(a, b)), Phi(a, c), a, c),
    )


@rule("tyrefl", SUBST)
def _tyrefl(g: Gen) -> Instance:
    gamma = g.ctx()
    ty = g.ty(gamma)
    return _inst([IsTy(gamma, ty)], TyEq(gamma, ty, ty))


@rule("tysym", SUBST)
def _tysym(g: Gen) -> Instance:
    gamma = g.ctx()
    a, b = g.equal_types_in(gamma)
    return _inst([TyEq(gamma, a, b)], TyEq(gamma, b, a))


@rule("tytra", SUBST)
def _tytra(g: Gen) -> Instance:
    gamma = g.ctx()
    a, b, c = _ordered(g, g.pick(EQUAL_TY_TRIPLES))
    return _inst([TyEq(gamma, a, b), TyEq(gamma, b, c)], TyEq(gamma, a, c))


@rule("tmrefl", SUBST)
def _tmrefl(g: Gen) -> Instance:
    gamma = g.ctx()
    ty, tm = g.sample(gamma)
    return _inst([Elt(gamma, tm, ty)], EltEq(gamma, tm, tm, ty))


@rule("tmsym", SUBST)
def _tmsym(g: Gen) -> Instance:
    gamma = g.ctx()
    ty, a, b = g.equal_terms_in(gamma)
    return _inst([EltEq(gamma, a, b, ty)], EltEq(gamma, b, a, ty))


@rule("tmtra", SUBST)
def _tmtra(g: Gen) -> Instance:
    gamma = g.ctx()
    ty, *terms = g.pick(EQUAL_TM_TRIPLES)
    a, b, c = _ordered(g, tuple(terms))
    return _inst([EltEq(gamma, a, b, ty), EltEq(gamma, b, c, ty)], EltEq(gamma, a, c, ty))


@rule("elttyeq", SUBST)
def _elttyeq(g: Gen) -> Instance:
    gamma = g.ctx()
    a, b = g.equal_types()
    tm = g.term(a)
    return _inst([Elt(gamma, tm, a), TyEq(gamma, a, b)], Elt(gamma, tm, b))


@rule("elteqtyeq", SUBST)
def _elteqtyeq(g: Gen) -> Instance:
    gamma = g.ctx()
    a, b = g.equal_types()
    left, right = g.equal_terms_of(a)
    return _inst([EltEq(gamma, left, right, a), TyEq(gamma, a, b)], EltEq(gamma, left, right, b))


@rule("ty-subst", SUBST)
def _ty_subst(g: Gen) -> Instance:
    gamma = g.ctx()
    ty = g.ty(gamma)
    delta, h = g.sub_into(gamma)
    return _inst([IsTy(gamma, ty), IsSub(h, delta, gamma)], IsTy(delta, TySub(ty, h)))


@rule("tyeq-subst", SUBST)
def _tyeq_subst(g: Gen) -> Instance:
    gamma = g.ctx()
    a, b = g.equal_types_in(gamma)
    delta, h = g.sub_into(gamma)
    return _inst(
        [TyEq(gamma, a, b), IsSub(h, delta, gamma)], TyEq(delta, TySub(a, h), TySub(b, h))
    )


@rule("tyeq-subst2", SUBST)
def _tyeq_subst2(g: Gen) -> Instance:
    gamma = g.ctx()
    ty = g.ty(gamma)
    delta, f, f2 = g.equal_subs(gamma)
    return _inst(
        [IsTy(gamma, ty), SubEq(f, f2, delta, gamma)], TyEq(delta, TySub(ty, f), TySub(ty, f2))
    )


@rule("tysubst-id", SUBST)
def _tysubst_id(g: Gen) -> Instance:
    gamma = g.ctx()
    ty = g.ty(gamma)
    return _inst([IsTy(gamma, ty)], TyEq(gamma, TySub(ty, Id(gamma)), ty))


@rule("tysubst-com", SUBST)
def _tysubst_com(g: Gen) -> Instance:
    gamma = g.ctx()
    ty = g.ty(gamma)
    delta, f = g.sub_into(gamma)
    phi, h = g.sub_into(delta)
    return _inst(
        [IsTy(gamma, ty), IsSub(h, phi, delta), IsSub(f, delta, gamma)],
        TyEq(phi, TySub(ty, Comp(f, h)), TySub(TySub(ty, f), h)),
    )


@rule("elt-subst", SUBST)
def _elt_subst(g: Gen) -> Instance:
    gamma = g.ctx()
    ty, tm = g.sample(gamma)
    delta, h = g.sub_into(gamma)
    return _inst(
        [Elt(gamma, tm, ty), IsSub(h, delta, gamma)], Elt(delta, TmSub(tm, h), TySub(ty, h))
    )


@rule("elteq-subst", SUBST)
def _elteq_subst(g: Gen) -> Instance:
    gamma = g.ctx()
    ty, a, b = g.equal_terms_in(gamma)
    delta, h = g.sub_into(gamma)
    return _inst(
        [EltEq(gamma, a, b, ty), IsSub(h, delta, gamma)],
        EltEq(delta, TmSub(a, h), TmSub(b, h), TySub(ty, h)),
    )


@rule("elteq-subst2", SUBST)
def _elteq_subst2(g: Gen) -> Instance:
    gamma = g.ctx()
    ty, tm = g.sample(gamma)
    delta, f, f2 = g.equal_subs(gamma)
    return _inst(
        [Elt(gamma, tm, ty), SubEq(f, f2, delta, gamma)],
        EltEq(delta, TmSub(tm, f), TmSub(tm, f2), TySub(ty, f)),
    )


@rule("eltsubst-id", SUBST)
def _eltsubst_id(g: Gen) -> Instance:
    gamma = g.ctx()
    ty, tm = g.sample(gamma)
    return _inst([Elt(gamma, tm, ty)], EltEq(gamma, TmSub(tm, Id(gamma)), tm, ty))


@rule("eltsubst-com", SUBST)
def _eltsubst_com(g: Gen) -> Instance:
    gamma = g.ctx()
    ty, tm = g.sample(gamma)
    delta, f = g.sub_into(gamma)
    phi, h = g.sub_into(delta)
    fh = Comp(f, h)
    return _inst(
        [Elt(gamma, tm, ty), IsSub(h, phi, delta), IsSub(f, delta, gamma)],
        EltEq(phi, TmSub(tm, fh), TmSub(TmSub(tm, f), h), TySub(ty, fh)),
    )


# ----- Context extension -----

EXT = "extension"


def _last(ty: TyExpr) -> TyExpr:
    return TySub(ty, Down(ty))


def _transport_premises(g: Gen) -> Tuple[CtxExpr, CtxExpr, TyExpr, TyExpr, List[Judgment]]:
    gamma, delta = g.equal_ctxs()
    a, b = g.equal_types()
    premises = [
        IsTy(gamma, a),
        IsTy(delta, b),
        CtxEq(gamma, delta),
        TyEq(gamma, a, TySub(b, Phi(gamma, delta))),
    ]
    return gamma, delta, a, b, premises


def _ext_parts(g: Gen):
    """``(Γ, Δ, f, A, a)`` with ``f : Δ → Γ`` and ``a :: A[f]``."""

    gamma = g.ctx()
    delta, f = g.sub_into(gamma)
    if isinstance(gamma, Ext) and terms_of(gamma.ty) and g.coin(0.3):
        return gamma, delta, f, _last(gamma.ty), TmSub(Var(), f)
    ty, tm = g.sample()
    return gamma, delta, f, ty, tm


def _ext_premises(gamma, delta, f, ty, tm) -> List[Judgment]:
    return [IsSub(f, delta, gamma), IsTy(gamma, ty), Elt(delta, tm, TySub(ty, f))]


@rule("ctx-empty", EXT)
def _ctx_empty(g: Gen) -> Instance:
    return _inst([], CtxValid(Empty()))


@rule("ctx-ext", EXT)
def _ctx_ext(g: Gen) -> Instance:
    gamma = g.ctx()
    ty = g.ty(gamma)
    return _inst([IsTy(gamma, ty)], CtxValid(Ext(gamma, ty)))


@rule("ext-eq'", EXT)
def _ext_eq1(g: Gen) -> Instance:
    gamma = g.ctx()
    a, b = g.equal_types_in(gamma)
    return _inst(
        [IsTy(gamma, a), IsTy(gamma, b), TyEq(gamma, a, b)], CtxEq(Ext(gamma, a), Ext(gamma, b))
    )


@rule("ext-eq''", EXT)
def _ext_eq2(g: Gen) -> Instance:
    gamma, delta, a, b, premises = _transport_premises(g)
    return _inst(premises, CtxEq(Ext(gamma, a), Ext(delta, b)))


@rule("down", EXT)
def _down(g: Gen) -> Instance:
    gamma = g.ctx()
    ty = g.ty(gamma)
    return _inst([IsTy(gamma, ty)], IsSub(Down(ty), Ext(gamma, ty), gamma))


@rule("down-cong", EXT)
def _down_cong(g: Gen) -> Instance:
    gamma, delta, a, b, premises = _transport_premises(g)
    ga, db = Ext(gamma, a), Ext(delta, b)
    return _inst(
        premises,
        SubEq(Comp(Phi(gamma, delta), Down(a)), Comp(Down(b), Phi(ga, db)), ga, delta),
    )


@rule("asm", EXT)
def _asm(g: Gen) -> Instance:
    gamma = g.ctx()
    ty = g.ty(gamma)
    return _inst([IsTy(gamma, ty)], Elt(Ext(gamma, ty), Var(), _last(ty)))


@rule("asm-cong", EXT)
def _asm_cong(g: Gen) -> Instance:
    gamma, delta, a, b, premises = _transport_premises(g)
    ga, db = Ext(gamma, a), Ext(delta, b)
    return _inst(premises, EltEq(ga, Var(), TmSub(Var(), Phi(ga, db)), _last(a)))


@rule("ext", EXT)
def _ext(g: Gen) -> Instance:
    gamma, delta, f, ty, tm = _ext_parts(g)
    return _inst(_ext_premises(gamma, delta, f, ty, tm), IsSub(Pair(f, ty, tm), delta, Ext(gamma, ty)))


@rule("ext-irr", EXT)
def _ext_irr(g: Gen) -> Instance:
    gamma, delta, f, ty, tm = _ext_parts(g)
    premises = _ext_premises(gamma, delta, f, ty, tm)
    pair = Pair(f, ty, tm)
    return _inst(premises + premises[-1:], SubEq(pair, pair, delta, Ext(gamma, ty)))


@rule("ext-cong", EXT)
def _ext_cong(g: Gen) -> Instance:
    gamma = g.ctx()
    delta, f, f2 = g.equal_subs(gamma)
    ty, a, b = g.equal_terms()
    return _inst(
        [
            SubEq(f, f2, delta, gamma),
            IsTy(gamma, ty),
            Elt(delta, a, TySub(ty, f)),
            Elt(delta, b, TySub(ty, f2)),
            EltEq(delta, a, b, TySub(ty, f)),
        ],
        SubEq(Pair(f, ty, a), Pair(f2, ty, b), delta, Ext(gamma, ty)),
    )


@rule("ext-prop1", EXT)
def _ext_prop1(g: Gen) -> Instance:
    gamma, delta, f, ty, tm = _ext_parts(g)
    return _inst(
        _ext_premises(gamma, delta, f, ty, tm),
        SubEq(Comp(Down(ty), Pair(f, ty, tm)), f, delta, gamma),
    )


@rule("ext-prop2", EXT)
def _ext_prop2(g: Gen) -> Instance:
    gamma, delta, f, ty, tm = _ext_parts(g)
    return _inst(
        _ext_premises(gamma, delta, f, ty, tm),
        EltEq(delta, TmSub(Var(), Pair(f, ty, tm)), tm, TySub(ty, f)),
    )


@rule("ext-prop3", EXT)
def _ext_prop3(g: Gen) -> Instance:
    gamma = g.ctx()
    ty = g.ty(gamma)
    ga = Ext(gamma, ty)
    return _inst(
        [IsTy(gamma, ty), Elt(ga, Var(), _last(ty))],
        SubEq(Pair(Down(ty), ty, Var()), Id(ga), ga, ga),
    )


@rule("ext-comp", EXT)
def _ext_comp(g: Gen) -> Instance:
    gamma, delta, f, ty, tm = _ext_parts(g)
    theta, h = g.sub_into(delta)
    return _inst(
        [IsSub(h, theta, delta)]
        + _ext_premises(gamma, delta, f, ty, tm)
        + [Elt(theta, TmSub(tm, h), TySub(ty, Comp(f, h)))],
        SubEq(
            Comp(Pair(f, ty, tm), h),
            Pair(Comp(f, h), ty, TmSub(tm, h)),
            theta,
            Ext(gamma, ty),
        ),
    )


@rule("els", EXT)
def _els(g: Gen) -> Instance:
    gamma = g.ctx()
    ty, tm = g.sample(gamma)
    return _inst([Elt(gamma, tm, ty)], IsSub(Els(ty, tm), gamma, Ext(gamma, ty)))


@rule("els-exp", EXT)
def _els_exp(g: Gen) -> Instance:
    gamma = g.ctx()
    ty, tm = g.sample(gamma)
    return _inst(
        [Elt(gamma, tm, ty)],
        SubEq(Els(ty, tm), Pair(Id(gamma), ty, tm), gamma, Ext(gamma, ty)),
    )


@rule("qq", EXT)
def _qq(g: Gen) -> Instance:
    gamma = g.ctx()
    ty = g.ty(gamma)
    delta, h = g.sub_into(gamma)
    return _inst(
        [IsTy(gamma, ty), IsSub(h, delta, gamma)],
        IsSub(Lift(ty, h), Ext(delta, TySub(ty, h)), Ext(gamma, ty)),
    )


@rule("qq-exp", EXT)
def _qq_exp(g: Gen) -> Instance:
    gamma = g.ctx()
    ty = g.ty(gamma)
    delta, h = g.sub_into(gamma)
    th = TySub(ty, h)
    to_base = Comp(h, Down(th))
    dom = Ext(delta, th)
    return _inst(
        [IsTy(gamma, ty), IsSub(h, delta, gamma), Elt(dom, Var(), TySub(ty, to_base))],
        SubEq(Lift(ty, h), Pair(to_base, ty, Var()), dom, Ext(gamma, ty)),
    )


# ----- Pi -----

PI = "pi"


def _bodies(dom: TyExpr, cod: TyExpr) -> Tuple[TmExpr, ...]:
    """Terms of ``cod`` in a context ending in ``dom``."""

    out = terms_of(cod)
    if dom == cod:
        out += (Var(),)
    if dom == cod == BOOL:
        out += (NOT_BODY,)
    return out


def _pi_parts(g: Gen) -> Tuple[CtxExpr, TyExpr, TyExpr, TmExpr]:
    gamma = g.ctx()
    dom, cod = g.small(), g.small()
    return gamma, dom, cod, g.pick(_bodies(dom, cod))


def _function(g: Gen, dom: TyExpr, cod: TyExpr) -> TmExpr:
    if dom == cod == BOOL and g.coin(0.3):
        return g.term(PiF(BOOL, BOOL))
    return Lam(dom, cod, g.pick(_bodies(dom, cod)))


def _equal_functions(g: Gen, dom: TyExpr, cod: TyExpr) -> Tuple[TmExpr, TmExpr]:
    if dom == cod == BOOL and g.coin(0.4):
        return g.equal_terms_of(PiF(BOOL, BOOL))
    c = _function(g, dom, cod)
    return c, c


def _family_premises(gamma: CtxExpr, dom: TyExpr, cod: TyExpr) -> List[Judgment]:
    return [IsTy(gamma, dom), IsTy(Ext(gamma, dom), cod)]


@rule("Pi-f", PI)
def _pi_f(g: Gen) -> Instance:
    gamma = g.ctx()
    dom = g.small()
    cod = g.pick(SMALL + ((IS_TRUE,) if dom == BOOL else ()))
    return _inst(_family_premises(gamma, dom, cod), IsTy(gamma, PiF(dom, cod)))


@rule("Pi-i", PI)
def _pi_i(g: Gen) -> Instance:
    gamma, dom, cod, body = _pi_parts(g)
    return _inst(
        _family_premises(gamma, dom, cod) + [Elt(Ext(gamma, dom), body, cod)],
        Elt(gamma, Lam(dom, cod, body), PiF(dom, cod)),
    )


@rule("Pi-e", PI)
def _pi_e(g: Gen) -> Instance:
    gamma, dom, cod, _ = _pi_parts(g)
    c, a = _function(g, dom, cod), g.term(dom)
    return _inst(
        _family_premises(gamma, dom, cod)
        + [Elt(gamma, c, PiF(dom, cod)), Elt(gamma, a, dom)],
        Elt(gamma, App(dom, cod, c, a), TySub(cod, Els(dom, a))),
    )


@rule("Pi-beta-gen", PI)
def _pi_beta_gen(g: Gen) -> Instance:
    gamma, dom, cod, body = _pi_parts(g)
    lam, a = Lam(dom, cod, body), g.term(dom)
    return _inst(
        _family_premises(gamma, dom, cod) + [Elt(gamma, lam, PiF(dom, cod)), Elt(gamma, a, dom)],
        EltEq(
            gamma,
            App(dom, cod, lam, a),
            TmSub(body, Els(dom, a)),
            TySub(cod, Els(dom, a)),
        ),
    )


@rule("Pi-eta-eq-gen", PI)
def _pi_eta_eq_gen(g: Gen) -> Instance:
    gamma, dom, cod, _ = _pi_parts(g)
    c = _function(g, dom, cod)
    ga = Ext(gamma, dom)
    dom_w = _last(dom)
    cod_w = TySub(cod, Lift(dom, Down(dom)))
    c_w = TmSub(c, Down(dom))
    return _inst(
        [
            Elt(gamma, c, PiF(dom, cod)),
            Elt(ga, Var(), dom_w),
            Elt(ga, c_w, PiF(dom_w, cod_w)),
        ],
        EltEq(gamma, Lam(dom, cod, App(dom_w, cod_w, c_w, Var())), c, PiF(dom, cod)),
    )


@rule("Pi-f-sub", PI)
def _pi_f_sub(g: Gen) -> Instance:
    gamma, dom, cod, _ = _pi_parts(g)
    delta, h = g.sub_into(gamma)
    return _inst(
        _family_premises(gamma, dom, cod) + [IsSub(h, delta, gamma)],
        TyEq(delta, TySub(PiF(dom, cod), h), PiF(TySub(dom, h), TySub(cod, Lift(dom, h)))),
    )


@rule("lambda-sub", PI)
def _lambda_sub(g: Gen) -> Instance:
    gamma, dom, cod, body = _pi_parts(g)
    delta, h = g.sub_into(gamma)
    up = Lift(dom, h)
    return _inst(
        _family_premises(gamma, dom, cod)
        + [Elt(Ext(gamma, dom), body, cod), IsSub(h, delta, gamma)],
        EltEq(
            delta,
            TmSub(Lam(dom, cod, body), h),
            Lam(TySub(dom, h), TySub(cod, up), TmSub(body, up)),
            TySub(PiF(dom, cod), h),
        ),
    )


@rule("Pi-e-sub-gen", PI)
def _pi_e_sub_gen(g: Gen) -> Instance:
    gamma, dom, cod, _ = _pi_parts(g)
    c, a = _function(g, dom, cod), g.term(dom)
    delta, h = g.sub_into(gamma)
    dom_h, cod_h = TySub(dom, h), TySub(cod, Lift(dom, h))
    return _inst(
        [
            Elt(gamma, c, PiF(dom, cod)),
            Elt(gamma, a, dom),
            IsSub(h, delta, gamma),
            Elt(delta, TmSub(c, h), PiF(dom_h, cod_h)),
            Elt(delta, TmSub(a, h), dom_h),
        ],
        EltEq(
            delta,
            TmSub(App(dom, cod, c, a), h),
            App(dom_h, cod_h, TmSub(c, h), TmSub(a, h)),
            TySub(TySub(cod, Els(dom, a)), h),
        ),
    )


def _former_cong(g: Gen, former) -> Instance:
    gamma = g.ctx()
    dom, dom2 = g.equal_types()
    cod, cod2 = g.equal_types() if g.coin() else (g.small(), None)
    cod2 = cod if cod2 is None else cod2
    ga, ga2 = Ext(gamma, dom), Ext(gamma, dom2)
    return _inst(
        [
            TyEq(gamma, dom, dom2),
            IsTy(ga, cod),
            IsTy(ga2, cod2),
            TyEq(ga, cod, TySub(cod2, Phi(ga, ga2))),
        ],
        TyEq(gamma, former(dom, cod), former(dom2, cod2)),
    )


@rule("Pi-f-cong", PI)
def _pi_f_cong(g: Gen) -> Instance:
    return _former_cong(g, PiF)


@rule("Pi-xi", PI)
def _pi_xi(g: Gen) -> Instance:
    gamma, dom, cod, body = _pi_parts(g)
    pairs = [(body, body)]
    if cod == BOOL:
        pairs.append((TRUE, App(BOOL, BOOL, ID_BOOL, TRUE)))
    if dom == cod:
        pairs.append((Var(), Pr1(Pr(Var(), TT))))
    b, b2 = g.pick(pairs)
    return _inst(
        _family_premises(gamma, dom, cod) + [EltEq(Ext(gamma, dom), b, b2, cod)],
        EltEq(gamma, Lam(dom, cod, b), Lam(dom, cod, b2), PiF(dom, cod)),
    )


@rule("Pi-e-cong", PI)
def _pi_e_cong(g: Gen) -> Instance:
    gamma, dom, cod, _ = _pi_parts(g)
    pi = PiF(dom, cod)
    c, c2 = _equal_functions(g, dom, cod)
    a, a2 = g.equal_terms_of(dom)
    return _inst(
        [
            Elt(gamma, c, pi),
            Elt(gamma, c2, pi),
            EltEq(gamma, c, c2, pi),
            Elt(gamma, a, dom),
            Elt(gamma, a2, dom),
            EltEq(gamma, a, a2, dom),
        ],
        EltEq(gamma, App(dom, cod, c, a), App(dom, cod, c2, a2), TySub(cod, Els(dom, a))),
    )


# ----- Identity -----

ID = "id"


def _two_terms(g: Gen, ty: TyExpr) -> Tuple[TmExpr, TmExpr]:
    return g.term(ty), g.term(ty)


@rule("ID", ID)
def _id_f(g: Gen) -> Instance:
    gamma = g.ctx()
    ty = g.pick(SAMPLES).ty
    a, b = _two_terms(g, ty)
    return _inst(
        [IsTy(gamma, ty), Elt(gamma, a, ty), Elt(gamma, b, ty)], IsTy(gamma, IdT(ty, a, b))
    )


@rule("ID-i", ID)
def _id_i(g: Gen) -> Instance:
    gamma = g.ctx()
    ty, tm = g.sample(gamma)
    return _inst([Elt(gamma, tm, ty)], Elt(gamma, Rr(tm), IdT(ty, tm, tm)))


@rule("ID-e", ID)
def _id_e(g: Gen) -> Instance:
    gamma = g.ctx()
    ty, a, b = g.equal_terms()
    t = Rr(g.pick((a, b)))
    return _inst(
        [Elt(gamma, a, ty), Elt(gamma, b, ty), Elt(gamma, t, IdT(ty, a, b))],
        EltEq(gamma, a, b, ty),
    )


@rule("ID-uip", ID)
def _id_uip(g: Gen) -> Instance:
    gamma = g.ctx()
    ty, a, a2 = g.equal_terms()
    t = Rr(a2)
    id_ty = IdT(ty, a, a)
    return _inst(
        [Elt(gamma, a, ty), Elt(gamma, a, ty), Elt(gamma, t, id_ty)],
        EltEq(gamma, t, Rr(a), id_ty),
    )


@rule("ID-sub-gen", ID)
def _id_sub_gen(g: Gen) -> Instance:
    gamma = g.ctx()
    ty = g.pick(SAMPLES).ty
    a, b = _two_terms(g, ty)
    delta, h = g.sub_into(gamma)
    ty_h = TySub(ty, h)
    return _inst(
        [
            IsSub(h, delta, gamma),
            Elt(gamma, a, ty),
            Elt(gamma, b, ty),
            Elt(delta, TmSub(a, h), ty_h),
            Elt(delta, TmSub(b, h), ty_h),
        ],
        TyEq(delta, TySub(IdT(ty, a, b), h), IdT(ty_h, TmSub(a, h), TmSub(b, h))),
    )


@rule("rr-sub", ID)
def _rr_sub(g: Gen) -> Instance:
    gamma = g.ctx()
    ty, tm = g.sample(gamma)
    delta, h = g.sub_into(gamma)
    return _inst(
        [IsSub(h, delta, gamma), IsTy(gamma, ty), Elt(gamma, tm, ty)],
        EltEq(delta, TmSub(Rr(tm), h), Rr(TmSub(tm, h)), TySub(IdT(ty, tm, tm), h)),
    )


@rule("ID-cong", ID)
def _id_cong(g: Gen) -> Instance:
    gamma = g.ctx()
    ty, ty2 = g.equal_types()
    a, a2 = g.equal_terms_of(ty)
    b, b2 = g.equal_terms_of(ty)
    return _inst(
        [
            Elt(gamma, a, ty),
            Elt(gamma, a2, ty2),
            Elt(gamma, b, ty),
            Elt(gamma, b2, ty2),
            TyEq(gamma, ty, ty2),
            EltEq(gamma, a, a2, ty),
            EltEq(gamma, b, b2, ty),
        ],
        TyEq(gamma, IdT(ty, a, b), IdT(ty2, a2, b2)),
    )


@rule("rr-cong", ID)
def _rr_cong(g: Gen) -> Instance:
    gamma = g.ctx()
    ty, a, b = g.equal_terms()
    return _inst(
        [Elt(gamma, a, ty), EltEq(gamma, a, b, ty)],
        EltEq(gamma, Rr(a), Rr(b), IdT(ty, a, a)),
    )


# ----- Sigma -----

SIGMA = "sigma"


def _sigma_parts(g: Gen) -> Tuple[CtxExpr, TyExpr, TyExpr, TmExpr, TmExpr]:
    """``(Γ, A, B, a, b)`` with ``b :: B[els(a)]``."""

    gamma = g.ctx()
    if g.coin(0.25):
        return gamma, BOOL, IS_TRUE, TRUE, Rr(TRUE)
    dom, cod = g.small(), g.small()
    return gamma, dom, cod, g.term(dom), g.term(cod)


def _pair_premises(gamma, dom, cod, a, b) -> List[Judgment]:
    return [Elt(gamma, a, dom), Elt(gamma, b, TySub(cod, Els(dom, a)))]


@rule("Sigma-f", SIGMA)
def _sigma_f(g: Gen) -> Instance:
    gamma, dom, cod, _, _ = _sigma_parts(g)
    return _inst(_family_premises(gamma, dom, cod), IsTy(gamma, SigmaF(dom, cod)))


@rule("Sigma-i", SIGMA)
def _sigma_i(g: Gen) -> Instance:
    gamma, dom, cod, a, b = _sigma_parts(g)
    return _inst(_pair_premises(gamma, dom, cod, a, b), Elt(gamma, Pr(a, b), SigmaF(dom, cod)))


@rule("Sigma-e-1", SIGMA)
def _sigma_e_1(g: Gen) -> Instance:
    gamma, dom, cod, a, b = _sigma_parts(g)
    c = Pr(a, b)
    return _inst([Elt(gamma, c, SigmaF(dom, cod))], Elt(gamma, Pr1(c), dom))


@rule("Sigma-e-2", SIGMA)
def _sigma_e_2(g: Gen) -> Instance:
    gamma, dom, cod, a, b = _sigma_parts(g)
    c = Pr(a, b)
    return _inst(
        [Elt(gamma, c, SigmaF(dom, cod)), Elt(gamma, Pr1(c), dom)],
        Elt(gamma, Pr2(c), TySub(cod, Els(dom, Pr1(c)))),
    )


@rule("Sigma-c-1", SIGMA)
def _sigma_c_1(g: Gen) -> Instance:
    gamma, dom, cod, a, b = _sigma_parts(g)
    c = Pr(a, b)
    return _inst(
        _pair_premises(gamma, dom, cod, a, b) + [Elt(gamma, c, SigmaF(dom, cod))],
        EltEq(gamma, Pr1(c), a, dom),
    )


@rule("Sigma-c-2", SIGMA)
def _sigma_c_2(g: Gen) -> Instance:
    gamma, dom, cod, a, b = _sigma_parts(g)
    c = Pr(a, b)
    return _inst(
        _pair_premises(gamma, dom, cod, a, b) + [Elt(gamma, c, SigmaF(dom, cod))],
        EltEq(gamma, Pr2(c), b, TySub(cod, Els(dom, a))),
    )


@rule("Sigma-c-eta", SIGMA)
def _sigma_c_eta(g: Gen) -> Instance:
    gamma, dom, cod, a, b = _sigma_parts(g)
    c = Pr(a, b)
    if g.coin():
        dom, cod = BOOL, UNIT
        c = g.term(SigmaF(dom, cod))
    sigma = SigmaF(dom, cod)
    return _inst([Elt(gamma, c, sigma)], EltEq(gamma, c, Pr(Pr1(c), Pr2(c)), sigma))


@rule("Sigma-f-cong", SIGMA)
def _sigma_f_cong(g: Gen) -> Instance:
    return _former_cong(g, SigmaF)


@rule("pr-cong", SIGMA)
def _pr_cong(g: Gen) -> Instance:
    gamma = g.ctx()
    dom, cod = g.small(), g.small()
    a, a2 = g.equal_terms_of(dom)
    b, b2 = g.equal_terms_of(cod)
    return _inst(
        [
            Elt(gamma, a, dom),
            EltEq(gamma, a, a2, dom),
            EltEq(gamma, b, b2, TySub(cod, Els(dom, a))),
        ],
        EltEq(gamma, Pr(a, b), Pr(a2, b2), SigmaF(dom, cod)),
    )


def _equal_pairs(g: Gen) -> Tuple[CtxExpr, TyExpr, TyExpr, TmExpr, TmExpr]:
    gamma = g.ctx()
    dom, cod = g.small(), g.small()
    a, a2 = g.equal_terms_of(dom)
    b = g.term(cod)
    return gamma, dom, cod, Pr(a, b), Pr(a2, b)


@rule("pr1-cong", SIGMA)
def _pr1_cong(g: Gen) -> Instance:
    gamma, dom, cod, c, c2 = _equal_pairs(g)
    sigma = SigmaF(dom, cod)
    return _inst(
        [Elt(gamma, c, sigma), Elt(gamma, c2, sigma), EltEq(gamma, c, c2, sigma)],
        EltEq(gamma, Pr1(c), Pr1(c2), dom),
    )


@rule("pr2-cong", SIGMA)
def _pr2_cong(g: Gen) -> Instance:
    gamma, dom, cod, c, c2 = _equal_pairs(g)
    sigma = SigmaF(dom, cod)
    return _inst(
        [
            Elt(gamma, c, sigma),
            Elt(gamma, c2, sigma),
            EltEq(gamma, c, c2, sigma),
            Elt(gamma, Pr1(c), dom),
        ],
        EltEq(gamma, Pr2(c), Pr2(c2), TySub(cod, Els(dom, Pr1(c)))),
    )


@rule("Sigma-f-sub", SIGMA)
def _sigma_f_sub(g: Gen) -> Instance:
    gamma, dom, cod, _, _ = _sigma_parts(g)
    delta, h = g.sub_into(gamma)
    return _inst(
        _family_premises(gamma, dom, cod) + [IsSub(h, delta, gamma)],
        TyEq(
            delta,
            TySub(SigmaF(dom, cod), h),
            SigmaF(TySub(dom, h), TySub(cod, Lift(dom, h))),
        ),
    )


@rule("pr-sub", SIGMA)
def _pr_sub(g: Gen) -> Instance:
    gamma, dom, cod, a, b = _sigma_parts(g)
    delta, h = g.sub_into(gamma)
    return _inst(
        [IsSub(h, delta, gamma)] + _pair_premises(gamma, dom, cod, a, b),
        EltEq(
            delta,
            TmSub(Pr(a, b), h),
            Pr(TmSub(a, h), TmSub(b, h)),
            TySub(SigmaF(dom, cod), h),
        ),
    )


def _sigma_sub_parts(g: Gen):
    gamma, dom, cod, a, b = _sigma_parts(g)
    delta, h = g.sub_into(gamma)
    c = Pr(a, b)
    dom_h = TySub(dom, h)
    sigma_h = SigmaF(dom_h, TySub(cod, Lift(dom, h)))
    premises = [
        IsSub(h, delta, gamma),
        Elt(gamma, c, SigmaF(dom, cod)),
        Elt(delta, TmSub(c, h), sigma_h),
    ]
    return delta, h, dom, cod, c, dom_h, premises


@rule("pr1-sub", SIGMA)
def _pr1_sub(g: Gen) -> Instance:
    delta, h, _, _, c, dom_h, premises = _sigma_sub_parts(g)
    return _inst(premises, EltEq(delta, TmSub(Pr1(c), h), Pr1(TmSub(c, h)), dom_h))


@rule("pr2-sub", SIGMA)
def _pr2_sub(g: Gen) -> Instance:
    delta, h, dom, cod, c, dom_h, premises = _sigma_sub_parts(g)
    ty = TySub(TySub(cod, Lift(dom, h)), Els(dom_h, Pr1(TmSub(c, h))))
    return _inst(
        premises + [Elt(delta, TmSub(Pr1(c), h), dom_h)],
        EltEq(delta, TmSub(Pr2(c), h), Pr2(TmSub(c, h)), ty),
    )


# ----- Natural numbers -----

NAT = "nat"

# Counts up to the argument: the motive at n is the identity type on n.
_COUNT = IdT(TySub(Nat(), Down(Nat())), Var(), Var())

MOTIVES: Tuple[Tuple[TyExpr, TmExpr, TmExpr], ...] = (
    (Nat(), Zero(), Succ(Var())),
    (Nat(), ONE, Var()),
    (BOOL, TRUE, Var()),
    (BOOL, FALSE, App(BOOL, BOOL, NOT, Var())),
    (_COUNT, Rr(Zero()), Succ(TmSub(Var(), Down(_COUNT)))),
)


def _rec_premises(gamma: CtxExpr, motive: TyExpr, base: TmExpr, step: TmExpr) -> List[Judgment]:
    gn = Ext(gamma, Nat())
    return [
        IsTy(gn, motive),
        Elt(gamma, base, TySub(motive, Els(Nat(), Zero()))),
        Elt(Ext(gn, motive), step, TySub(TySub(motive, StepSub(gamma)), Down(motive))),
    ]


def _at(motive: TyExpr, n: TmExpr) -> TyExpr:
    return TySub(motive, Els(Nat(), n))


@rule("Nat-f", NAT)
def _nat_f(g: Gen) -> Instance:
    gamma = g.ctx()
    return _inst([CtxValid(gamma)], IsTy(gamma, Nat()))


@rule("Nat-i-0", NAT)
def _nat_i_0(g: Gen) -> Instance:
    gamma = g.ctx()
    return _inst([CtxValid(gamma)], Elt(gamma, Zero(), Nat()))


@rule("Nat-i-s", NAT)
def _nat_i_s(g: Gen) -> Instance:
    gamma = g.ctx()
    a = g.numeral()
    return _inst([Elt(gamma, a, Nat())], Elt(gamma, Succ(a), Nat()))


@rule("Nat-e", NAT)
def _nat_e(g: Gen) -> Instance:
    gamma = g.nat_ctx()
    motive, base, step = g.pick(MOTIVES)
    c = g.numeral(4)
    return _inst(
        _rec_premises(gamma, motive, base, step) + [Elt(gamma, c, Nat())],
        Elt(gamma, Rec(motive, base, step, c), _at(motive, c)),
    )


@rule("Nat-c-0", NAT)
def _nat_c_0(g: Gen) -> Instance:
    gamma = g.nat_ctx()
    motive, base, step = g.pick(MOTIVES)
    return _inst(
        _rec_premises(gamma, motive, base, step),
        EltEq(gamma, Rec(motive, base, step, Zero()), base, _at(motive, Zero())),
    )


@rule("Nat-c-s", NAT)
def _nat_c_s(g: Gen) -> Instance:
    gamma = g.nat_ctx()
    motive, base, step = g.pick(MOTIVES)
    a = g.numeral(7)
    back = Pair(Els(Nat(), a), motive, Rec(motive, base, step, a))
    return _inst(
        _rec_premises(gamma, motive, base, step) + [Elt(gamma, a, Nat())],
        EltEq(gamma, Rec(motive, base, step, Succ(a)), TmSub(step, back), _at(motive, Succ(a))),
    )


@rule("Nat-i-s-cong", NAT)
def _nat_i_s_cong(g: Gen) -> Instance:
    gamma = g.ctx()
    a, b = g.equal_nats()
    return _inst([EltEq(gamma, a, b, Nat())], EltEq(gamma, Succ(a), Succ(b), Nat()))


@rule("Rec-cong", NAT)
def _rec_cong(g: Gen) -> Instance:
    gamma = g.nat_ctx()
    motive, base, step = g.pick(MOTIVES)
    base2 = Pr1(Pr(base, TT)) if g.coin() else base
    c, c2 = g.equal_nats()
    gn = Ext(gamma, Nat())
    gnc = Ext(gn, motive)
    premises = _rec_premises(gamma, motive, base, step)
    premises += [
        Elt(gamma, base2, _at(motive, Zero())),
        Elt(gamma, c, Nat()),
        Elt(gamma, c2, Nat()),
        TyEq(gn, motive, motive),
        EltEq(gamma, base, base2, _at(motive, Zero())),
        EltEq(
            gnc,
            step,
            TmSub(step, Phi(gnc, gnc)),
            TySub(TySub(motive, StepSub(gamma)), Down(motive)),
        ),
        EltEq(gamma, c, c2, Nat()),
    ]
    return _inst(
        premises,
        EltEq(gamma, Rec(motive, base, step, c), Rec(motive, base2, step, c2), _at(motive, c)),
    )


@rule("Nat-sub", NAT)
def _nat_sub(g: Gen) -> Instance:
    gamma = g.ctx()
    delta, h = g.sub_into(gamma)
    return _inst([IsSub(h, delta, gamma)], TyEq(delta, TySub(Nat(), h), Nat()))


@rule("Nat-i-0-sub", NAT)
def _nat_i_0_sub(g: Gen) -> Instance:
    gamma = g.ctx()
    delta, h = g.sub_into(gamma)
    return _inst([IsSub(h, delta, gamma)], EltEq(delta, TmSub(Zero(), h), Zero(), Nat()))


@rule("Nat-i-s-sub", NAT)
def _nat_i_s_sub(g: Gen) -> Instance:
    gamma = g.ctx()
    delta, h = g.sub_into(gamma)
    a = g.nat()
    return _inst(
        [IsSub(h, delta, gamma), Elt(gamma, a, Nat())],
        EltEq(delta, TmSub(Succ(a), h), Succ(TmSub(a, h)), Nat()),
    )


@rule("Rec-sub", NAT)
def _rec_sub(g: Gen) -> Instance:
    gamma = g.nat_ctx()
    motive, base, step = g.pick(MOTIVES)
    c = g.nat()
    delta, h = g.sub_into(gamma)
    down_n = n_sub(h)
    motive_h = TySub(motive, down_n)
    step_h = TmSub(step, Lift(motive, down_n))
    dn = Ext(delta, Nat())
    return _inst(
        [IsSub(h, delta, gamma)]
        + _rec_premises(gamma, motive, base, step)
        + [
            Elt(gamma, c, Nat()),
            Elt(delta, TmSub(base, h), _at(motive_h, Zero())),
            Elt(
                Ext(dn, motive_h),
                step_h,
                TySub(TySub(motive_h, StepSub(delta)), Down(motive_h)),
            ),
        ],
        EltEq(
            delta,
            TmSub(Rec(motive, base, step, c), h),
            Rec(motive_h, TmSub(base, h), step_h, TmSub(c, h)),
            TySub(_at(motive, c), h),
        ),
    )


# ----- Empty type -----

EMPTY_TY = "n0"


def _r0_parts(g: Gen) -> Tuple[CtxExpr, TyExpr]:
    return g.pick(N0_CONTEXTS), g.ty()


@rule("N0", EMPTY_TY)
def _n0(g: Gen) -> Instance:
    gamma = g.ctx()
    return _inst([CtxValid(gamma)], IsTy(gamma, N0()))


@rule("N0-e", EMPTY_TY)
def _n0_e(g: Gen) -> Instance:
    gamma, motive = _r0_parts(g)
    return _inst(
        [IsTy(Ext(gamma, N0()), motive), Elt(gamma, Var(), N0())],
        Elt(gamma, R0(motive, Var()), TySub(motive, Els(N0(), Var()))),
    )


@rule("R0-cong'", EMPTY_TY)
def _r0_cong(g: Gen) -> Instance:
    gamma = g.pick(N0_CONTEXTS)
    motive, motive2 = g.equal_types()
    c, c2 = Var(), g.pick((Var(), TmSub(Var(), Id(gamma))))
    return _inst(
        [
            TyEq(Ext(gamma, N0()), motive, motive2),
            Elt(gamma, c, N0()),
            Elt(gamma, c2, N0()),
            EltEq(gamma, c, c2, N0()),
        ],
        EltEq(gamma, R0(motive, c), R0(motive2, c2), TySub(motive, Els(N0(), c))),
    )


@rule("N0-sub", EMPTY_TY)
def _n0_sub(g: Gen) -> Instance:
    gamma = g.ctx()
    delta, h = g.sub_into(gamma)
    return _inst([IsSub(h, delta, gamma)], TyEq(delta, TySub(N0(), h), N0()))


@rule("R0-sub", EMPTY_TY)
def _r0_sub(g: Gen) -> Instance:
    gamma, motive = _r0_parts(g)
    delta, h = g.sub_into(gamma)
    return _inst(
        [
            IsSub(h, delta, gamma),
            IsTy(Ext(gamma, N0()), motive),
            Elt(gamma, Var(), N0()),
            Elt(delta, TmSub(Var(), h), TySub(N0(), h)),
        ],
        EltEq(
            delta,
            TmSub(R0(motive, Var()), h),
            R0(TySub(motive, lift_as(N0(), h, N0())), TmSub(Var(), h)),
            TySub(TySub(motive, Els(N0(), Var())), h),
        ),
    )


# ----- Binary sums -----

SUM = "sum"


def _cases(g: Gen, left: TyExpr, right: TyExpr) -> Tuple[TyExpr, TmExpr, TmExpr]:
    """A motive over ``left + right`` with its two branches."""

    total = Sum(left, right)
    same = IdT(_last(total), Var(), Var())
    return g.pick(
        (
            (BOOL, TRUE, FALSE),
            (UNIT, TT, TT),
            (total, Lf(left, right, Var()), Rg(left, right, Var())),
            (same, Rr(Lf(left, right, Var())), Rr(Rg(left, right, Var()))),
        )
    )


def _case_premises(gamma, left, right, motive, on_left, on_right) -> List[Judgment]:
    return [
        IsTy(Ext(gamma, Sum(left, right)), motive),
        Elt(Ext(gamma, left), on_left, TySub(motive, SumSubLf(left, right))),
        Elt(Ext(gamma, right), on_right, TySub(motive, SumSubRg(left, right))),
    ]


def _injection(g: Gen, left: TyExpr, right: TyExpr) -> TmExpr:
    if g.coin():
        return Lf(left, right, g.term(left))
    return Rg(left, right, g.term(right))


@rule("Sum", SUM)
def _sum_f(g: Gen) -> Instance:
    gamma = g.ctx()
    left, right = g.ty(gamma), g.ty(gamma)
    return _inst([IsTy(gamma, left), IsTy(gamma, right)], IsTy(gamma, Sum(left, right)))


@rule("lf-pf", SUM)
def _lf_pf(g: Gen) -> Instance:
    gamma = g.ctx()
    left, a = g.sample(gamma)
    right = g.ty(gamma)
    return _inst(
        [IsTy(gamma, right), Elt(gamma, a, left)], Elt(gamma, Lf(left, right, a), Sum(left, right))
    )


@rule("rg-pf", SUM)
def _rg_pf(g: Gen) -> Instance:
    gamma = g.ctx()
    right, b = g.sample(gamma)
    left = g.ty(gamma)
    return _inst(
        [IsTy(gamma, left), Elt(gamma, b, right)], Elt(gamma, Rg(left, right, b), Sum(left, right))
    )


@rule("Sum-e", SUM)
def _sum_e(g: Gen) -> Instance:
    gamma = g.ctx()
    left, right = g.small(), g.small()
    motive, d, e = _cases(g, left, right)
    c = _injection(g, left, right)
    total = Sum(left, right)
    return _inst(
        _case_premises(gamma, left, right, motive, d, e) + [Elt(gamma, c, total)],
        Elt(gamma, SumRec(left, right, motive, d, e, c), TySub(motive, Els(total, c))),
    )


@rule("Sum-c1", SUM)
def _sum_c1(g: Gen) -> Instance:
    gamma = g.ctx()
    left, right = g.small(), g.small()
    motive, d, e = _cases(g, left, right)
    a = g.term(left)
    c = Lf(left, right, a)
    total = Sum(left, right)
    return _inst(
        _case_premises(gamma, left, right, motive, d, e)
        + [Elt(gamma, a, left), Elt(gamma, c, total)],
        EltEq(
            gamma,
            SumRec(left, right, motive, d, e, c),
            TmSub(d, Els(left, a)),
            TySub(motive, Els(total, c)),
        ),
    )


@rule("Sum-c2", SUM)
def _sum_c2(g: Gen) -> Instance:
    gamma = g.ctx()
    left, right = g.small(), g.small()
    motive, d, e = _cases(g, left, right)
    b = g.term(right)
    c = Rg(left, right, b)
    total = Sum(left, right)
    return _inst(
        _case_premises(gamma, left, right, motive, d, e)
        + [Elt(gamma, b, right), Elt(gamma, c, total)],
        EltEq(
            gamma,
            SumRec(left, right, motive, d, e, c),
            TmSub(e, Els(right, b)),
            TySub(motive, Els(total, c)),
        ),
    )


@rule("Sum-cong", SUM)
def _sum_cong(g: Gen) -> Instance:
    gamma = g.ctx()
    left, left2 = g.equal_types()
    right, right2 = g.equal_types()
    return _inst(
        [TyEq(gamma, left, left2), TyEq(gamma, right, right2)],
        TyEq(gamma, Sum(left, right), Sum(left2, right2)),
    )


@rule("lf-cong", SUM)
def _lf_cong(g: Gen) -> Instance:
    gamma = g.ctx()
    left, a, a2 = g.equal_terms()
    right = g.ty()
    return _inst(
        [IsTy(gamma, right), Elt(gamma, a, left), Elt(gamma, a2, left), EltEq(gamma, a, a2, left)],
        EltEq(gamma, Lf(left, right, a), Lf(left, right, a2), Sum(left, right)),
    )


@rule("rg-cong", SUM)
def _rg_cong(g: Gen) -> Instance:
    gamma = g.ctx()
    right, b, b2 = g.equal_terms()
    left = g.ty()
    return _inst(
        [IsTy(gamma, left), Elt(gamma, b, right), Elt(gamma, b2, right), EltEq(gamma, b, b2, right)],
        EltEq(gamma, Rg(left, right, b), Rg(left, right, b2), Sum(left, right)),
    )


@rule("Sum-rec-cong", SUM)
def _sum_rec_cong(g: Gen) -> Instance:
    gamma = g.ctx()
    left, right = g.small(), g.small()
    motive, d, e = _cases(g, left, right)
    total = Sum(left, right)
    a, a2 = g.equal_terms_of(left)
    c, c2 = Lf(left, right, a), Lf(left, right, a2)
    gs, gl, gr = Ext(gamma, total), Ext(gamma, left), Ext(gamma, right)
    case = _case_premises(gamma, left, right, motive, d, e)
    return _inst(
        case
        + case
        + [
            Elt(gamma, c, total),
            Elt(gamma, c2, total),
            TyEq(gamma, left, left),
            TyEq(gamma, right, right),
            TyEq(gs, motive, TySub(motive, Phi(gs, gs))),
            EltEq(gl, d, TmSub(d, Phi(gl, gl)), TySub(motive, SumSubLf(left, right))),
            EltEq(gr, e, TmSub(e, Phi(gr, gr)), TySub(motive, SumSubRg(left, right))),
            EltEq(gamma, c, c2, total),
        ],
        EltEq(
            gamma,
            SumRec(left, right, motive, d, e, c),
            SumRec(left, right, motive, d, e, c2),
            TySub(motive, Els(total, c)),
        ),
    )


@rule("Sum-sub", SUM)
def _sum_sub(g: Gen) -> Instance:
    gamma = g.ctx()
    left, right = g.ty(gamma), g.ty(gamma)
    delta, h = g.sub_into(gamma)
    return _inst(
        [IsSub(h, delta, gamma), IsTy(gamma, left), IsTy(gamma, right)],
        TyEq(delta, TySub(Sum(left, right), h), Sum(TySub(left, h), TySub(right, h))),
    )


def _injection_sub(g: Gen, injection, pick_left: bool) -> Instance:
    gamma = g.ctx()
    left, right = g.small(), g.small()
    tm = g.term(left if pick_left else right)
    own = left if pick_left else right
    delta, h = g.sub_into(gamma)
    return _inst(
        [
            IsSub(h, delta, gamma),
            IsTy(gamma, left),
            IsTy(gamma, right),
            Elt(gamma, tm, own),
            Elt(delta, TmSub(tm, h), TySub(own, h)),
        ],
        EltEq(
            delta,
            TmSub(injection(left, right, tm), h),
            injection(TySub(left, h), TySub(right, h), TmSub(tm, h)),
            TySub(Sum(left, right), h),
        ),
    )


@rule("lf-sub", SUM)
def _lf_sub(g: Gen) -> Instance:
    return _injection_sub(g, Lf, True)


@rule("rg-sub", SUM)
def _rg_sub(g: Gen) -> Instance:
    return _injection_sub(g, Rg, False)


@rule("Sum-rec-sub", SUM)
def _sum_rec_sub(g: Gen) -> Instance:
    gamma = g.ctx()
    left, right = g.small(), g.small()
    motive, d, e = _cases(g, left, right)
    total = Sum(left, right)
    c = _injection(g, left, right)
    delta, h = g.sub_into(gamma)
    left_h, right_h = TySub(left, h), TySub(right, h)
    total_h = Sum(left_h, right_h)
    motive_h = TySub(motive, lift_as(total, h, total_h))
    d_h, e_h = TmSub(d, Lift(left, h)), TmSub(e, Lift(right, h))
    return _inst(
        [IsSub(h, delta, gamma)]
        + _case_premises(gamma, left, right, motive, d, e)
        + [
            Elt(Ext(delta, left_h), d_h, TySub(motive_h, SumSubLf(left_h, right_h))),
            Elt(Ext(delta, right_h), e_h, TySub(motive_h, SumSubRg(left_h, right_h))),
            Elt(gamma, c, total),
            Elt(delta, TmSub(c, h), total_h),
        ],
        EltEq(
            delta,
            TmSub(SumRec(left, right, motive, d, e, c), h),
            SumRec(left_h, right_h, motive_h, d_h, e_h, TmSub(c, h)),
            TySub(TySub(motive, Els(total, c)), h),
        ),
    )


# ----- Universes -----

UNIV = "universe"


def _level(g: Gen) -> int:
    return g.pick((0, 1))


def _small_family(g: Gen) -> Tuple[TyExpr, TyExpr]:
    dom = g.small()
    return dom, g.pick(SMALL + ((IS_TRUE,) if dom == BOOL else ()))


@rule("U-k", UNIV)
def _u_k(g: Gen) -> Instance:
    gamma = g.ctx()
    return _inst([CtxValid(gamma)], IsTy(gamma, U(_level(g))))


@rule("U-type", UNIV)
def _u_type(g: Gen) -> Instance:
    gamma = g.ctx()
    ty = g.pick(SMALL_TYPES)
    return _inst([Elt(gamma, ty, U(_level(g)))], IsTy(gamma, ty))


@rule("U-nat-", UNIV)
def _u_nat(g: Gen) -> Instance:
    gamma = g.ctx()
    return _inst([CtxValid(gamma)], Elt(gamma, Nat(), U(_level(g))))


@rule("U-N0-", UNIV)
def _u_n0(g: Gen) -> Instance:
    gamma = g.ctx()
    return _inst([CtxValid(gamma)], Elt(gamma, N0(), U(_level(g))))


def _u_former(g: Gen, former) -> Instance:
    gamma = g.ctx()
    u = U(_level(g))
    dom, cod = _small_family(g)
    return _inst(
        [Elt(gamma, dom, u), Elt(Ext(gamma, dom), cod, u)], Elt(gamma, former(dom, cod), u)
    )


@rule("U-pi-", UNIV)
def _u_pi(g: Gen) -> Instance:
    return _u_former(g, PiF)


@rule("U-sigma-", UNIV)
def _u_sigma(g: Gen) -> Instance:
    return _u_former(g, SigmaF)


@rule("U-Sum-", UNIV)
def _u_sum(g: Gen) -> Instance:
    gamma = g.ctx()
    u = U(_level(g))
    left, right = g.pick(FINITE_TYPES), g.pick(FINITE_TYPES)
    return _inst([Elt(gamma, left, u), Elt(gamma, right, u)], Elt(gamma, Sum(left, right), u))


@rule("U-ID-", UNIV)
def _u_id(g: Gen) -> Instance:
    gamma = g.ctx()
    u = U(_level(g))
    ty = g.pick(SAMPLES).ty
    a, b = _two_terms(g, ty)
    return _inst(
        [Elt(gamma, ty, u), Elt(gamma, a, ty), Elt(gamma, b, ty)], Elt(gamma, IdT(ty, a, b), u)
    )


@rule("Cu-1a-", UNIV)
def _cu_1a(g: Gen) -> Instance:
    gamma = g.ctx()
    k = _level(g)
    return _inst([CtxValid(gamma)], Elt(gamma, U(k), U(k + 1)))


@rule("Cu-1b-", UNIV)
def _cu_1b(g: Gen) -> Instance:
    gamma = g.ctx()
    k = _level(g)
    ty = g.pick(SMALL_TYPES + ((U(0),) if k > 0 else ()))
    return _inst([Elt(gamma, ty, U(k))], Elt(gamma, ty, U(k + 1)))


@rule("U-sub-", UNIV)
def _u_sub(g: Gen) -> Instance:
    gamma = g.ctx()
    delta, h = g.sub_into(gamma)
    u = U(_level(g))
    return _inst([IsSub(h, delta, gamma)], TyEq(delta, TySub(u, h), u))


@rule("U-eq-refl1", UNIV)
def _u_eq_refl1(g: Gen) -> Instance:
    gamma = g.ctx()
    u = U(_level(g))
    a, b = g.equal_types()
    return _inst(
        [Elt(gamma, a, u), Elt(gamma, b, u), TyEq(gamma, a, b)], EltEq(gamma, a, b, u)
    )


@rule("U-eq-refl2", UNIV)
def _u_eq_refl2(g: Gen) -> Instance:
    gamma = g.ctx()
    a, b = g.equal_types()
    return _inst([EltEq(gamma, a, b, U(_level(g)))], TyEq(gamma, a, b))


@rule("U-br-", UNIV)
def _u_br(g: Gen) -> Instance:
    gamma = g.ctx()
    u = U(_level(g))
    ty = g.pick(FINITE_TYPES)
    return _inst([Elt(gamma, ty, u)], Elt(gamma, Br(ty), u))


# ----- Bracket types -----

BRACKET = "bracket"

_BRACKETED = (UNIT, BOOL, THREE, Br(BOOL))


def _constant_body(g: Gen, ty: TyExpr) -> Tuple[TyExpr, TmExpr]:
    """A type ``B`` and a body over ``ty`` that is constant, or rarely not."""

    options = [(UNIT, TT), (BOOL, TRUE), (Br(ty), BrIntro(Var()))]
    if ty == BOOL and g.coin(0.15):
        return BOOL, Var()
    return g.pick(options)


def _constancy(gamma: CtxExpr, ty: TyExpr, motive: TyExpr, body: TmExpr) -> EltEq:
    ty_w = _last(ty)
    return EltEq(
        Ext(Ext(gamma, ty), ty_w),
        TmSub(body, PrX(ty)),
        TmSub(body, PrY(ty)),
        TySub(TySub(motive, Down(ty)), Down(ty_w)),
    )


def _wh_premises(gamma, ty, motive, k, body) -> List[Judgment]:
    return [
        Elt(gamma, k, Br(ty)),
        Elt(Ext(gamma, ty), body, TySub(motive, Down(ty))),
        _constancy(gamma, ty, motive, body),
    ]


def _wh_parts(g: Gen):
    gamma = g.ctx()
    ty = g.pick(_BRACKETED)
    motive, body = _constant_body(g, ty)
    return gamma, ty, motive, BrIntro(g.term(ty)), body


@rule("Br-f", BRACKET)
def _br_f(g: Gen) -> Instance:
    gamma = g.ctx()
    ty = g.ty(gamma)
    return _inst([IsTy(gamma, ty)], IsTy(gamma, Br(ty)))


@rule("Br-intro", BRACKET)
def _br_intro(g: Gen) -> Instance:
    gamma = g.ctx()
    ty, tm = g.sample(gamma)
    return _inst([Elt(gamma, tm, ty)], Elt(gamma, BrIntro(tm), Br(ty)))


@rule("Br-e", BRACKET)
def _br_e(g: Gen) -> Instance:
    gamma, ty, motive, k, body = _wh_parts(g)
    return _inst(
        [IsTy(gamma, ty), IsTy(gamma, motive)] + _wh_premises(gamma, ty, motive, k, body),
        Elt(gamma, Wh(ty, motive, k, body), motive),
    )


@rule("Br-beta", BRACKET)
def _br_beta(g: Gen) -> Instance:
    gamma, ty, motive, _, body = _wh_parts(g)
    a = g.term(ty)
    k = BrIntro(a)
    return _inst(
        [IsTy(gamma, motive), Elt(gamma, a, ty)] + _wh_premises(gamma, ty, motive, k, body),
        EltEq(gamma, Wh(ty, motive, k, body), TmSub(body, Els(ty, a)), motive),
    )


@rule("Br-eta", BRACKET)
def _br_eta(g: Gen) -> Instance:
    gamma = g.ctx()
    ty = g.pick(_BRACKETED)
    br = Br(ty)
    motive, body = g.pick(((UNIT, TT), (BOOL, FALSE), (br, Var())))
    k = BrIntro(g.term(ty))
    through = TmSub(body, BrSb(ty))
    return _inst(
        [
            IsTy(gamma, motive),
            Elt(gamma, k, br),
            Elt(Ext(gamma, br), body, TySub(motive, Down(br))),
            Elt(Ext(gamma, ty), through, TySub(motive, Down(ty))),
        ],
        EltEq(gamma, Wh(ty, motive, k, through), TmSub(body, Els(br, k)), motive),
    )


@rule("Br-eqty", BRACKET)
def _br_eqty(g: Gen) -> Instance:
    gamma = g.ctx()
    ty = g.pick(_BRACKETED)
    a, b = BrIntro(g.term(ty)), BrIntro(g.term(ty))
    return _inst(
        [Elt(gamma, a, Br(ty)), Elt(gamma, b, Br(ty))], EltEq(gamma, a, b, Br(ty))
    )


@rule("Br-cong", BRACKET)
def _br_cong(g: Gen) -> Instance:
    gamma = g.ctx()
    a, b = g.equal_types_in(gamma)
    return _inst([TyEq(gamma, a, b)], TyEq(gamma, Br(a), Br(b)))


@rule("Br-e-cong", BRACKET)
def _br_e_cong(g: Gen) -> Instance:
    gamma, ty, motive, k, body = _wh_parts(g)
    k2 = BrIntro(g.term(ty))
    body2 = Pr1(Pr(body, TT)) if g.coin() else body
    ga = Ext(gamma, ty)
    return _inst(
        _wh_premises(gamma, ty, motive, k, body)
        + _wh_premises(gamma, ty, motive, k2, body2)
        + [
            TyEq(gamma, ty, ty),
            TyEq(gamma, motive, motive),
            EltEq(gamma, k, k2, Br(ty)),
            EltEq(ga, body, TmSub(body2, Phi(ga, ga)), TySub(motive, Down(ty))),
        ],
        EltEq(gamma, Wh(ty, motive, k, body), Wh(ty, motive, k2, body2), motive),
    )


@rule("Br-sub", BRACKET)
def _br_sub(g: Gen) -> Instance:
    gamma = g.ctx()
    ty = g.ty(gamma)
    delta, h = g.sub_into(gamma)
    return _inst(
        [IsSub(h, delta, gamma), IsTy(gamma, ty)],
        TyEq(delta, TySub(Br(ty), h), Br(TySub(ty, h))),
    )


@rule("br-sub", BRACKET)
def _br_intro_sub(g: Gen) -> Instance:
    gamma = g.ctx()
    ty, tm = g.sample(gamma)
    delta, h = g.sub_into(gamma)
    return _inst(
        [IsSub(h, delta, gamma), Elt(gamma, tm, ty)],
        EltEq(delta, TmSub(BrIntro(tm), h), BrIntro(TmSub(tm, h)), TySub(Br(ty), h)),
    )


@rule("Br-e-sub", BRACKET)
def _br_e_sub(g: Gen) -> Instance:
    gamma, ty, motive, k, body = _wh_parts(g)
    delta, h = g.sub_into(gamma)
    ty_h, motive_h = TySub(ty, h), TySub(motive, h)
    body_h = TmSub(body, Lift(ty, h))
    return _inst(
        [IsSub(h, delta, gamma), IsTy(gamma, ty), IsTy(gamma, motive)]
        + _wh_premises(gamma, ty, motive, k, body)
        + _wh_premises(delta, ty_h, motive_h, TmSub(k, h), body_h),
        EltEq(
            delta,
            TmSub(Wh(ty, motive, k, body), h),
            Wh(ty_h, motive_h, TmSub(k, h), body_h),
            motive_h,
        ),
    )


# ----- Negative control -----


@rule("control-unsound", "control", registry=CONTROLS)
def _control_unsound(g: Gen) -> Instance:
    gamma = g.ctx()
    return _inst([CtxValid(gamma)], TyEq(gamma, Nat(), N0()))


EXPECTED_LABELS: Tuple[str, ...] = (
    # presuppositions
    "ctx-eq-presup-l", "ctx-eq-presup-r", "sub-presup-dom", "sub-presup-cod",
    "ty-presup-ctx", "tyeq-presup-l", "tyeq-presup-r", "elt-presup-ty",
    "subeq-presup-l", "subeq-presup-r", "elteq-presup-l", "elteq-presup-r",
    # substitutions and general equality
    "ctx-refl", "ctx-sym", "ctx-trans", "sub-refl", "sub-sym", "sub-trans",
    "id-sub", "comp-sub", "comp-id-r", "comp-id-l", "comp-assoc", "comp-cong",
    "subst-trp", "subst-trp-irr", "subst-trp-id", "subst-trp-fun",
    "tyrefl", "tysym", "tytra", "tmrefl", "tmsym", "tmtra", "elttyeq", "elteqtyeq",
    "ty-subst", "tyeq-subst", "tyeq-subst2", "tysubst-id", "tysubst-com",
    "elt-subst", "elteq-subst", "elteq-subst2", "eltsubst-id", "eltsubst-com",
    # context extension
    "ctx-empty", "ctx-ext", "ext-eq'", "ext-eq''", "down", "down-cong", "asm", "asm-cong",
    "ext", "ext-irr", "ext-cong", "ext-prop1", "ext-prop2", "ext-prop3", "ext-comp",
    "els", "els-exp", "qq", "qq-exp",
    # pi
    "Pi-f", "Pi-i", "Pi-e", "Pi-beta-gen", "Pi-eta-eq-gen", "Pi-f-sub", "lambda-sub",
    "Pi-e-sub-gen", "Pi-f-cong", "Pi-xi", "Pi-e-cong",
    # identity
    "ID", "ID-i", "ID-e", "ID-uip", "ID-sub-gen", "rr-sub", "ID-cong", "rr-cong",
    # sigma
    "Sigma-f", "Sigma-i", "Sigma-e-1", "Sigma-e-2", "Sigma-c-1", "Sigma-c-2", "Sigma-c-eta",
    "Sigma-f-cong", "pr-cong", "pr1-cong", "pr2-cong", "Sigma-f-sub", "pr-sub", "pr1-sub",
    "pr2-sub",
    # natural numbers
    "Nat-f", "Nat-i-0", "Nat-i-s", "Nat-e", "Nat-c-0", "Nat-c-s", "Nat-i-s-cong", "Rec-cong",
    "Nat-sub", "Nat-i-0-sub", "Nat-i-s-sub", "Rec-sub",
    # empty type
    "N0", "N0-e", "R0-cong'", "N0-sub", "R0-sub",
    # sums
    "Sum", "lf-pf", "rg-pf", "Sum-e", "Sum-c1", "Sum-c2", "Sum-cong", "lf-cong", "rg-cong",
    "Sum-rec-cong", "Sum-sub", "lf-sub", "rg-sub", "Sum-rec-sub",
    # universes
    "U-k", "U-type", "U-nat-", "U-N0-", "U-pi-", "U-sigma-", "U-Sum-", "U-ID-",
    "Cu-1a-", "Cu-1b-", "U-sub-", "U-eq-refl1", "U-eq-refl2", "U-br-",
    # brackets
    "Br-f", "Br-intro", "Br-e", "Br-beta", "Br-eta", "Br-eqty", "Br-cong", "Br-e-cong",
    "Br-sub", "br-sub", "Br-e-sub",
)  # fmt: skip


def catalog(include_controls: bool = False) -> List[RuleCase]:
    """Every registered rule in listing order."""

    missing = [label for label in EXPECTED_LABELS if label not in CATALOG]
    extra = [label for label in CATALOG if label not in EXPECTED_LABELS]
    if missing or extra:
        raise RuntimeError(f"rule catalog out of date: missing={missing} extra={extra}")
    cases = [CATALOG[label] for label in EXPECTED_LABELS]
    if include_controls:
        cases.extend(CONTROLS.values())
    return cases


def lookup(label: str) -> RuleCase:
    if label in CATALOG:
        return CATALOG[label]
    if label in CONTROLS:
        return CONTROLS[label]
    raise KeyError(f"unknown rule {label}")
