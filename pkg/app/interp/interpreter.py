"""Interpretation of contexts, types, terms and substitutions as sets.

A context is a set whose keys are its points; a type or term in that
context is a map from points to sets; a substitution is a map between the
points of two contexts. Proof arguments are recomputed as membership
witnesses, so an eliminator applied outside its domain raises
``PremiseFails`` instead of producing a value.
"""

from __future__ import annotations

import logging
from typing import Callable, Dict, Optional, Tuple

from ..errors import (
    InfiniteUnsupported,
    KernelError,
    NotAPair,
    PremiseFails,
    ScopeError,
    UndecidedEquality,
)
from ..setoids.kappa import kappa, kappa_transport
from ..setoids.setoid import SetoidMap
from ..syntax import ast
from ..syntax.builders import expand, is_derived
from ..syntax.scope import check_scope, infer_cod
from ..universes import codes
from ..universes.hierarchy import v_k
from ..zf.constructions import (
    VFamily,
    id_v,
    inl_v,
    inr_v,
    pair_v,
    pi_v,
    sigma_v,
    sq_v,
    sum_v,
    unpair_v,
)
from ..zf.equality import eq_v, mem_v
from ..zf.keys import Inl, Key, KPair, Numeral
from ..zf.verdict import Budget, Fails, Holds, holds_or_bounded
from ..zf.vset import EMPTY, Rule, Table, VSet, mk_sup, natv, singleton
from .models import VMap

logger = logging.getLogger(__name__)


class Interpreter:
    """Interprets syntax against one shared budget.

    Interpretations are cached per expression and context; the checker
    swaps in a fresh budget for every top-level judgment.
    """

    def __init__(self, budget: Optional[Budget] = None) -> None:
        self.budget = budget if budget is not None else Budget()
        self._ctx: Dict[ast.CtxExpr, VSet] = {}
        self._expr: Dict[Tuple[ast.Expr, ast.CtxExpr], VMap] = {}
        self._sub: Dict[Tuple[ast.SubExpr, ast.CtxExpr], SetoidMap] = {}

    # -- contexts -----------------------------------------------------------

    def ctx(self, g: ast.CtxExpr) -> VSet:
        hit = self._ctx.get(g)
        if hit is None:
            if isinstance(g, ast.Empty):
                hit = singleton(EMPTY)
            else:
                base = self.ctx(g.ctx)
                ty = self.expr(g.ty, g.ctx)
                hit = sigma_v(base, VFamily(base, ty.at, signature="context"))
            self._ctx[g] = hit
        return hit

    def closed_value(self, e: ast.Expr) -> VSet:
        """The set a closed context, type or term denotes."""

        if isinstance(e, ast.CTX_FORMERS):
            return self.ctx(e)
        if isinstance(e, ast.SUB_FORMERS):
            raise ScopeError("a substitution has no set value")
        check_scope(e, ast.Empty())
        (point,) = self.ctx(ast.Empty()).space.keys()
        return self.expr(e, ast.Empty()).at(point)

    # -- types and terms ----------------------------------------------------

    def expr(self, e: ast.Expr, g: ast.CtxExpr) -> VMap:
        key = (e, g)
        hit = self._expr.get(key)
        if hit is None:
            handler = getattr(self, "_eval_" + type(e).__name__.lower(), None)
            if handler is None:
                raise KernelError(f"cannot interpret {e!r}")
            hit = VMap(
                self.ctx(g),
                lambda x: handler(e, g, x),
                code=lambda x, level: self.code_at(e, g, x, level),
            )
            self._expr[key] = hit
        return hit

    def _witness(self, x: VSet, alpha: VSet, what: str) -> Key:
        verdict = mem_v(x, alpha, self.budget)
        if isinstance(verdict, Holds):
            return verdict.witness
        if isinstance(verdict, Fails):
            raise PremiseFails(f"{what}: {verdict}")
        raise UndecidedEquality(f"{what}: {verdict}")

    def _family(self, body: ast.Expr, g: ast.CtxExpr, dom: ast.Expr, x: Key, base: VSet) -> VFamily:
        fiber = self.expr(body, ast.Ext(g, dom))
        return VFamily(base, lambda y: fiber.at(KPair(x, y)))

    def _eval_nat(self, e, g, x) -> VSet:
        return natv()

    def _eval_n0(self, e, g, x) -> VSet:
        return EMPTY

    def _eval_u(self, e: ast.U, g, x) -> VSet:
        return v_k(e.level)

    def _eval_pif(self, e: ast.PiF, g, x) -> VSet:
        base = self.expr(e.dom, g).at(x)
        return pi_v(base, self._family(e.cod, g, e.dom, x, base), self.budget)

    def _eval_sigmaf(self, e: ast.SigmaF, g, x) -> VSet:
        base = self.expr(e.dom, g).at(x)
        return sigma_v(base, self._family(e.cod, g, e.dom, x, base))

    def _eval_sum(self, e: ast.Sum, g, x) -> VSet:
        return sum_v(self.expr(e.left, g).at(x), self.expr(e.right, g).at(x))

    def _eval_idt(self, e: ast.IdT, g, x) -> VSet:
        alpha = self.expr(e.ty, g).at(x)
        left = self._witness(self.expr(e.left, g).at(x), alpha, "left side of an identity")
        right = self._witness(self.expr(e.right, g).at(x), alpha, "right side of an identity")
        return id_v(alpha, left, right, self.budget)

    def _eval_br(self, e: ast.Br, g, x) -> VSet:
        return sq_v(self.expr(e.ty, g).at(x))

    def _eval_tysub(self, e: ast.TySub, g, x) -> VSet:
        return self.expr(e.ty, infer_cod(e.sub, g)).at(self.sub(e.sub, g)(x))

    def _eval_tmsub(self, e: ast.TmSub, g, x) -> VSet:
        return self.expr(e.tm, infer_cod(e.sub, g)).at(self.sub(e.sub, g)(x))

    def _eval_var(self, e, g, x) -> VSet:
        if not (isinstance(g, ast.Ext) and isinstance(x, KPair)):
            raise PremiseFails("the variable needs a non-empty context")
        return self.expr(g.ty, g.ctx).at(x.first).elem(x.second)

    def _eval_lam(self, e: ast.Lam, g, x) -> VSet:
        base = self.expr(e.dom, g).at(x)
        body = self.expr(e.body, ast.Ext(g, e.dom))

        def child(y: Key) -> VSet:
            return pair_v(base.elem(y), body.at(KPair(x, y)))

        if base.space.is_finite:
            return mk_sup(base.space, Table(tuple((y, child(y)) for y in base.space.keys())))
        return mk_sup(base.space, Rule(child, label="lambda"))

    def _eval_app(self, e: ast.App, g, x) -> VSet:
        base = self.expr(e.dom, g).at(x)
        arg = self.expr(e.arg, g).at(x)
        fn = self.expr(e.fn, g).at(x)
        y = self._witness(arg, base, "argument")
        fam = self._family(e.cod, g, e.dom, x, base)
        try:
            table = self._witness(fn, pi_v(base, fam, self.budget), "function")
        except InfiniteUnsupported:
            return self._graph_lookup(fn, arg, y)
        return fam.at(y).elem(table(y))

    def _graph_lookup(self, fn: VSet, arg: VSet, y: Key) -> VSet:
        """Value of a function graph at ``arg`` by scanning its pairs."""

        candidates = []
        if y in fn.space:
            candidates.append(fn.elem(y))
        candidates.extend(c for _, c in fn.items(self.budget.nat_bound))
        for child in candidates:
            try:
                first, second = unpair_v(child, self.budget)
            except NotAPair as exc:
                raise PremiseFails(f"function graph has a non-pair member: {exc}") from exc
            if isinstance(eq_v(first, arg, self.budget), Holds):
                return second
        raise UndecidedEquality("argument not found among probed graph entries")

    def _unpair(self, e, g, x) -> Tuple[VSet, VSet]:
        try:
            return unpair_v(self.expr(e.tm, g).at(x), self.budget)
        except NotAPair as exc:
            raise PremiseFails(f"projection from a non-pair: {exc}") from exc

    def _eval_pr(self, e: ast.Pr, g, x) -> VSet:
        return pair_v(self.expr(e.first, g).at(x), self.expr(e.second, g).at(x))

    def _eval_pr1(self, e: ast.Pr1, g, x) -> VSet:
        return self._unpair(e, g, x)[0]

    def _eval_pr2(self, e: ast.Pr2, g, x) -> VSet:
        return self._unpair(e, g, x)[1]

    def _eval_rr(self, e: ast.Rr, g, x) -> VSet:
        return self.expr(e.tm, g).at(x)

    def _eval_zero(self, e, g, x) -> VSet:
        return EMPTY

    def _eval_succ(self, e: ast.Succ, g, x) -> VSet:
        return singleton(self.expr(e.tm, g).at(x))

    def _eval_rec(self, e: ast.Rec, g, x) -> VSet:
        n = self._witness(self.expr(e.tm, g).at(x), natv(), "recursion argument")
        assert isinstance(n, Numeral)
        nat_ctx = ast.Ext(g, ast.Nat())
        motive = self.expr(e.motive, nat_ctx)
        step = self.expr(e.step, ast.Ext(nat_ctx, e.motive))
        value = self.expr(e.base, g).at(x)
        for i in range(n.n):
            point = KPair(x, Numeral(i))
            k = self._witness(value, motive.at(point), f"recursion value at {i}")
            value = step.at(KPair(point, k))
        return value

    def _eval_r0(self, e: ast.R0, g, x) -> VSet:
        self._witness(self.expr(e.tm, g).at(x), EMPTY, "element of the empty type")
        raise PremiseFails("the empty type has no elements")

    def _eval_lf(self, e: ast.Lf, g, x) -> VSet:
        return inl_v(self.expr(e.tm, g).at(x))

    def _eval_rg(self, e: ast.Rg, g, x) -> VSet:
        return inr_v(self.expr(e.tm, g).at(x))

    def _eval_sumrec(self, e: ast.SumRec, g, x) -> VSet:
        total = sum_v(self.expr(e.left, g).at(x), self.expr(e.right, g).at(x))
        k = self._witness(self.expr(e.tm, g).at(x), total, "case argument")
        if isinstance(k, Inl):
            return self.expr(e.on_left, ast.Ext(g, e.left)).at(KPair(x, k.key))
        return self.expr(e.on_right, ast.Ext(g, e.right)).at(KPair(x, k.key))

    def _eval_brintro(self, e, g, x) -> VSet:
        return EMPTY

    def _eval_wh(self, e: ast.Wh, g, x) -> VSet:
        base = self.expr(e.ty, g).at(x)
        y = self._witness(self.expr(e.tm, g).at(x), sq_v(base), "bracket argument")
        body = self.expr(e.body, ast.Ext(g, e.ty))
        value = body.at(KPair(x, y))
        for k in (base.space.keys() if base.space.is_finite else base.space.probe(self.budget.nat_bound)):
            if k == y:
                continue
            verdict = eq_v(value, body.at(KPair(x, k)), self.budget)
            if isinstance(verdict, Fails):
                raise PremiseFails(f"eliminator body is not constant: {verdict}")
            if not holds_or_bounded(verdict):
                raise UndecidedEquality(f"constancy of the eliminator body: {verdict}")
        return value

    # -- substitutions ------------------------------------------------------

    def sub(self, f: ast.SubExpr, dom: ast.CtxExpr) -> SetoidMap:
        key = (f, dom)
        hit = self._sub.get(key)
        if hit is None:
            cod = infer_cod(f, dom)
            fn = self._sub_fn(f, dom)
            memo: Dict[Key, Key] = {}

            def apply(k: Key) -> Key:
                out = memo.get(k)
                if out is None:
                    out = fn(k)
                    memo[k] = out
                return out

            hit = SetoidMap(kappa(self.ctx(dom)), kappa(self.ctx(cod)), apply)
            self._sub[key] = hit
        return hit

    def _sub_fn(self, f: ast.SubExpr, dom: ast.CtxExpr) -> Callable[[Key], Key]:
        if is_derived(f):
            return self._sub_fn(expand(f, dom), dom)
        if isinstance(f, ast.Id):
            return lambda k: k
        if isinstance(f, ast.Comp):
            inner = self.sub(f.g, dom)
            outer = self.sub(f.f, infer_cod(f.g, dom))
            return lambda k: outer(inner(k))
        if isinstance(f, ast.Down):
            return _first
        if isinstance(f, ast.Pair):
            return self._pair_fn(f, dom)
        if isinstance(f, ast.Phi):
            return self._phi_fn(f)
        raise KernelError(f"cannot interpret substitution {f!r}")

    def _pair_fn(self, f: ast.Pair, dom: ast.CtxExpr) -> Callable[[Key], Key]:
        inner = self.sub(f.f, dom)
        ty = self.expr(f.ty, infer_cod(f.f, dom))
        tm = self.expr(f.tm, dom)

        def apply(u: Key) -> Key:
            fu = inner(u)
            return KPair(fu, self._witness(tm.at(u), ty.at(fu), "extension term"))

        return apply

    def _phi_fn(self, f: ast.Phi) -> Callable[[Key], Key]:
        transport = []

        def apply(k: Key) -> Key:
            if not transport:
                try:
                    transport.append(
                        kappa_transport(self.ctx(f.src), self.ctx(f.dst), self.budget, strict=False)
                    )
                except KernelError as exc:
                    raise PremiseFails(f"contexts are not equal: {exc}") from exc
            return transport[0](k)

        return apply

    # -- universe certificates ---------------------------------------------

    def code_at(self, e: ast.Expr, g: ast.CtxExpr, x: Key, level: int) -> Optional[codes.UCode]:
        """A level-``level`` code for the value of ``e`` at ``x``, if one is known."""

        try:
            return self._code(e, g, x, level)
        except KernelError as exc:
            logger.debug("no code", extra={"error": str(exc)})
            return None

    def _code(self, e: ast.Expr, g: ast.CtxExpr, x: Key, level: int) -> Optional[codes.UCode]:
        if isinstance(e, ast.Nat):
            return codes.N
        if isinstance(e, ast.N0):
            return codes.N0
        if isinstance(e, ast.U):
            return codes.universe_code(e.level, level) if e.level < level else None
        if isinstance(e, ast.IdT):
            inhabited = bool(self.expr(e, g).at(x).space.keys())
            return codes.N1 if inhabited else codes.N0
        if isinstance(e, ast.Br):
            return self._code(e.ty, g, x, level)
        if isinstance(e, ast.TySub):
            return self._code(e.ty, infer_cod(e.sub, g), self.sub(e.sub, g)(x), level)
        if isinstance(e, ast.Sum):
            left, right = self._code(e.left, g, x, level), self._code(e.right, g, x, level)
            if left is None or right is None:
                return None
            return codes.PlusCode(left, right)
        if isinstance(e, (ast.SigmaF, ast.PiF)):
            return self._dependent_code(e, g, x, level)
        return None

    def _dependent_code(self, e, g, x, level) -> Optional[codes.UCode]:
        base = self._code(e.dom, g, x, level)
        if base is None:
            return None
        ext = ast.Ext(g, e.dom)

        def fiber(dk: Key) -> Optional[codes.UCode]:
            return self._code(e.cod, ext, KPair(x, codes.value_key(base, dk, level)), level)

        space = codes.decode(base, level)
        if not space.is_finite:
            if isinstance(e, ast.PiF):
                return None

            def strict(dk: Key) -> codes.UCode:
                c = fiber(dk)
                if c is None:
                    raise UndecidedEquality("a fiber has no code")
                return c

            return codes.SigmaCode(base, codes.RuleFamily(strict, label="fiber"))
        entries = []
        for dk in space.keys():
            c = fiber(dk)
            if c is None:
                return None
            entries.append((dk, c))
        fam = codes.TableFamily(tuple(entries))
        if isinstance(e, ast.SigmaF):
            return codes.SigmaCode(base, fam)
        pi = codes.PiCode(base, fam)
        members = set(self.expr(e, g).at(x).space.keys())
        marks = tuple(
            (f, codes.N1 if codes.value_key(pi, f, level) in members else codes.N0)
            for f in codes.decode(pi, level).keys()
        )
        return codes.SigmaCode(pi, codes.ExtTable(marks))


def _first(k: Key) -> Key:
    if not isinstance(k, KPair):
        raise PremiseFails(f"projection from a non-extended point {k}")
    return k.first

