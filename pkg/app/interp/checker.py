"""Judgment checking: every judgment form becomes a quantified verdict.

A judgment is checked only after its presuppositions hold. Kernel errors
raised while interpreting are folded into the verdict, so ``check`` never
raises for a well-formed judgment object.
"""

from __future__ import annotations

import logging
from typing import Dict, Iterator, List, Optional, Tuple

from ..errors import (
    DomainMismatch,
    IllFormedCode,
    KernelError,
    KeyOutOfRange,
    NotAPair,
    NotEqual,
    PremiseFails,
    ScopeError,
)
from ..setoids.kappa import check_vfamily_ext, kappa
from ..setoids.setoid import check_extensional, pointwise_equal
from ..syntax import ast
from ..syntax.printer import print_judgment
from ..syntax.scope import check_scope, infer_cod
from ..universes.hierarchy import check_mem_u
from ..zf.constructions import VFamily
from ..zf.equality import eq_v, mem_v
from ..zf.keys import Key
from ..zf.verdict import (
    HOLDS,
    Budget,
    Fails,
    Unknown,
    Verdict,
    conj,
    forall,
    holds_or_bounded,
)
from ..zf.vset import UnivGen, VSet
from .interpreter import Interpreter
from .models import CheckConfig, JudgmentResult, VMap

logger = logging.getLogger(__name__)

_FAILING = (
    PremiseFails,
    ScopeError,
    IllFormedCode,
    NotAPair,
    KeyOutOfRange,
    NotEqual,
    DomainMismatch,
)


def fold_error(exc: KernelError, budget: Budget) -> Verdict:
    """Verdict for a kernel error raised while checking."""

    if isinstance(exc, _FAILING):
        return Fails(str(exc))
    return budget.unknown(str(exc))


def presuppositions(j: ast.Judgment) -> List[ast.Judgment]:
    """The judgments that must hold before ``j`` is considered."""

    if isinstance(j, ast.CtxValid):
        ctx = j.ctx
        return [ast.IsTy(ctx.ctx, ctx.ty)] if isinstance(ctx, ast.Ext) else []
    if isinstance(j, ast.CtxEq):
        return [ast.CtxValid(j.left), ast.CtxValid(j.right)]
    if isinstance(j, ast.IsTy):
        return [ast.CtxValid(j.ctx)]
    if isinstance(j, ast.TyEq):
        return [ast.IsTy(j.ctx, j.left), ast.IsTy(j.ctx, j.right)]
    if isinstance(j, ast.Elt):
        return [ast.IsTy(j.ctx, j.ty)]
    if isinstance(j, ast.EltEq):
        return [ast.Elt(j.ctx, j.left, j.ty), ast.Elt(j.ctx, j.right, j.ty)]
    if isinstance(j, ast.IsSub):
        return [ast.CtxValid(j.dom), ast.CtxValid(j.cod)]
    if isinstance(j, ast.SubEq):
        return [ast.IsSub(j.left, j.dom, j.cod), ast.IsSub(j.right, j.dom, j.cod)]
    raise TypeError(f"not a judgment: {j!r}")


def scope_judgment(j: ast.Judgment) -> None:
    """Raise ``ScopeError`` unless every part of ``j`` is well scoped."""

    if isinstance(j, ast.CtxValid):
        check_scope(j.ctx, ast.Empty())
    elif isinstance(j, ast.CtxEq):
        check_scope(j.left, ast.Empty())
        check_scope(j.right, ast.Empty())
    elif isinstance(j, (ast.IsSub, ast.SubEq)):
        subs = [j.sub] if isinstance(j, ast.IsSub) else [j.left, j.right]
        for sub in subs:
            check_scope(sub, j.dom)
            if infer_cod(sub, j.dom) != j.cod:
                raise ScopeError("substitution codomain differs from the stated context")
    else:
        check_scope(j.ctx, ast.Empty())
        for name in ("ty", "tm", "left", "right"):
            if hasattr(j, name):
                check_scope(getattr(j, name), j.ctx)


class Checker:
    """Checks judgments against one interpreter.

    Definitive verdicts are cached per judgment; each call to ``check``
    runs on a fresh budget.
    """

    def __init__(self, config: Optional[CheckConfig] = None) -> None:
        self.config = config or CheckConfig()
        self.interp = Interpreter(self.config.budget())
        self._verdicts: Dict[ast.Judgment, Verdict] = {}

    @property
    def budget(self) -> Budget:
        return self.interp.budget

    def check(self, j: ast.Judgment) -> Verdict:
        self.interp.budget = self.config.budget()
        verdict = self._judge(j)
        if isinstance(verdict, Unknown) and not verdict.bounded:
            logger.warning(
                "judgment undecided",
                extra={"judgment": print_judgment(j), "spent": self.budget.spent},
            )
        return verdict

    def _judge(self, j: ast.Judgment) -> Verdict:
        hit = self._verdicts.get(j)
        if hit is not None:
            return hit
        for premise in presuppositions(j):
            verdict = self._judge(premise)
            if not holds_or_bounded(verdict):
                if isinstance(verdict, Fails):
                    verdict = Fails(f"presupposition {print_judgment(premise)}: {verdict}")
                return self._remember(j, verdict)
        try:
            scope_judgment(j)
            verdict = self._dispatch(j)
        except KernelError as exc:
            if isinstance(exc, PremiseFails):
                logger.warning("premise fails", extra={"error": str(exc)})
            verdict = fold_error(exc, self.budget)
        return self._remember(j, verdict)

    def _remember(self, j: ast.Judgment, verdict: Verdict) -> Verdict:
        if not isinstance(verdict, Unknown):
            self._verdicts[j] = verdict
        return verdict

    def _dispatch(self, j: ast.Judgment) -> Verdict:
        if isinstance(j, ast.CtxValid):
            self.interp.ctx(j.ctx)
            return HOLDS
        if isinstance(j, ast.CtxEq):
            return eq_v(self.interp.ctx(j.left), self.interp.ctx(j.right), self.budget)
        if isinstance(j, ast.IsTy):
            return self._extensional(self.interp.expr(j.ty, j.ctx), j.ctx)
        if isinstance(j, ast.TyEq):
            return self._pointwise(j.ctx, j.left, j.right)
        if isinstance(j, ast.Elt):
            return self._elt(j)
        if isinstance(j, ast.EltEq):
            return self._pointwise(j.ctx, j.left, j.right)
        if isinstance(j, ast.IsSub):
            f = self.interp.sub(j.sub, j.dom)
            points, _ = f.dom.points(self.budget)
            for x in points:
                f(x)
            return check_extensional(f, self.budget)
        if isinstance(j, ast.SubEq):
            return pointwise_equal(
                self.interp.sub(j.left, j.dom), self.interp.sub(j.right, j.dom), self.budget
            )
        raise TypeError(f"not a judgment: {j!r}")

    # -- quantification over context points ---------------------------------

    def _points(self, g: ast.CtxExpr) -> Tuple[Tuple[Key, ...], bool]:
        return kappa(self.interp.ctx(g)).points(self.budget)

    def _trace(self, what: str, x: Key, verdict: Verdict) -> Verdict:
        if self.config.trace:
            logger.debug("point", extra={"check": what, "point": str(x), "verdict": str(verdict)})
        return verdict

    def _extensional(self, m: VMap, g: ast.CtxExpr) -> Verdict:
        if m.ext_checked is not None:
            return m.ext_checked
        points, _ = self._points(g)
        for x in points:
            m.at(x)
        verdict = check_vfamily_ext(VFamily(m.dom, m.at, signature="judgment"), self.budget)
        if verdict.definitive:
            m.ext_checked = verdict
        return verdict

    def _pointwise(self, g: ast.CtxExpr, left: ast.Expr, right: ast.Expr) -> Verdict:
        lhs, rhs = self.interp.expr(left, g), self.interp.expr(right, g)
        points, complete = self._points(g)

        def instances() -> Iterator[Verdict]:
            for x in points:
                yield self._trace("equal", x, eq_v(lhs.at(x), rhs.at(x), self.budget))

        return forall(instances(), self.budget, complete)

    def _elt(self, j: ast.Elt) -> Verdict:
        ty, tm = self.interp.expr(j.ty, j.ctx), self.interp.expr(j.tm, j.ctx)
        points, complete = self._points(j.ctx)

        def instances() -> Iterator[Verdict]:
            for x in points:
                yield self._trace("member", x, self._member(j, x, tm.at(x), ty.at(x)))

        members = forall(instances(), self.budget, complete)
        if not holds_or_bounded(members):
            return members
        return conj([members, self._extensional(tm, j.ctx)], self.budget)

    def _member(self, j: ast.Elt, x: Key, value: VSet, alpha: VSet) -> Verdict:
        """``value ∈ alpha``; members of a universe are first tried with a code."""

        fallback = mem_v(value, alpha, self.budget)
        if not isinstance(alpha.children, UnivGen) or not isinstance(fallback, Unknown):
            return fallback
        level = alpha.children.level
        code = self.interp.code_at(j.tm, j.ctx, x, level)
        if code is None:
            return fallback
        certified = check_mem_u(value, level, code, self.budget)
        if holds_or_bounded(certified):
            return certified
        logger.debug("certificate rejected", extra={"code": str(code), "verdict": str(certified)})
        return fallback


def check_judgment(j: ast.Judgment, cfg: Optional[CheckConfig] = None) -> Verdict:
    return Checker(cfg).check(j)


def check_source(src: ast.SourceFile, cfg: Optional[CheckConfig] = None) -> List[JudgmentResult]:
    """Check every judgment of a parsed file in order."""

    checker = Checker(cfg)
    names = {body: name for name, body in src.defs}
    results = []
    for item in src.judgments:
        verdict = checker.check(item.judgment)
        results.append(JudgmentResult.of(print_judgment(item.judgment, names), verdict, item.line))
    return results


def evaluate(e: ast.Expr, cfg: Optional[CheckConfig] = None) -> VSet:
    """Set value of a closed expression."""

    return Interpreter((cfg or CheckConfig()).budget()).closed_value(e)
