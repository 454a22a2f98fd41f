"""Scoping: codomains of substitutions and well-scopedness of expressions.

Contexts are compared syntactically. A mismatch raises ``ScopeError`` naming
the offending node; ``well_scoped`` folds that into a verdict.
"""

from __future__ import annotations

from typing import Tuple

from ..errors import ScopeError
from ..zf.verdict import HOLDS, Fails, Verdict
from . import ast
from .printer import print_expr


def _expect(actual: ast.CtxExpr, expected: ast.CtxExpr, node) -> None:
    if actual != expected:
        raise ScopeError(
            f"{print_expr(node)} expects context {print_expr(expected)}, got {print_expr(actual)}"
        )


def _split(ctx: ast.CtxExpr, node) -> ast.Ext:
    if not isinstance(ctx, ast.Ext):
        raise ScopeError(f"{print_expr(node)} needs a non-empty context")
    return ctx


def infer_cod(sub: ast.SubExpr, dom: ast.CtxExpr) -> ast.CtxExpr:
    """Codomain of ``sub`` applied to ``dom``."""

    if isinstance(sub, ast.Id):
        _expect(dom, sub.ctx, sub)
        return sub.ctx
    if isinstance(sub, ast.Comp):
        return infer_cod(sub.f, infer_cod(sub.g, dom))
    if isinstance(sub, ast.Down):
        ext = _split(dom, sub)
        if ext.ty != sub.ty:
            raise ScopeError(
                f"{print_expr(sub)} cannot drop {print_expr(ext.ty)} from its domain"
            )
        return ext.ctx
    if isinstance(sub, ast.Pair):
        return ast.Ext(infer_cod(sub.f, dom), sub.ty)
    if isinstance(sub, ast.Phi):
        _expect(dom, sub.src, sub)
        return sub.dst
    if isinstance(sub, ast.Els):
        return ast.Ext(dom, sub.ty)
    if isinstance(sub, ast.Lift):
        ext = _split(dom, sub)
        if ext.ty != ast.TySub(sub.ty, sub.sub):
            raise ScopeError(f"{print_expr(sub)} needs a domain ending in the substituted type")
        return ast.Ext(infer_cod(sub.sub, ext.ctx), sub.ty)
    if isinstance(sub, ast.StepSub):
        _expect(dom, ast.Ext(sub.ctx, ast.Nat()), sub)
        return dom
    if isinstance(sub, (ast.SumSubLf, ast.SumSubRg)):
        ext = _split(dom, sub)
        expected = sub.left if isinstance(sub, ast.SumSubLf) else sub.right
        if ext.ty != expected:
            raise ScopeError(f"{print_expr(sub)} needs a domain ending in {print_expr(expected)}")
        return ast.Ext(ext.ctx, ast.Sum(sub.left, sub.right))
    if isinstance(sub, (ast.PrX, ast.PrY)):
        outer = _split(dom, sub)
        inner = _split(outer.ctx, sub)
        if inner.ty != sub.ty or outer.ty != ast.TySub(sub.ty, ast.Down(sub.ty)):
            raise ScopeError(f"{print_expr(sub)} needs a domain ending in two copies of its type")
        return inner
    if isinstance(sub, ast.BrSb):
        ext = _split(dom, sub)
        if ext.ty != sub.ty:
            raise ScopeError(f"{print_expr(sub)} needs a domain ending in {print_expr(sub.ty)}")
        return ast.Ext(ext.ctx, ast.Br(sub.ty))
    raise ScopeError(f"not a substitution: {sub!r}")


def infer_ctx_of_sub(sub: ast.SubExpr, dom: ast.CtxExpr) -> Tuple[ast.CtxExpr, ast.CtxExpr]:
    return dom, infer_cod(sub, dom)


def check_scope(e, ctx: ast.CtxExpr) -> None:
    """Raise ``ScopeError`` unless ``e`` is well scoped in ``ctx``."""

    if isinstance(e, (ast.Empty, ast.Ext)):
        _check_ctx(e)
        return
    if isinstance(e, ast.SUB_FORMERS):
        _check_sub(e, ctx)
        return
    _check_expr(e, ctx)


def _check_ctx(ctx: ast.CtxExpr) -> None:
    if isinstance(ctx, ast.Ext):
        _check_ctx(ctx.ctx)
        _check_expr(ctx.ty, ctx.ctx)


def _check_sub(sub: ast.SubExpr, dom: ast.CtxExpr) -> None:
    cod = infer_cod(sub, dom)
    if isinstance(sub, ast.Id):
        _check_ctx(sub.ctx)
    elif isinstance(sub, ast.Comp):
        _check_sub(sub.g, dom)
        _check_sub(sub.f, infer_cod(sub.g, dom))
    elif isinstance(sub, ast.Pair):
        _check_sub(sub.f, dom)
        _check_expr(sub.ty, infer_cod(sub.f, dom))
        _check_expr(sub.tm, dom)
    elif isinstance(sub, ast.Phi):
        _check_ctx(sub.src)
        _check_ctx(sub.dst)
    elif isinstance(sub, ast.Els):
        _check_expr(sub.ty, dom)
        _check_expr(sub.tm, dom)
    elif isinstance(sub, ast.Lift):
        _check_sub(sub.sub, _split(dom, sub).ctx)
        _check_expr(sub.ty, infer_cod(sub.sub, _split(dom, sub).ctx))
    else:
        _check_ctx(cod)


def _check_expr(e, ctx: ast.CtxExpr) -> None:
    if isinstance(e, (ast.Nat, ast.N0, ast.U, ast.Zero)):
        return
    if isinstance(e, ast.Var):
        _split(ctx, e)
        return
    if isinstance(e, (ast.TySub, ast.TmSub)):
        _check_sub(e.sub, ctx)
        body = e.ty if isinstance(e, ast.TySub) else e.tm
        _check_expr(body, infer_cod(e.sub, ctx))
        return
    if isinstance(e, (ast.PiF, ast.SigmaF)):
        _check_expr(e.dom, ctx)
        _check_expr(e.cod, ast.Ext(ctx, e.dom))
        return
    if isinstance(e, ast.Lam):
        _check_expr(e.dom, ctx)
        _check_expr(e.cod, ast.Ext(ctx, e.dom))
        _check_expr(e.body, ast.Ext(ctx, e.dom))
        return
    if isinstance(e, ast.App):
        for part in (e.dom, e.fn, e.arg):
            _check_expr(part, ctx)
        _check_expr(e.cod, ast.Ext(ctx, e.dom))
        return
    if isinstance(e, ast.Rec):
        nat_ctx = ast.Ext(ctx, ast.Nat())
        _check_expr(e.motive, nat_ctx)
        _check_expr(e.base, ctx)
        _check_expr(e.step, ast.Ext(nat_ctx, e.motive))
        _check_expr(e.tm, ctx)
        return
    if isinstance(e, ast.R0):
        _check_expr(e.motive, ast.Ext(ctx, ast.N0()))
        _check_expr(e.tm, ctx)
        return
    if isinstance(e, ast.SumRec):
        for part in (e.left, e.right, e.tm):
            _check_expr(part, ctx)
        _check_expr(e.motive, ast.Ext(ctx, ast.Sum(e.left, e.right)))
        _check_expr(e.on_left, ast.Ext(ctx, e.left))
        _check_expr(e.on_right, ast.Ext(ctx, e.right))
        return
    if isinstance(e, ast.Wh):
        for part in (e.ty, e.motive, e.tm):
            _check_expr(part, ctx)
        _check_expr(e.body, ast.Ext(ctx, e.ty))
        return
    if isinstance(e, (ast.IdT, ast.Sum, ast.Br, ast.Pr, ast.Pr1, ast.Pr2, ast.Rr, ast.Succ,
                      ast.Lf, ast.Rg, ast.BrIntro)):
        for value in vars(e).values():
            _check_expr(value, ctx)
        return
    raise ScopeError(f"not an expression: {e!r}")


def well_scoped(e, ctx: ast.CtxExpr = ast.Empty()) -> Verdict:
    try:
        check_scope(e, ctx)
    except ScopeError as exc:
        return Fails(str(exc))
    return HOLDS
