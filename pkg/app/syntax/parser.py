"""S-expressions to syntax trees.

Every compound form is ``(head arg ...)`` with a fixed argument list given
by ``FORMS``; ``var``, ``zero``, ``nat`` and ``n0`` are bare atoms. Type and
term slots both accept either kind of expression, since terms of a
universe are types. ``(def name expr)`` binds an abbreviation that later
forms may use by name.
"""

from __future__ import annotations

import logging
from typing import Dict, List, Optional, Tuple

from ..errors import VmlSyntaxError
from . import ast
from .reader import Atom, SExpr, SList, read_all

logger = logging.getLogger(__name__)

CTX, SUB, EXPR, INT = "ctx", "sub", "expr", "int"

_DESCRIBE = {CTX: "a context", SUB: "a substitution", EXPR: "a type or term"}

FORMS: Dict[str, Tuple[type, Tuple[str, ...]]] = {
    # types
    "pi": (ast.PiF, (EXPR, EXPR)),
    "sigma": (ast.SigmaF, (EXPR, EXPR)),
    "id": (ast.IdT, (EXPR, EXPR, EXPR)),
    "sum": (ast.Sum, (EXPR, EXPR)),
    "u": (ast.U, (INT,)),
    "br": (ast.Br, (EXPR,)),
    "tysub": (ast.TySub, (EXPR, SUB)),
    # terms
    "lam": (ast.Lam, (EXPR, EXPR, EXPR)),
    "app": (ast.App, (EXPR, EXPR, EXPR, EXPR)),
    "pr": (ast.Pr, (EXPR, EXPR)),
    "pr1": (ast.Pr1, (EXPR,)),
    "pr2": (ast.Pr2, (EXPR,)),
    "rr": (ast.Rr, (EXPR,)),
    "succ": (ast.Succ, (EXPR,)),
    "rec": (ast.Rec, (EXPR, EXPR, EXPR, EXPR)),
    "r0": (ast.R0, (EXPR, EXPR)),
    "lf": (ast.Lf, (EXPR, EXPR, EXPR)),
    "rg": (ast.Rg, (EXPR, EXPR, EXPR)),
    "sumrec": (ast.SumRec, (EXPR, EXPR, EXPR, EXPR, EXPR, EXPR)),
    "brin": (ast.BrIntro, (EXPR,)),
    "wh": (ast.Wh, (EXPR, EXPR, EXPR, EXPR)),
    "tmsub": (ast.TmSub, (EXPR, SUB)),
    # substitutions
    "idsub": (ast.Id, (CTX,)),
    "comp": (ast.Comp, (SUB, SUB)),
    "down": (ast.Down, (EXPR,)),
    "spair": (ast.Pair, (SUB, EXPR, EXPR)),
    "els": (ast.Els, (EXPR, EXPR)),
    "lift": (ast.Lift, (EXPR, SUB)),
    "phi": (ast.Phi, (CTX, CTX)),
    "stepsub": (ast.StepSub, (CTX,)),
    "sumsub-lf": (ast.SumSubLf, (EXPR, EXPR)),
    "sumsub-rg": (ast.SumSubRg, (EXPR, EXPR)),
    "pr-x": (ast.PrX, (EXPR,)),
    "pr-y": (ast.PrY, (EXPR,)),
    "br-sb": (ast.BrSb, (EXPR,)),
}

ATOMS = {"var": ast.Var(), "zero": ast.Zero(), "nat": ast.Nat(), "n0": ast.N0()}

JUDGMENTS: Dict[str, Tuple[type, Tuple[str, ...]]] = {
    "ctx": (ast.CtxValid, (CTX,)),
    "ctx-eq": (ast.CtxEq, (CTX, CTX)),
    "ty": (ast.IsTy, (CTX, EXPR)),
    "ty-eq": (ast.TyEq, (CTX, EXPR, EXPR)),
    "elt": (ast.Elt, (CTX, EXPR, EXPR)),
    "elt-eq": (ast.EltEq, (CTX, EXPR, EXPR, EXPR)),
    "sub": (ast.IsSub, (SUB, CTX, CTX)),
    "sub-eq": (ast.SubEq, (SUB, SUB, CTX, CTX)),
}

RESERVED = set(FORMS) | set(ATOMS) | {"ctx", "def", "judg"}


def _error(node: SExpr, message: str) -> VmlSyntaxError:
    return VmlSyntaxError(message, node.line, node.column)


def _kind(value: object) -> str:
    if isinstance(value, ast.CTX_FORMERS):
        return CTX
    if isinstance(value, ast.SUB_FORMERS):
        return SUB
    return EXPR


class Parser:
    """Stateful over the abbreviations seen so far."""

    def __init__(self) -> None:
        self.defs: Dict[str, ast.Expr] = {}

    def expr(self, node: SExpr, kind: str = EXPR):
        value = self.form(node)
        if _kind(value) != kind:
            raise _error(node, f"expected {_DESCRIBE[kind]}")
        return value

    def form(self, node: SExpr):
        if isinstance(node, Atom):
            if node.text in ATOMS:
                return ATOMS[node.text]
            if node.text in self.defs:
                return self.defs[node.text]
            raise _error(node, f"unknown name '{node.text}'")
        if not node.items:
            raise _error(node, "empty form")
        head = node.items[0]
        if not isinstance(head, Atom):
            raise _error(head, "form head must be a name")
        args = node.items[1:]
        if head.text == "ctx":
            ctx: ast.CtxExpr = ast.Empty()
            for a in args:
                ctx = ast.Ext(ctx, self.expr(a))
            return ctx
        if head.text not in FORMS:
            raise _error(head, f"unknown form '{head.text}'")
        cls, kinds = FORMS[head.text]
        return cls(*self._args(node, head.text, kinds, args))

    def _args(self, node: SList, name: str, kinds, args) -> List[object]:
        if len(args) != len(kinds):
            raise _error(node, f"'{name}' takes {len(kinds)} arguments, got {len(args)}")
        out: List[object] = []
        for kind, a in zip(kinds, args):
            if kind == INT:
                if not (isinstance(a, Atom) and a.is_int):
                    raise _error(a, "expected a natural number")
                out.append(int(a.text))
            else:
                out.append(self.expr(a, kind))
        return out

    def top(self, node: SExpr):
        """A ``def`` (returns ``None``) or a located judgment."""

        if not (isinstance(node, SList) and node.items and isinstance(node.items[0], Atom)):
            raise _error(node, "expected (def ...) or (judg ...)")
        head = node.items[0].text
        if head == "def":
            if len(node.items) != 3 or not isinstance(node.items[1], Atom):
                raise _error(node, "expected (def name expr)")
            name = node.items[1]
            if name.text in RESERVED or name.is_int:
                raise _error(name, f"'{name.text}' cannot be defined")
            self.defs[name.text] = self.form(node.items[2])
            return None
        if head == "judg":
            if len(node.items) < 2 or not isinstance(node.items[1], Atom):
                raise _error(node, "expected (judg form ...)")
            form = node.items[1].text
            if form not in JUDGMENTS:
                raise _error(node.items[1], f"unknown judgment form '{form}'")
            cls, kinds = JUDGMENTS[form]
            return ast.Located(cls(*self._args(node, form, kinds, node.items[2:])), node.line)
        raise _error(node, f"unknown top-level form '{head}'")


def parse(text: str) -> ast.SourceFile:
    parser = Parser()
    judgments = []
    for node in read_all(text):
        item = parser.top(node)
        if item is not None:
            judgments.append(item)
    logger.debug("parsed source", extra={"defs": len(parser.defs), "judgments": len(judgments)})
    return ast.SourceFile(tuple(parser.defs.items()), tuple(judgments))


def parse_expr(text: str, defs: Optional[Dict[str, ast.Expr]] = None):
    """A single expression of any kind, optionally after some ``def`` forms."""

    parser = Parser()
    parser.defs.update(defs or {})
    nodes = read_all(text)
    if not nodes:
        raise VmlSyntaxError("expected an expression", 1, 1)
    for node in nodes[:-1]:
        if parser.top(node) is not None:
            raise _error(node, "only definitions may precede the expression")
    return parser.form(nodes[-1])
