"""Syntax trees back to ``.vml`` text."""

from __future__ import annotations

from dataclasses import fields
from typing import Mapping, Optional

from . import ast
from .parser import ATOMS, FORMS, JUDGMENTS

_HEADS = {cls: name for name, (cls, _) in FORMS.items()}
_ATOM_NAMES = {type(v): name for name, v in ATOMS.items()}
_JUDGMENT_NAMES = {cls: name for name, (cls, _) in JUDGMENTS.items()}


def print_expr(e, names: Optional[Mapping[object, str]] = None) -> str:
    """Render ``e``; subexpressions found in ``names`` print as that name."""

    names = names or {}
    if e in names:
        return names[e]
    if type(e) in _ATOM_NAMES:
        return _ATOM_NAMES[type(e)]
    if isinstance(e, (ast.Empty, ast.Ext)):
        types = []
        while isinstance(e, ast.Ext):
            types.append(e.ty)
            e = e.ctx
        return "(" + " ".join(["ctx"] + [print_expr(t, names) for t in reversed(types)]) + ")"
    head = _HEADS.get(type(e))
    if head is None:
        raise TypeError(f"cannot print {e!r}")
    parts = [head]
    for f in fields(e):
        value = getattr(e, f.name)
        parts.append(str(value) if isinstance(value, int) else print_expr(value, names))
    return "(" + " ".join(parts) + ")"


def print_judgment(j: ast.Judgment, names: Optional[Mapping[object, str]] = None) -> str:
    parts = ["judg", _JUDGMENT_NAMES[type(j)]]
    parts.extend(print_expr(getattr(j, f.name), names) for f in fields(j))
    return "(" + " ".join(parts) + ")"


def print_source(src: ast.SourceFile) -> str:
    lines = []
    names = {}
    for name, body in src.defs:
        lines.append(f"(def {name} {print_expr(body, names)})")
        names[body] = name
    lines.extend(print_judgment(item.judgment, names) for item in src.judgments)
    return "\n".join(lines) + "\n"
