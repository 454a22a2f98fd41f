"""Textual literals for iterative sets.

Grammar::

    value := "empty" | "natv" | "num" INT | "pairv" "(" value "," value ")"
           | "{" [ value { "," value } ] "}"

Printing is the inverse on hereditarily finite sets. Lazily indexed sets
print by name (``natv``, ``univ k``) or as an opaque ``lazy(label)``.
"""

from __future__ import annotations

from typing import Tuple

from ..errors import VmlSyntaxError
from .constructions import pair_v
from .vset import EMPTY, NumeralGen, Rule, UnivGen, VSet, from_children, natv, numeral

_PUNCT = "{},()"


def _position(s: str, i: int) -> Tuple[int, int]:
    line = s.count("\n", 0, i) + 1
    return line, i - (s.rfind("\n", 0, i) + 1) + 1


def _error(s: str, i: int, message: str) -> VmlSyntaxError:
    line, column = _position(s, i)
    return VmlSyntaxError(message, line, column)


def _skip_whitespace(s: str, i: int) -> int:
    while i < len(s) and s[i].isspace():
        i += 1
    return i


def _read_token(s: str, i: int) -> Tuple[str, int]:
    start = i
    while i < len(s) and not s[i].isspace() and s[i] not in _PUNCT:
        i += 1
    return s[start:i], i


def _expect(s: str, i: int, ch: str) -> int:
    i = _skip_whitespace(s, i)
    if i >= len(s) or s[i] != ch:
        raise _error(s, i, f"expected '{ch}'")
    return i + 1


def _read_set(s: str, i: int) -> Tuple[VSet, int]:
    assert s[i] == "{"
    i += 1
    members = []
    i = _skip_whitespace(s, i)
    if i < len(s) and s[i] == "}":
        return from_children(members), i + 1
    while True:
        value, i = _read(s, i)
        members.append(value)
        i = _skip_whitespace(s, i)
        if i >= len(s):
            raise _error(s, i, "set literal not closed")
        if s[i] == "}":
            return from_children(members), i + 1
        if s[i] != ",":
            raise _error(s, i, "expected ',' or '}'")
        i += 1


def _read(s: str, i: int) -> Tuple[VSet, int]:
    i = _skip_whitespace(s, i)
    if i >= len(s):
        raise _error(s, i, "unexpected end of literal")
    if s[i] == "{":
        return _read_set(s, i)
    if s[i] in _PUNCT:
        raise _error(s, i, f"unexpected '{s[i]}'")
    start = i
    tok, i = _read_token(s, i)
    if tok == "empty":
        return EMPTY, i
    if tok == "natv":
        return natv(), i
    if tok == "num":
        i = _skip_whitespace(s, i)
        digits, j = _read_token(s, i)
        if not digits.isdigit():
            raise _error(s, i, "num expects a natural number")
        return numeral(int(digits)), j
    if tok == "pairv":
        i = _expect(s, i, "(")
        left, i = _read(s, i)
        i = _expect(s, i, ",")
        right, i = _read(s, i)
        i = _expect(s, i, ")")
        return pair_v(left, right), i
    raise _error(s, start, f"unknown set literal '{tok}'")


def parse_vset(text: str) -> VSet:
    """Parse one literal; trailing input is an error."""

    value, i = _read(text, 0)
    i = _skip_whitespace(text, i)
    if i != len(text):
        raise _error(text, i, "trailing input after literal")
    return value


def print_vset(v: VSet) -> str:
    ch = v.children
    if isinstance(ch, NumeralGen):
        return "natv"
    if isinstance(ch, UnivGen):
        return f"univ {ch.level}"
    if not v.space.is_finite:
        label = ch.label if isinstance(ch, Rule) else "set"
        return f"lazy({label})"
    members = v.items()
    if not members:
        return "empty"
    return "{ " + ", ".join(print_vset(c) for _, c in members) + " }"
