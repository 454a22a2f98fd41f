"""Positioned s-expression reader for ``.vml`` sources.

Atoms keep their 1-based line and column so that the parser can report
errors where they occur. ``;`` starts a comment that runs to the end of
the line. Lists nest at most ``MAX_DEPTH`` deep.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass
from typing import List, Tuple, Union

from ..errors import VmlSyntaxError

MAX_DEPTH = 128


@dataclass(frozen=True)
class Atom:
    text: str
    line: int
    column: int

    @property
    def is_int(self) -> bool:
        return self.text.isdigit()


@dataclass(frozen=True)
class SList:
    items: Tuple["SExpr", ...]
    line: int
    column: int


SExpr = Union[Atom, SList]


class _Source:
    def __init__(self, text: str) -> None:
        self.text = text
        self.starts = [0]
        for i, ch in enumerate(text):
            if ch == "\n":
                self.starts.append(i + 1)

    def position(self, i: int) -> Tuple[int, int]:
        line = bisect.bisect_right(self.starts, i) - 1
        return line + 1, i - self.starts[line] + 1

    def error(self, i: int, message: str) -> VmlSyntaxError:
        line, column = self.position(i)
        return VmlSyntaxError(message, line, column)


def _skip_whitespace(s: str, i: int) -> int:
    while i < len(s):
        if s[i] == ";":
            while i < len(s) and s[i] != "\n":
                i += 1
            continue
        if not s[i].isspace():
            return i
        i += 1
    return i


def _read_token(s: str, i: int) -> Tuple[str, int]:
    start = i
    while i < len(s) and not s[i].isspace() and s[i] not in "();":
        i += 1
    return s[start:i], i


def _read(src: _Source, i: int) -> Tuple[SExpr, int]:
    s = src.text
    # open lists: position of the '(' and the items read so far
    stack: List[Tuple[int, List[SExpr]]] = []
    while True:
        i = _skip_whitespace(s, i)
        if i == len(s):
            if stack:
                raise src.error(stack[-1][0], "list not closed")
            raise src.error(i, "unexpected end of input")
        if s[i] == "(":
            if len(stack) == MAX_DEPTH:
                raise src.error(i, f"forms nest deeper than {MAX_DEPTH} levels")
            stack.append((i, []))
            i += 1
            continue
        value: SExpr
        if s[i] == ")":
            if not stack:
                raise src.error(i, "unbalanced parentheses")
            open_at, items = stack.pop()
            line, column = src.position(open_at)
            value = SList(tuple(items), line, column)
            i += 1
        else:
            line, column = src.position(i)
            tok, i = _read_token(s, i)
            value = Atom(tok, line, column)
        if not stack:
            return value, i
        stack[-1][1].append(value)


def read_all(text: str) -> List[SExpr]:
    """Every top-level s-expression of ``text``, in order."""

    src = _Source(text)
    out: List[SExpr] = []
    i = _skip_whitespace(text, 0)
    while i < len(text):
        value, i = _read(src, i)
        out.append(value)
        i = _skip_whitespace(text, i)
    return out
