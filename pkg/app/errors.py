"""Error hierarchy shared by every layer of the kernel.

Library operations raise these; the judgment checker folds them into
verdicts and the CLI maps them to exit codes.
"""

from __future__ import annotations


class KernelError(RuntimeError):
    """Base class for kernel failures."""


class DomainMismatch(KernelError):
    """A child table does not cover exactly the keys of its key space."""


class KeyOutOfRange(KernelError):
    """A key was looked up in a space that does not contain it."""


class NotAPair(KernelError):
    """A set admits no reading as an ordered pair."""


class InfiniteUnsupported(KernelError):
    """A construction would have to enumerate an infinite key space."""


class UndecidedEquality(KernelError):
    """An equality needed to build a value came back unknown."""


class NotEqual(KernelError):
    """A transport was requested between sets that are not equal."""


class IllFormedCode(KernelError):
    """A universe code is not well formed at the requested level."""


class PremiseFails(KernelError):
    """A recomputed premise failed while evaluating a term or substitution."""


class ScopeError(KernelError):
    """An expression is not well scoped in its context."""


class VmlSyntaxError(KernelError):
    """Malformed ``.vml`` source, with a 1-based position."""

    def __init__(self, message: str, line: int, column: int) -> None:
        super().__init__(f"{line}:{column}: {message}")
        self.message = message
        self.line = line
        self.column = column
