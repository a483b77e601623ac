"""Exception types shared across the package."""

from __future__ import annotations


class BredonError(Exception):
    """Base class for all errors raised by this package."""


class SymbolicRankError(BredonError, ValueError):
    """A symbolic free rank reached a computation that needs an exact group."""


class OutOfRangeError(BredonError, LookupError):
    """A K-theory entry outside the declared range of a profile was requested."""


class UnknownEntryError(OutOfRangeError):
    """A K-theory entry is declared but its value is not known."""


class ProfileError(BredonError, ValueError):
    """Malformed or inconsistent profile / catalog document."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)


class HypothesisError(BredonError, ValueError):
    """The hypotheses of a closed-form statement are not met."""
