"""Exception hierarchy shared by every module."""

from __future__ import annotations


class DenseAnchorError(Exception):
    """Base class for all errors raised by this package."""


class GraphParseError(DenseAnchorError, ValueError):
    """A line of an edge-list file could not be parsed."""

    def __init__(self, line_number: int, line: str, reason: str):
        self.line_number = line_number
        self.line = line
        self.reason = reason
        super().__init__(f"line {line_number}: {reason}: {line.rstrip()!r}")


class GraphValidationError(DenseAnchorError, ValueError):
    """Graph data violates a structural invariant (weights, simplicity, emptiness)."""


class DomainError(DenseAnchorError, ValueError):
    """An operation was called outside its domain (empty set, edgeless graph, ...)."""


class ParameterError(DenseAnchorError, ValueError):
    """Invalid solver parameter such as k or gamma."""


class OracleBudgetError(DenseAnchorError):
    """Brute-force oracle refused an input larger than its vertex budget."""


class InternalInvariantError(DenseAnchorError, AssertionError):
    """A state the algorithms guarantee cannot occur was reached."""
