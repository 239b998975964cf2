"""Exception hierarchy shared by every module."""

from __future__ import annotations


class SwTriangleError(Exception):
    """Base class for library errors."""


class PreconditionError(SwTriangleError, ValueError):
    """Input violates a mathematical precondition (e.g. non-coprime p, q)."""


class GenericityError(SwTriangleError):
    """A configuration is degenerate: a vertex sits on a target, points collide, ..."""


class InstabilityError(GenericityError):
    """The perturbation parameter is too large for the supplied curve."""


class GradingError(SwTriangleError):
    """Inconsistent or missing grading data."""


class IntegrityError(SwTriangleError):
    """Flow data or chain maps fail a structural identity."""


class FormatError(SwTriangleError, ValueError):
    """A problem file could not be parsed.

    ``line`` and ``column`` are 1-based and set for syntax errors; ``path``
    names the offending JSON node for schema errors.
    """

    def __init__(self, message: str, line: int | None = None, column: int | None = None, path: str | None = None):
        super().__init__(message)
        self.line = line
        self.column = column
        self.path = path
