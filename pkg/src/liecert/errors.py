"""Exception hierarchy shared across the package."""

from __future__ import annotations


class LiecertError(Exception):
    """Base class for all errors raised by this package."""


class RingError(LiecertError):
    """Bad ring descriptor or a value that does not belong to the ring."""


class DimensionError(LiecertError):
    """Shape mismatch between matrices, vectors or ambient spaces."""


class ValidationError(LiecertError):
    """An axiom check failed; carries the full report."""

    def __init__(self, report):
        self.report = report
        super().__init__(report.summary())


class PreconditionError(LiecertError):
    """An operation was invoked outside its stated domain."""


class InternalCheckError(LiecertError):
    """A consistency check that should be unreachable for valid inputs failed."""


class ParseError(LiecertError):
    """Malformed input file; carries a block/index location when known."""

    def __init__(self, message: str, location: str | None = None):
        self.location = location
        if location:
            message = f"{location}: {message}"
        super().__init__(message)
