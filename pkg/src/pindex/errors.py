"""Exception types shared across the package."""

from __future__ import annotations


class PIndexError(Exception):
    """Base class for every error this package raises on purpose."""


class DomainError(PIndexError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class PolicyError(PIndexError, ValueError):
    """A partition policy is malformed or cannot resolve a request."""


class ValidationError(PIndexError, ValueError):
    """Input data violates a documented constraint."""


class ParseError(ValidationError):
    """A record or policy document failed to parse.

    ``line`` is the 1-based line number for CSV input (None for JSON,
    where the message names the record instead); ``column`` is the
    offending column name when one can be singled out.
    """

    def __init__(self, message: str, line: int | None = None, column: str | None = None):
        self.line = line
        self.column = column
        if line is not None and column is not None:
            message = f"line {line}, column {column!r}: {message}"
        elif line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class UndefinedMetricError(PIndexError):
    """A metric is undefined for the given input (e.g. an empty record set)."""
