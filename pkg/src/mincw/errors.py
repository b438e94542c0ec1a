"""Exception types shared across the package."""

from __future__ import annotations

__all__ = [
    "MincwError",
    "FormatError",
    "InvalidCodeError",
    "DomainError",
    "BudgetError",
    "CrossCheckError",
]


class MincwError(Exception):
    """Base class for all package errors."""


class FormatError(MincwError, ValueError):
    """Malformed textual input (bit strings, matrix files)."""


class InvalidCodeError(MincwError, ValueError):
    """Generator matrix does not define a valid code (e.g. rank deficient)."""


class DomainError(MincwError, ValueError):
    """Arguments outside an operation's domain."""


class BudgetError(MincwError, RuntimeError):
    """A work guard or an explicit node budget was exceeded."""


class CrossCheckError(MincwError, RuntimeError):
    """Two independent computations of the same quantity disagree."""
