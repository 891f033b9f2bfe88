"""Exception hierarchy shared by every module.

Each class maps onto one CLI exit code (see ``cli.EXIT_CODES``).
"""

from __future__ import annotations


class AdditiveBasesError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(AdditiveBasesError, ValueError):
    """An operation was called outside its domain (e.g. empty set)."""


class SetParseError(DomainError):
    """A set literal could not be parsed, or was unsorted / had duplicates."""


class IntegerOverflowError(AdditiveBasesError, OverflowError):
    """A value left the signed 64-bit range."""


class BudgetExceededError(AdditiveBasesError, RuntimeError):
    """An enumeration ran past its configured evaluation budget.

    ``partial`` carries whatever was computed before the cap was hit; it is
    never certified.
    """

    def __init__(self, message: str, partial=None):
        super().__init__(message)
        self.partial = partial


class PropertyViolationError(AdditiveBasesError, AssertionError):
    """A proven property failed on computed data."""


class VerificationError(AdditiveBasesError):
    """A stored or constructed object failed re-verification."""

    def __init__(self, message: str, counterexamples=()):
        super().__init__(message)
        self.counterexamples = list(counterexamples)
