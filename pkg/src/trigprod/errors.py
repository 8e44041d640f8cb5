"""Exception types raised across the package."""

from __future__ import annotations


class TrigProdError(Exception):
    """Base class for all package errors."""


class ResourceLimitError(TrigProdError):
    """A coefficient table would exceed the configured memory cap."""


class OracleScaleError(TrigProdError):
    """A brute-force oracle was asked for a size beyond its cap."""


class DomainError(TrigProdError, ValueError):
    """An argument lies outside the domain of the operation."""


class AccuracyError(TrigProdError):
    """A numerical routine failed to reach its tolerance.

    The best estimate found so far is attached as ``estimate`` (and its
    error as ``error``) so callers can decide whether to use it anyway.
    """

    def __init__(self, message: str, estimate: float | None = None, error: float | None = None):
        super().__init__(message)
        self.estimate = estimate
        self.error = error


class IntegrityError(TrigProdError):
    """A cached coefficient file failed validation."""
