"""Exception types shared across the package."""


class SympectraError(Exception):
    """Base class for all package-specific errors."""


class DomainError(SympectraError, ValueError):
    """Input violates a documented precondition (bad shape, sign, range)."""


class NumericalError(SympectraError, ArithmeticError):
    """A computation could not be completed or failed its own verification."""
