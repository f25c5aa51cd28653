"""Exception types shared across the package."""


class AciringError(Exception):
    """Base class for all errors raised by this package."""


class DimensionMismatch(AciringError, ValueError):
    """Operands live in polynomial rings with different variable counts."""


class FieldMismatch(AciringError, ValueError):
    """Operands carry different coefficient fields."""


class ExponentCapExceeded(AciringError, ValueError):
    """A monomial product pushed some exponent past the configured cap."""

    def __init__(self, exponent, cap):
        self.exponent = exponent
        self.cap = cap
        super().__init__(f"exponent {exponent} exceeds cap {cap}")


class DegreeCapExceeded(AciringError, RuntimeError):
    """Completing a Groebner basis would require work above the degree cap."""

    def __init__(self, cap, message=None):
        self.cap = cap
        super().__init__(message or f"S-pair above degree cap {cap} remains unprocessed")


class BoundTooSmall(AciringError, RuntimeError):
    """A graded computation needs data beyond the requested degree window."""
