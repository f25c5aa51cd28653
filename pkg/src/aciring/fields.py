"""Coefficient fields: exact rationals and prime fields GF(p).

Rational coefficients are plain ``fractions.Fraction`` values; prime-field
coefficients are ints in ``range(p)``.  A ``Field`` instance bundles the
arithmetic so polynomial and matrix code can stay field-agnostic.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .errors import FieldMismatch

DEFAULT_PRIME = 32003


class Field:
    """The rationals (characteristic 0) or GF(p) for a prime p."""

    __slots__ = ("characteristic",)

    def __init__(self, characteristic: int = 0):
        if characteristic < 0:
            raise ValueError("characteristic must be 0 or a prime")
        if characteristic:
            # tiny trial-division check; the primes used here are small
            p = characteristic
            if p < 2 or any(p % q == 0 for q in range(2, min(p, 1 + int(p ** 0.5) + 1))):
                raise ValueError(f"{p} is not prime")
        self.characteristic = characteristic

    # -- basic queries ------------------------------------------------
    @property
    def is_prime_field(self) -> bool:
        return self.characteristic != 0

    def zero(self):
        return 0 if self.characteristic else Fraction(0)

    def one(self):
        return 1 if self.characteristic else Fraction(1)

    def from_int(self, k: int):
        if self.characteristic:
            return k % self.characteristic
        return Fraction(k)

    def is_zero(self, a) -> bool:
        return a == 0

    # -- arithmetic ---------------------------------------------------
    def add(self, a, b):
        if self.characteristic:
            return (a + b) % self.characteristic
        return a + b

    def sub(self, a, b):
        if self.characteristic:
            return (a - b) % self.characteristic
        return a - b

    def mul(self, a, b):
        if self.characteristic:
            return (a * b) % self.characteristic
        return a * b

    def neg(self, a):
        if self.characteristic:
            return (-a) % self.characteristic
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.characteristic:
            # int() guards against numpy scalars, which 3-arg pow rejects
            return pow(int(a), self.characteristic - 2, self.characteristic)
        return 1 / Fraction(a)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    # -- misc ---------------------------------------------------------
    def coeff_str(self, a) -> str:
        return str(a)

    def parse_coeff(self, s: str):
        if "/" in s:
            num, den = s.split("/")
            if self.characteristic:
                return self.div(int(num) % self.characteristic, int(den) % self.characteristic)
            return Fraction(int(num), int(den))
        return self.from_int(int(s))

    def __eq__(self, other):
        return isinstance(other, Field) and other.characteristic == self.characteristic

    def __hash__(self):
        return hash(("Field", self.characteristic))

    def __repr__(self):
        return "QQ" if not self.characteristic else f"GF({self.characteristic})"


QQ = Field(0)


@lru_cache(maxsize=None)
def GF(p: int) -> Field:
    return Field(p)


def field_for_char(characteristic: int | None) -> Field:
    if not characteristic:
        return QQ
    return GF(characteristic)


def check_same_field(a: Field, b: Field):
    if a.characteristic != b.characteristic:
        raise FieldMismatch(f"mixed coefficient fields {a} and {b}")


def default_characteristic(n: int) -> int:
    """Default coefficient choice: exact rationals up to n=7, GF(32003) beyond.

    Rank computations at n = 8 get large enough that the single-large-prime
    path is the practical default; callers can always force characteristic 0.
    The prime comfortably exceeds every n in scope, matching the standing
    hypothesis that the characteristic is zero or larger than n.
    """
    return 0 if n <= 7 else DEFAULT_PRIME
