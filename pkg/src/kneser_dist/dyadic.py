"""Exact numbers of the form a / 2^e."""

from __future__ import annotations

import decimal
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering

__all__ = ["DyadicRational", "decimal_string"]


@total_ordering
@dataclass(frozen=True)
class DyadicRational:
    numerator: int
    exponent: int = 0

    def __post_init__(self):
        a, e = int(self.numerator), int(self.exponent)
        if e < 0:
            a, e = a << -e, 0
        if a == 0:
            e = 0
        else:
            tz = (a & -a).bit_length() - 1
            shift = min(tz, e)
            a, e = a >> shift, e - shift
        object.__setattr__(self, "numerator", a)
        object.__setattr__(self, "exponent", e)

    @classmethod
    def pow2(cls, k: int) -> "DyadicRational":
        """2^k for any integer k."""
        return cls(1 << k, 0) if k >= 0 else cls(1, -k)

    @property
    def denominator(self) -> int:
        return 1 << self.exponent

    def to_fraction(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)

    def __add__(self, other):
        if isinstance(other, int):
            other = DyadicRational(other)
        if not isinstance(other, DyadicRational):
            return NotImplemented
        e = max(self.exponent, other.exponent)
        a = (self.numerator << (e - self.exponent)) + (other.numerator << (e - other.exponent))
        return DyadicRational(a, e)

    __radd__ = __add__

    def __neg__(self):
        return DyadicRational(-self.numerator, self.exponent)

    def __sub__(self, other):
        if isinstance(other, int):
            other = DyadicRational(other)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return DyadicRational(self.numerator * other, self.exponent)
        if not isinstance(other, DyadicRational):
            return NotImplemented
        return DyadicRational(self.numerator * other.numerator, self.exponent + other.exponent)

    __rmul__ = __mul__

    def _cmp_key(self, other) -> tuple[int, int]:
        if isinstance(other, int):
            other = DyadicRational(other)
        e = max(self.exponent, other.exponent)
        return self.numerator << (e - self.exponent), other.numerator << (e - other.exponent)

    def __eq__(self, other):
        if isinstance(other, Fraction):
            return self.to_fraction() == other
        if not isinstance(other, (int, DyadicRational)):
            return NotImplemented
        a, b = self._cmp_key(other)
        return a == b

    def __lt__(self, other):
        if isinstance(other, Fraction):
            return self.to_fraction() < other
        if not isinstance(other, (int, DyadicRational)):
            return NotImplemented
        a, b = self._cmp_key(other)
        return a < b

    def __hash__(self):
        return hash(self.to_fraction())

    def __float__(self):
        return float(self.to_fraction())

    def __str__(self):
        if self.exponent == 0:
            return str(self.numerator)
        return f"{self.numerator}/{self.denominator}"

    def __repr__(self):
        return f"DyadicRational({self.numerator}, {self.exponent})"


def decimal_string(x, digits: int = 10) -> str:
    """Render an exact rational with ``digits`` significant digits (reporting only)."""
    q = x.to_fraction() if isinstance(x, DyadicRational) else Fraction(x)
    ctx = decimal.Context(prec=digits, rounding=decimal.ROUND_HALF_EVEN)
    d = ctx.divide(decimal.Decimal(q.numerator), decimal.Decimal(q.denominator))
    return format(d, "f")
