"""Directed-rounding rational intervals.

Exact coordinates are rationals, but Euclidean lengths are square roots
and generally irrational.  Every exact-mode quantity built from lengths
is therefore reported as an enclosing interval [lo, hi] with rational
endpoints.  Strict inequalities between such quantities can then be
certified mechanically: ``a.hi < b.lo`` proves a < b no matter how the
true irrational values round.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

DEFAULT_PRECISION = 64


def sqrt_bounds(value, bits: int = DEFAULT_PRECISION) -> tuple[Fraction, Fraction]:
    """Enclose sqrt(value) within a dyadic interval of width <= 2**-bits.

    When value is the square of a rational the bounds coincide and the
    result is exact.  The lower bound rounds toward zero, the upper
    bound away; both are tight to one unit in the last place.
    """
    value = Fraction(value)
    if value < 0:
        raise ValueError("square root of a negative value")
    num, den = value.numerator, value.denominator
    rn, rd = isqrt(num), isqrt(den)
    if rn * rn == num and rd * rd == den:
        root = Fraction(rn, rd)
        return root, root
    scale = 1 << bits
    lo_int = isqrt((num * scale * scale) // den)
    return Fraction(lo_int, scale), Fraction(lo_int + 1, scale)


@dataclass(frozen=True)
class Interval:
    """Closed rational interval certified to contain one real value."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))
        if self.lo > self.hi:
            raise ValueError(f"empty interval: lo={self.lo} > hi={self.hi}")

    @staticmethod
    def point(value) -> "Interval":
        value = Fraction(value)
        return Interval(value, value)

    @staticmethod
    def sqrt(value, bits: int = DEFAULT_PRECISION) -> "Interval":
        return Interval(*sqrt_bounds(value, bits))

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def is_point(self) -> bool:
        return self.lo == self.hi

    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def __float__(self) -> float:
        return float(self.midpoint())

    def _coerce(other) -> "Interval":
        if isinstance(other, Interval):
            return other
        return Interval.point(other)

    def __add__(self, other):
        other = Interval._coerce(other)
        return Interval(self.lo + other.lo, self.hi + other.hi)

    __radd__ = __add__

    def __neg__(self):
        return Interval(-self.hi, -self.lo)

    def __sub__(self, other):
        return self + (-Interval._coerce(other))

    def __rsub__(self, other):
        return Interval._coerce(other) + (-self)

    def __mul__(self, other):
        other = Interval._coerce(other)
        products = (
            self.lo * other.lo,
            self.lo * other.hi,
            self.hi * other.lo,
            self.hi * other.hi,
        )
        return Interval(min(products), max(products))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = Interval._coerce(other)
        if other.lo <= 0 <= other.hi:
            raise ZeroDivisionError("divisor interval contains zero")
        quotients = (
            self.lo / other.lo,
            self.lo / other.hi,
            self.hi / other.lo,
            self.hi / other.hi,
        )
        return Interval(min(quotients), max(quotients))

    def magnitude(self) -> "Interval":
        """Enclosure of |x| for x in this interval."""
        if self.lo >= 0:
            return self
        if self.hi <= 0:
            return -self
        return Interval(Fraction(0), max(-self.lo, self.hi))

    def sqrt_of(self, bits: int = DEFAULT_PRECISION) -> "Interval":
        if self.lo < 0:
            raise ValueError("interval extends below zero")
        return Interval(sqrt_bounds(self.lo, bits)[0], sqrt_bounds(self.hi, bits)[1])

    # Certified order predicates.  Each returns True only when the
    # relation provably holds for the enclosed real values; False means
    # "not certified", not "certified false".

    def certainly_lt(self, other) -> bool:
        other = Interval._coerce(other)
        return self.hi < other.lo

    def certainly_le(self, other) -> bool:
        other = Interval._coerce(other)
        return self.hi <= other.lo

    def certainly_gt(self, other) -> bool:
        return Interval._coerce(other).certainly_lt(self)

    def certainly_ge(self, other) -> bool:
        return Interval._coerce(other).certainly_le(self)

    def overlaps(self, other) -> bool:
        other = Interval._coerce(other)
        return not (self.hi < other.lo or other.hi < self.lo)

    def __contains__(self, value) -> bool:
        value = Fraction(value)
        return self.lo <= value <= self.hi


def envelope_max(intervals) -> Interval:
    """Enclosure of max(x_1, ..., x_n) given enclosures of each x_i."""
    intervals = list(intervals)
    if not intervals:
        raise ValueError("envelope_max of no intervals")
    return Interval(max(iv.lo for iv in intervals), max(iv.hi for iv in intervals))


def interval_sum(intervals) -> Interval:
    lo = Fraction(0)
    hi = Fraction(0)
    for iv in intervals:
        lo += iv.lo
        hi += iv.hi
    return Interval(lo, hi)
