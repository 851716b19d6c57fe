"""Exact scalars: rational numbers and dyadic intervals.

The whole algebraic layer of the package works over the rationals via
:class:`fractions.Fraction`.  Quantities that are algebraic but irrational
(for example normal-form parameters obtained by moving an irrational root
direction) are reported as :class:`DyadicInterval` — a closed interval with
rational endpoints that is guaranteed to contain the exact value.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Scalar = Fraction

RationalLike = Union[int, Fraction, str]


def Q(value: RationalLike, den: int | None = None) -> Fraction:
    """Coerce ``value`` to an exact rational.

    Accepts ints, Fractions and strings like ``"3/5"`` or ``"-2"``.  Floats
    are deliberately rejected: every exact quantity in this package must be
    constructed from integer data.
    """
    if den is not None:
        return Fraction(value, den)  # type: ignore[arg-type]
    if isinstance(value, float):
        raise TypeError("floats are not exact; pass a Fraction, int or 'p/q' string")
    return Fraction(value)


def format_rational(q: Fraction) -> str:
    """Render ``q`` as ``p`` or ``p/q`` with no spaces."""
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class DyadicInterval:
    """A closed interval ``[lo, hi]`` with rational endpoints.

    Used to report exact-but-irrational quantities with certified bounds.
    Supports the ring operations needed to evaluate polynomials on
    intervals; all bounds are outward-rounded trivially (endpoint
    arithmetic is exact, so no rounding is ever needed).
    """

    lo: Fraction
    hi: Fraction

    def __post_init__(self) -> None:
        if self.lo > self.hi:
            raise ValueError("interval endpoints out of order")

    # -- classification -------------------------------------------------
    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def is_point(self) -> bool:
        return self.lo == self.hi

    def contains(self, q: Fraction) -> bool:
        return self.lo <= q <= self.hi

    def sign(self) -> int | None:
        """+1/-1 if the interval is strictly one-signed, 0 for the point 0,
        else None (sign not determined)."""
        if self.lo > 0:
            return 1
        if self.hi < 0:
            return -1
        if self.lo == self.hi == 0:
            return 0
        return None

    # -- arithmetic ------------------------------------------------------
    @staticmethod
    def of(value: Fraction | int | "DyadicInterval") -> "DyadicInterval":
        if isinstance(value, DyadicInterval):
            return value
        f = Fraction(value)
        return DyadicInterval(f, f)

    def __neg__(self) -> "DyadicInterval":
        return DyadicInterval(-self.hi, -self.lo)

    def __add__(self, other: "DyadicInterval | Fraction | int") -> "DyadicInterval":
        o = DyadicInterval.of(other)
        return DyadicInterval(self.lo + o.lo, self.hi + o.hi)

    __radd__ = __add__

    def __sub__(self, other: "DyadicInterval | Fraction | int") -> "DyadicInterval":
        return self + (-DyadicInterval.of(other))

    def __rsub__(self, other: "DyadicInterval | Fraction | int") -> "DyadicInterval":
        return DyadicInterval.of(other) + (-self)

    def __mul__(self, other: "DyadicInterval | Fraction | int") -> "DyadicInterval":
        o = DyadicInterval.of(other)
        products = (self.lo * o.lo, self.lo * o.hi, self.hi * o.lo, self.hi * o.hi)
        return DyadicInterval(min(products), max(products))

    __rmul__ = __mul__

    def __truediv__(self, other: "DyadicInterval | Fraction | int") -> "DyadicInterval":
        o = DyadicInterval.of(other)
        if o.lo <= 0 <= o.hi:
            raise ZeroDivisionError("interval divisor straddles zero")
        quotients = (self.lo / o.lo, self.lo / o.hi, self.hi / o.lo, self.hi / o.hi)
        return DyadicInterval(min(quotients), max(quotients))

    def __float__(self) -> float:
        return float(self.mid)

    def __str__(self) -> str:
        return f"[{format_rational(self.lo)}, {format_rational(self.hi)}]"


ExactOrInterval = Union[Fraction, DyadicInterval]


def eval_poly_interval(coeffs: list[Fraction], x: ExactOrInterval) -> ExactOrInterval:
    """Evaluate a univariate polynomial (coefficient list, index = degree)
    at an exact rational or an interval, exactly."""
    acc: ExactOrInterval = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc
