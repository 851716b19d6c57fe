"""Truncated bivariate polynomials over the rationals ("jets").

A :class:`JetPoly` of order ``N`` stores the coefficients of a polynomial in
two variables up to and including total degree ``N``; every operation
truncates its result back to the stated order.  Coefficients are exact
:class:`fractions.Fraction` values and zero coefficients are never stored.

Variable naming: the first variable may be written ``u`` or ``x``; the
second ``v``, ``y`` or ``z`` (charts name their second coordinate
differently, the algebra does not care).
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Iterable, Iterator, Mapping, Union

from .errors import NonOriginPreserving
from .rationals import Q, RationalLike, format_rational

DEFAULT_ORDER = 7

_FIRST_VARS = {"u", "x"}
_SECOND_VARS = {"v", "y", "z"}

ScalarLike = Union[int, Fraction]


def _var_index(var: str) -> int:
    if var in _FIRST_VARS:
        return 0
    if var in _SECOND_VARS:
        return 1
    raise ValueError(f"unknown variable name {var!r}; use one of u/x or v/y/z")


class JetPoly:
    """An order-``N`` jet of a function of two variables, over Q.

    Instances are immutable; all arithmetic returns new objects.  Mixed
    arithmetic between jets of different orders truncates to the smaller
    order (the only safe common ground).
    """

    __slots__ = ("_c", "_order")

    def __init__(
        self,
        coeffs: Mapping[tuple[int, int], RationalLike] | Iterable[tuple[tuple[int, int], RationalLike]] = (),
        order: int = DEFAULT_ORDER,
    ) -> None:
        if order < 0:
            raise ValueError("jet order must be >= 0")
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        store: dict[tuple[int, int], Fraction] = {}
        for (i, j), value in items:
            if i < 0 or j < 0:
                raise ValueError(f"negative exponent in jet term {(i, j)}")
            if i + j > order:
                continue
            q = Q(value)
            if q != 0:
                store[(i, j)] = store.get((i, j), Fraction(0)) + q
                if store[(i, j)] == 0:
                    del store[(i, j)]
        object.__setattr__(self, "_c", store)
        object.__setattr__(self, "_order", order)

    def __setattr__(self, name: str, value: object) -> None:  # pragma: no cover
        raise AttributeError("JetPoly is immutable")

    # -- basic protocol ---------------------------------------------------
    @property
    def order(self) -> int:
        return self._order

    def coefficient(self, i: int, j: int) -> Fraction:
        return self._c.get((i, j), Fraction(0))

    def terms(self) -> Iterator[tuple[tuple[int, int], Fraction]]:
        """Iterate terms in graded-lexicographic order (deterministic)."""
        for key in sorted(self._c, key=lambda k: (k[0] + k[1], k[0])):
            yield key, self._c[key]

    def coeff_dict(self) -> dict[tuple[int, int], Fraction]:
        return dict(self._c)

    def is_zero(self) -> bool:
        return not self._c

    def total_degree(self) -> int:
        """Degree of the stored polynomial (-1 for the zero jet)."""
        return max((i + j for (i, j) in self._c), default=-1)

    def valuation(self) -> int | None:
        """Lowest total degree of a nonzero term (None for the zero jet)."""
        return min((i + j for (i, j) in self._c), default=None)

    def homogeneous_part(self, d: int) -> "JetPoly":
        return JetPoly({k: v for k, v in self._c.items() if k[0] + k[1] == d}, self._order)

    def jet(self, k: int) -> "JetPoly":
        """The k-jet: all terms of total degree <= k, stated at order k."""
        return JetPoly({key: v for key, v in self._c.items() if key[0] + key[1] <= k}, min(k, self._order) if k <= self._order else k)

    def with_order(self, order: int) -> "JetPoly":
        """Restate at a different order.

        Lowering the order drops terms.  Raising it keeps the stored terms
        and declares them complete up to the new order — only correct when
        the jet actually is the full polynomial, as it is for patch data.
        """
        return JetPoly(self._c, order)

    # -- equality ----------------------------------------------------------
    def __eq__(self, other: object) -> bool:
        if isinstance(other, JetPoly):
            return self._c == other._c and self._order == other._order
        if isinstance(other, (int, Fraction)):
            return self == JetPoly({(0, 0): other}, self._order)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((frozenset(self._c.items()), self._order))

    # -- ring operations ----------------------------------------------------
    @staticmethod
    def _coerce(value: "JetPoly | ScalarLike", order: int) -> "JetPoly":
        if isinstance(value, JetPoly):
            return value
        return JetPoly({(0, 0): value}, order)

    def __add__(self, other: "JetPoly | ScalarLike") -> "JetPoly":
        o = JetPoly._coerce(other, self._order)
        order = min(self._order, o._order)
        out = dict(self._c)
        for key, v in o._c.items():
            out[key] = out.get(key, Fraction(0)) + v
        return JetPoly(out, order)

    __radd__ = __add__

    def __neg__(self) -> "JetPoly":
        return JetPoly({k: -v for k, v in self._c.items()}, self._order)

    def __sub__(self, other: "JetPoly | ScalarLike") -> "JetPoly":
        return self + (-JetPoly._coerce(other, self._order))

    def __rsub__(self, other: "JetPoly | ScalarLike") -> "JetPoly":
        return JetPoly._coerce(other, self._order) + (-self)

    def __mul__(self, other: "JetPoly | ScalarLike") -> "JetPoly":
        if isinstance(other, (int, Fraction)):
            q = Q(other)
            return JetPoly({k: v * q for k, v in self._c.items()}, self._order)
        order = min(self._order, other._order)
        out: dict[tuple[int, int], Fraction] = {}
        for (i1, j1), v1 in self._c.items():
            if i1 + j1 > order:
                continue
            for (i2, j2), v2 in other._c.items():
                i, j = i1 + i2, j1 + j2
                if i + j > order:
                    continue
                key = (i, j)
                out[key] = out.get(key, Fraction(0)) + v1 * v2
        return JetPoly(out, order)

    __rmul__ = __mul__

    def __truediv__(self, other: ScalarLike) -> "JetPoly":
        q = Q(other)
        return self * (Fraction(1) / q)

    def __pow__(self, n: int) -> "JetPoly":
        if n < 0:
            raise ValueError("negative powers: use unit_inverse")
        result = JetPoly({(0, 0): 1}, self._order)
        base = self
        k = n
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    # -- calculus -----------------------------------------------------------
    def derive(self, var: str) -> "JetPoly":
        """Partial derivative; the result is an order ``N-1`` jet."""
        idx = _var_index(var)
        out: dict[tuple[int, int], Fraction] = {}
        for (i, j), v in self._c.items():
            if idx == 0 and i > 0:
                out[(i - 1, j)] = v * i
            elif idx == 1 and j > 0:
                out[(i, j - 1)] = v * j
        return JetPoly(out, max(self._order - 1, 0))

    def compose(self, first: "JetPoly", second: "JetPoly") -> "JetPoly":
        """Substitute jets for the two variables.

        Both substituted jets must vanish at the origin, otherwise the
        result would need coefficients of ``self`` beyond its order;
        :class:`NonOriginPreserving` is raised in that case.
        """
        if first.coefficient(0, 0) != 0 or second.coefficient(0, 0) != 0:
            raise NonOriginPreserving(
                "substitution does not fix the origin; constant terms "
                f"({format_rational(first.coefficient(0, 0))}, "
                f"{format_rational(second.coefficient(0, 0))})"
            )
        order = min(self._order, first._order, second._order)
        one = JetPoly({(0, 0): 1}, order)
        # cache powers
        max_i = max((i for (i, j) in self._c), default=0)
        max_j = max((j for (i, j) in self._c), default=0)
        pow1: list[JetPoly] = [one]
        for _ in range(max_i):
            pow1.append(pow1[-1] * first)
        pow2: list[JetPoly] = [one]
        for _ in range(max_j):
            pow2.append(pow2[-1] * second)
        acc = JetPoly({}, order)
        for (i, j), v in self._c.items():
            acc = acc + pow1[i] * pow2[j] * v
        return acc

    # -- units ---------------------------------------------------------------
    def unit_inverse(self) -> "JetPoly":
        """Multiplicative inverse of a jet with nonzero constant term."""
        c0 = self.coefficient(0, 0)
        if c0 == 0:
            raise ZeroDivisionError("jet has no multiplicative inverse (vanishes at origin)")
        w = self / c0 - 1  # order >= 1
        acc = JetPoly({(0, 0): 1}, self._order)
        term = JetPoly({(0, 0): 1}, self._order)
        for _ in range(self._order):
            term = term * (-w)
            if term.is_zero():
                break
            acc = acc + term
        return acc / c0

    def unit_power(self, exponent: Fraction) -> "JetPoly":
        """``(1 + w)**exponent`` for a jet ``self = 1 + w`` with ``w(0) = 0``.

        The binomial series has rational coefficients for any rational
        exponent, so the result is exact.
        """
        if self.coefficient(0, 0) != 1:
            raise ValueError("unit_power requires constant term exactly 1")
        w = self - 1
        acc = JetPoly({(0, 0): 1}, self._order)
        term = JetPoly({(0, 0): 1}, self._order)
        e = Q(exponent)
        for k in range(1, self._order + 1):
            term = term * w
            if term.is_zero():
                break
            coeff = Fraction(1)
            for m in range(k):
                coeff *= e - m
            coeff /= factorial(k)
            acc = acc + term * coeff
        return acc

    # -- evaluation ------------------------------------------------------------
    def eval(self, a: Fraction | int, b: Fraction | int) -> Fraction:
        a, b = Q(a), Q(b)
        total = Fraction(0)
        for (i, j), v in self._c.items():
            total += v * a**i * b**j
        return total

    def eval_float(self, a: float, b: float) -> float:
        total = 0.0
        for (i, j), v in self._c.items():
            total += float(v) * a**i * b**j
        return total

    def float_terms(self) -> list[tuple[int, int, float]]:
        """Deterministically ordered float coefficients for numeric layers."""
        return [(i, j, float(v)) for (i, j), v in self.terms()]

    # -- display ------------------------------------------------------------
    def __repr__(self) -> str:
        return f"JetPoly({self._pretty()}, order={self._order})"

    def _pretty(self) -> str:
        if not self._c:
            return "0"
        parts: list[str] = []
        for (i, j), v in self.terms():
            mono = ""
            if i:
                mono += "x" if i == 1 else f"x^{i}"
            if j:
                mono += "y" if j == 1 else f"y^{j}"
            coeff = format_rational(v)
            if mono:
                if v == 1:
                    coeff = ""
                elif v == -1:
                    coeff = "-"
                else:
                    coeff += "*"
            parts.append(coeff + mono if mono else coeff)
        return " + ".join(parts).replace("+ -", "- ")

    def __str__(self) -> str:
        return self._pretty()


def jet(coeffs: Mapping[tuple[int, int], RationalLike], order: int = DEFAULT_ORDER) -> JetPoly:
    """Convenience constructor."""
    return JetPoly(coeffs, order)


def jet_x(order: int = DEFAULT_ORDER) -> JetPoly:
    return JetPoly({(1, 0): 1}, order)


def jet_y(order: int = DEFAULT_ORDER) -> JetPoly:
    return JetPoly({(0, 1): 1}, order)


def jet_const(value: RationalLike, order: int = DEFAULT_ORDER) -> JetPoly:
    return JetPoly({(0, 0): value}, order)


# The three public operation names of the scalar/jet layer.

def jet_arith() -> None:  # pragma: no cover - documentation anchor
    """Arithmetic lives on :class:`JetPoly` operators (+, -, *, /, **)."""


def jet_compose(f: JetPoly, first: JetPoly, second: JetPoly) -> JetPoly:
    """Functional form of :meth:`JetPoly.compose`."""
    return f.compose(first, second)


def jet_derive(f: JetPoly, var: str) -> JetPoly:
    """Functional form of :meth:`JetPoly.derive`."""
    return f.derive(var)
