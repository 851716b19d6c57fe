"""Reduction of binary cubics to normal forms under the plane isometries
of the (x, z) tangent plane with induced metric dx^2 - dz^2.

The allowed coordinate changes are the linear maps preserving the metric
up to sign of the variables (hyperbolic rotations and reflections), plus,
for the one exceptional orbit, the metric-reversing swap of the two
variables.  Every nonzero cubic reduces to exactly one of:

* ``i``:          x (x^2 + s x z + t z^2)      — a timelike root factor;
* ``ii``:         z (t x^2 + s x z + z^2)      — a spacelike root factor;
* ``iii_plus``:   (x + z)(x^2 + s x z + t z^2) — a lightlike root factor;
* ``iii_minus``:  (x - z)(x^2 + s x z + t z^2);
* ``iv``:         x^2 z (no moduli).

A direction (d0, d1) in the plane is *timelike* when d0^2 - d1^2 < 0,
*spacelike* when positive, *lightlike* when zero.  Slopes w parametrise
directions (w, 1); the direction (1, 0) is the slope at infinity.

Moduli (s, t) are exact rationals when the chosen root is rational and
certified dyadic intervals of width <= 2^-40 otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Literal, Sequence

from .errors import BranchInvalid, ZeroCubic
from .jets import JetPoly
from .polytools import (
    Upoly,
    count_real_roots_interval,
    isolate_real_roots,
    uadd,
    udeg,
    udivmod,
    ueval,
    ugcd,
    umul,
    unormalize,
    urational_roots,
    uscale,
)
from .rationals import DyadicInterval, ExactOrInterval, Q, eval_poly_interval

FormName = Literal["i", "ii", "iii_plus", "iii_minus", "iv"]
CausalName = Literal["spacelike", "timelike", "lightlike"]

TARGET_WIDTH = Fraction(1, 2**40)


@dataclass(frozen=True)
class CubicForm:
    """A binary cubic a1 x^3 + a2 x^2 z + a3 x z^2 + a4 z^3."""

    a1: Fraction
    a2: Fraction
    a3: Fraction
    a4: Fraction

    @staticmethod
    def of(a1: object, a2: object, a3: object, a4: object) -> "CubicForm":
        return CubicForm(Q(a1), Q(a2), Q(a3), Q(a4))  # type: ignore[arg-type]

    @staticmethod
    def from_jet(f: JetPoly) -> "CubicForm":
        return CubicForm(
            f.coefficient(3, 0), f.coefficient(2, 1), f.coefficient(1, 2), f.coefficient(0, 3)
        )

    def coefficients(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.a1, self.a2, self.a3, self.a4)

    def is_zero(self) -> bool:
        return not any(self.coefficients())

    def evaluate(self, x: Fraction, z: Fraction) -> Fraction:
        return ((self.a1 * x + self.a2 * z) * x + self.a3 * z * z) * x + self.a4 * z**3

    def slope_poly(self) -> Upoly:
        """C(w, 1) as a polynomial in the slope w."""
        return unormalize([self.a4, self.a3, self.a2, self.a1])


@dataclass(frozen=True)
class RootRecord:
    """A real projective root of a binary cubic: its slope site (exact,
    isolated, or the slope at infinity), multiplicity, and causal type."""

    site: Fraction | DyadicInterval | Literal["infinity"]
    multiplicity: int
    causal: CausalName

    def sort_key(self) -> tuple[int, Fraction]:
        if self.site == "infinity":
            return (2, Fraction(0))
        if isinstance(self.site, Fraction):
            return (0, self.site)
        return (1, self.site.mid)


@dataclass(frozen=True)
class ReducedCubic:
    """A normal form with its moduli and the root that was moved into the
    distinguished factor (``None`` for form iv)."""

    form: FormName
    s: ExactOrInterval | None
    t: ExactOrInterval | None
    root: RootRecord | None

    def __str__(self) -> str:
        if self.form == "iv":
            return "iv"
        return f"{self.form}(s={self.s}, t={self.t})"


def root_causal_type(direction: Sequence[object]) -> CausalName:
    """Causal type of a tangent direction (d0, d1)."""
    d0, d1 = (Q(direction[0]), Q(direction[1]))  # type: ignore[arg-type]
    if d0 == 0 and d1 == 0:
        raise BranchInvalid("the zero vector has no causal type")
    norm = d0 * d0 - d1 * d1
    if norm > 0:
        return "spacelike"
    if norm < 0:
        return "timelike"
    return "lightlike"


def _slope_causal_type(w: Fraction) -> CausalName:
    return root_causal_type((w, Fraction(1)))


def _separated_from_units(lo: Fraction, hi: Fraction) -> bool:
    """Whether [lo, hi] avoids both -1 and 1."""
    return not (lo <= 1 <= hi) and not (lo <= -1 <= hi)


def _interval_causal_type(poly: Upoly, lo: Fraction, hi: Fraction) -> tuple[CausalName, Fraction, Fraction]:
    """Causal type of the (irrational, hence non-lightlike) root of ``poly``
    isolated by (lo, hi), refining the interval as needed."""
    while not _separated_from_units(lo, hi):
        mid = (lo + hi) / 2
        assert ueval(poly, mid) != 0, "irrational root cannot hit a rational midpoint"
        if count_real_roots_interval(poly, lo, mid) == 1:
            hi = mid
        else:
            lo = mid
    causal: CausalName = "timelike" if (-1 < lo and hi < 1) else "spacelike"
    return causal, lo, hi


def cubic_roots(cubic: CubicForm) -> list[RootRecord]:
    """All real projective roots of a nonzero binary cubic with
    multiplicities and causal types, sorted deterministically (exact slopes
    first, then isolated ones, then the slope at infinity)."""
    if cubic.is_zero():
        raise ZeroCubic("the zero cubic has no root structure")
    q = cubic.slope_poly()
    records: list[RootRecord] = []
    drop = 3 - udeg(q)  # multiplicity of the root at infinity
    if drop > 0:
        records.append(RootRecord("infinity", drop, "spacelike"))
    residual = q
    for value, mult in urational_roots(q):
        records.append(RootRecord(value, mult, _slope_causal_type(value)))
        for _ in range(mult):
            residual, rem = udivmod(residual, unormalize([-value, Fraction(1)]))
            assert not rem
    # any repeated root of a rational cubic is rational, so the residual
    # factor is squarefree and its real roots are simple and irrational
    for lo, hi in isolate_real_roots(residual):
        assert lo != hi, "rational root left in residual factor"
        causal, lo, hi = _interval_causal_type(residual, lo, hi)
        records.append(RootRecord(DyadicInterval(lo, hi), 1, causal))
    return sorted(records, key=RootRecord.sort_key)


# ---------------------------------------------------------------------------
# boosted coefficients as polynomials in the root slope
# ---------------------------------------------------------------------------


def _substitute(cubic: CubicForm, m: tuple[Upoly, Upoly, Upoly, Upoly]) -> tuple[Upoly, Upoly, Upoly, Upoly]:
    """Coefficients of C(m00 X + m01 Z, m10 X + m11 Z) in (X^3, X^2 Z,
    X Z^2, Z^3), each a polynomial in an auxiliary parameter."""
    m00, m01, m10, m11 = m
    zero: Upoly = []
    # new_x = m00 X + m01 Z, new_z = m10 X + m11 Z, tracked as coefficient
    # vectors over the basis X^i Z^j of each homogeneous degree
    out = [zero, zero, zero, zero]
    terms = (
        (cubic.a1, 3, 0),
        (cubic.a2, 2, 1),
        (cubic.a3, 1, 2),
        (cubic.a4, 0, 3),
    )
    from math import comb

    for coeff, i, j in terms:
        if coeff == 0:
            continue
        # (m00 X + m01 Z)^i expands over X^(i-p) Z^p
        for p in range(i + 1):
            for r in range(j + 1):
                # X exponent (i - p) + (j - r), Z exponent p + r
                zexp = p + r
                factor = uscale(
                    umul(
                        umul([Fraction(comb(i, p))], _upow(m00, i - p)),
                        _upow(m01, p),
                    ),
                    Fraction(comb(j, r)),
                )
                factor = umul(factor, umul(_upow(m10, j - r), _upow(m11, r)))
                out[zexp] = uadd(out[zexp], uscale(factor, coeff))
    return tuple(out)  # type: ignore[return-value]


def _upow(p: Upoly, n: int) -> Upoly:
    acc: Upoly = [Fraction(1)]
    for _ in range(n):
        acc = umul(acc, p)
    return acc


_W: Upoly = [Fraction(0), Fraction(1)]  # the slope variable


def _timelike_boost_polys(cubic: CubicForm) -> tuple[Upoly, Upoly, Upoly, Upoly]:
    """Coefficients of C(X + w Z, w X + Z) as polynomials in w: the change
    moving a root of slope w to the direction (0, 1)."""
    return _substitute(cubic, ([Fraction(1)], _W, _W, [Fraction(1)]))


def _spacelike_boost_polys(cubic: CubicForm) -> tuple[Upoly, Upoly, Upoly, Upoly]:
    """Coefficients of C(w X + Z, X + w Z): the change moving a root of
    slope w to the direction (1, 0)."""
    return _substitute(cubic, (_W, [Fraction(1)], [Fraction(1)], _W))


def _poly_vanishes_at(poly: Upoly, root: RootRecord, root_defining: Upoly) -> bool:
    """Whether ``poly`` vanishes at the root described by ``root``."""
    if isinstance(root.site, Fraction):
        return ueval(poly, root.site) == 0
    assert isinstance(root.site, DyadicInterval)
    g = ugcd(poly, root_defining)
    if udeg(g) < 1:
        return False
    return count_real_roots_interval(g, root.site.lo, root.site.hi) == 1


def _ratios_at_root(
    nums: Sequence[Upoly],
    den: Upoly,
    root_defining: Upoly,
    site: DyadicInterval,
) -> list[DyadicInterval]:
    """Certified intervals of width <= TARGET_WIDTH for num_i(w)/den(w) at
    the isolated irrational root w; den is known nonzero at the root."""
    lo, hi = site.lo, site.hi
    while True:
        wiv = DyadicInterval(lo, hi)
        d = eval_poly_interval(list(den), wiv)
        d_iv = DyadicInterval.of(d)
        if not (d_iv.lo <= 0 <= d_iv.hi):
            out = []
            ok = True
            for num in nums:
                n_iv = DyadicInterval.of(eval_poly_interval(list(num), wiv))
                r = n_iv / d_iv
                if r.width > TARGET_WIDTH:
                    ok = False
                    break
                out.append(r)
            if ok:
                return out
        mid = (lo + hi) / 2
        assert ueval(root_defining, mid) != 0
        if count_real_roots_interval(root_defining, lo, mid) == 1:
            hi = mid
        else:
            lo = mid


def _rational_site_matrix(root: RootRecord, kind: str) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    """The boost matrix entries for an exactly known root slope (or the
    slope at infinity)."""
    if root.site == "infinity":
        d0, d1 = Fraction(1), Fraction(0)
    else:
        assert isinstance(root.site, Fraction)
        d0, d1 = root.site, Fraction(1)
    if kind == "timelike":
        return (d1, d0, d0, d1)
    return (d0, d1, d1, d0)


def _apply_exact(cubic: CubicForm, m: tuple[Fraction, Fraction, Fraction, Fraction]) -> CubicForm:
    polys = _substitute(cubic, tuple([v] if v else [] for v in m))  # type: ignore[arg-type]
    vals = [ueval(p, Fraction(0)) if p else Fraction(0) for p in polys]
    return CubicForm(*vals)


def _attempt_form_i(cubic: CubicForm, root: RootRecord, residual: Upoly) -> ReducedCubic | None:
    """Move a timelike root into the x-factor; fails (None) when the
    boosted cubic keeps a root in the spacelike coordinate direction."""
    if isinstance(root.site, Fraction):
        m = _rational_site_matrix(root, "timelike")
        moved = _apply_exact(cubic, m)
        assert moved.a4 == 0
        if moved.a1 == 0:
            return None
        return ReducedCubic("i", moved.a2 / moved.a1, moved.a3 / moved.a1, root)
    assert isinstance(root.site, DyadicInterval)
    A1, A2, A3, A4 = _timelike_boost_polys(cubic)
    if _poly_vanishes_at(A1, root, residual):
        return None
    s_iv, t_iv = _ratios_at_root((A2, A3), A1, residual, root.site)
    return ReducedCubic("i", s_iv, t_iv, root)


def _attempt_form_ii(cubic: CubicForm, root: RootRecord, residual: Upoly) -> ReducedCubic | None:
    """Move a spacelike root into the z-factor; fails (None) when the
    boosted cubic keeps a root in the timelike coordinate direction."""
    if isinstance(root.site, Fraction) or root.site == "infinity":
        m = _rational_site_matrix(root, "spacelike")
        moved = _apply_exact(cubic, m)
        assert moved.a1 == 0
        if moved.a4 == 0:
            return None
        return ReducedCubic("ii", moved.a3 / moved.a4, moved.a2 / moved.a4, root)
    assert isinstance(root.site, DyadicInterval)
    A1, A2, A3, A4 = _spacelike_boost_polys(cubic)
    if _poly_vanishes_at(A4, root, residual):
        return None
    s_iv, t_iv = _ratios_at_root((A3, A2), A4, residual, root.site)
    return ReducedCubic("ii", s_iv, t_iv, root)


def _lightlike_form(cubic: CubicForm, w0: Fraction) -> ReducedCubic:
    """Divide out the lightlike factor for the exactly known slope
    w0 in {1, -1} and normalise the quadratic cofactor, boosting first if
    the cofactor is degenerate in x^2."""
    form: FormName = "iii_minus" if w0 == 1 else "iii_plus"
    work = cubic
    k = 2
    while True:
        quot, rem = udivmod(work.slope_poly(), unormalize([-w0, Fraction(1)]))
        assert not rem
        c0 = quot[0] if len(quot) > 0 else Fraction(0)
        c1 = quot[1] if len(quot) > 1 else Fraction(0)
        c2 = quot[2] if len(quot) > 2 else Fraction(0)
        if c2 != 0:
            root = RootRecord(w0, 1, "lightlike")
            return ReducedCubic(form, c1 / c2, c0 / c2, root)
        # boost along the hyperbola to make the cofactor generic; the two
        # lightlike coordinate directions are preserved individually
        u = Fraction(1, k)
        k += 1
        m = (1 + u * u, -2 * u, -2 * u, 1 + u * u)
        work = _apply_exact(cubic, m)


def reduce_cubic(cubic: CubicForm) -> ReducedCubic:
    """Normal form of a nonzero binary cubic under the metric-preserving
    changes of the (x, z) plane (plus the variable swap for the x^2 z
    orbit), with exact or certified-interval moduli."""
    if cubic.is_zero():
        raise ZeroCubic("the zero cubic has no normal form")
    roots = cubic_roots(cubic)
    q = cubic.slope_poly()
    residual = q
    for value, mult in urational_roots(q):
        for _ in range(mult):
            residual, rem = udivmod(residual, unormalize([-value, Fraction(1)]))
            assert not rem

    def simple(causal: CausalName) -> list[RootRecord]:
        return [r for r in roots if r.causal == causal and r.multiplicity == 1]

    def multiple(causal: CausalName) -> list[RootRecord]:
        return [r for r in roots if r.causal == causal and r.multiplicity > 1]

    # 1. a simple timelike root moves into the x-factor
    for root in simple("timelike"):
        res = _attempt_form_i(cubic, root, residual)
        if res is not None:
            return res

    # 2. a repeated timelike root (necessarily rational)
    for root in multiple("timelike"):
        assert isinstance(root.site, Fraction)
        m = _rational_site_matrix(root, "timelike")
        moved = _apply_exact(cubic, m)
        if root.multiplicity == 3:
            return ReducedCubic("i", Fraction(0), Fraction(0), root)
        if moved.a1 != 0:
            return ReducedCubic("i", moved.a2 / moved.a1, Fraction(0), root)
        return ReducedCubic("iv", None, None, root)

    # 3. a lightlike root moves into the degenerate factor
    if ueval(q, Fraction(-1)) == 0:
        return _lightlike_form(cubic, Fraction(-1))
    if ueval(q, Fraction(1)) == 0:
        return _lightlike_form(cubic, Fraction(1))

    # 4. a simple spacelike root moves into the z-factor
    for root in simple("spacelike"):
        res = _attempt_form_ii(cubic, root, residual)
        if res is not None:
            return res

    # 5. a repeated spacelike root
    for root in multiple("spacelike"):
        if root.multiplicity == 3:
            return ReducedCubic("ii", Fraction(0), Fraction(0), root)
        # double spacelike root beside a simple timelike one that could not
        # be separated from it: the x^2 z orbit up to the variable swap
        return ReducedCubic("iv", None, None, root)

    raise BranchInvalid("no real root of any causal type; the cubic has no normal form here")
