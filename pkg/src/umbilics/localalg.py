"""Local algebra at the origin of the real plane, over exact rationals.

Provides intersection multiplicities of pairs of plane curve germs (value by
the classical recursive algorithm, certificate by monomial-basis dimension
stabilisation), Milnor numbers, corank data, recognition of the simple
singularity classes of function germs, and quasihomogeneous weights.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import NotAtOrigin, TruncationInsufficient
from .jets import JetPoly, jet_y
from .polytools import (
    Upoly,
    Xpoly,
    udeg,
    ugcd,
    unormalize,
    uderive,
    udivmod,
    xdeg,
    xgcd,
    xnormal,
)


# ---------------------------------------------------------------------------
# results
# ---------------------------------------------------------------------------

class _InfiniteType:
    """Singleton for an infinite multiplicity; compares above every int."""

    _instance: "_InfiniteType | None" = None

    def __new__(cls) -> "_InfiniteType":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "Infinite"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, _InfiniteType)

    def __hash__(self) -> int:
        return hash("Infinite")

    def __gt__(self, other: object) -> bool:
        return not isinstance(other, _InfiniteType)

    def __ge__(self, other: object) -> bool:
        return True

    def __lt__(self, other: object) -> bool:
        return False

    def __le__(self, other: object) -> bool:
        return isinstance(other, _InfiniteType)


INFINITE = _InfiniteType()


@dataclass(frozen=True)
class MultiplicityResult:
    """A certified local multiplicity.

    ``value`` is a nonnegative integer or :data:`INFINITE`.  For finite
    values, ``stabilized_at`` is the smallest ``K`` at which the monomial
    quotient dimensions satisfy ``d_K = d_{K+1}``; by the Nakayama argument
    this certifies that every pair of germs sharing the same ``K``-jets has
    the same multiplicity.
    """

    value: int | _InfiniteType
    stabilized_at: int | None

    @property
    def is_finite(self) -> bool:
        return not isinstance(self.value, _InfiniteType)

    def __int__(self) -> int:
        if not self.is_finite:
            raise ValueError("infinite multiplicity")
        return int(self.value)  # type: ignore[arg-type]


@dataclass(frozen=True)
class SingularityClass:
    """A germ class tag: Regular, A(k, sign), D(k, sign), E6/E7/E8,
    NonSimple, or Degenerate (non-isolated critical point)."""

    family: str
    index: int | None = None
    sign: str | None = None

    @staticmethod
    def regular() -> "SingularityClass":
        return SingularityClass("Regular")

    @staticmethod
    def A(k: int, sign: str | None = None) -> "SingularityClass":
        return SingularityClass("A", k, sign)

    @staticmethod
    def D(k: int, sign: str | None = None) -> "SingularityClass":
        return SingularityClass("D", k, sign)

    @staticmethod
    def E(k: int) -> "SingularityClass":
        if k not in (6, 7, 8):
            raise ValueError("E-series index must be 6, 7 or 8")
        return SingularityClass("E", k)

    @staticmethod
    def nonsimple() -> "SingularityClass":
        return SingularityClass("NonSimple")

    @staticmethod
    def degenerate() -> "SingularityClass":
        return SingularityClass("Degenerate")

    def __str__(self) -> str:
        if self.family in ("Regular", "NonSimple", "Degenerate"):
            return self.family
        sign = self.sign or ""
        return f"{self.family}{self.index}{sign}"


# ---------------------------------------------------------------------------
# intersection multiplicity
# ---------------------------------------------------------------------------

def _as_xpoly(f: JetPoly | Xpoly) -> Xpoly:
    if isinstance(f, JetPoly):
        return f.coeff_dict()
    return xnormal(dict(f))


def _orders(*fs: JetPoly | Xpoly) -> list[int]:
    return [f.order for f in fs if isinstance(f, JetPoly)]


IntXpoly = dict[tuple[int, int], int]


def _int_xpoly(f: Xpoly) -> IntXpoly:
    """Primitive integer multiple of ``f`` (multiplicity-preserving)."""
    from math import gcd, lcm

    nonzero = {k: v for k, v in f.items() if v != 0}
    if not nonzero:
        return {}
    denom = 1
    for v in nonzero.values():
        denom = lcm(denom, v.denominator)
    out = {k: int(v * denom) for k, v in nonzero.items()}
    g = 0
    for v in out.values():
        g = gcd(g, v)
    return {k: v // g for k, v in out.items()}


def _int_strip(f: IntXpoly) -> IntXpoly:
    from math import gcd

    g = 0
    for v in f.values():
        g = gcd(g, v)
    if g > 1:
        return {k: v // g for k, v in f.items()}
    return f


def _int_x_restrict(f: IntXpoly) -> list[int]:
    """Restriction to the x-axis as a dense integer coefficient list."""
    if not f:
        return []
    deg = max((i for (i, j) in f if j == 0), default=-1)
    out = [0] * (deg + 1)
    for (i, j), v in f.items():
        if j == 0:
            out[i] = v
    while out and out[-1] == 0:
        out.pop()
    return out


def _fulton(f: IntXpoly, g: IntXpoly) -> int | _InfiniteType:
    """Intersection number of two plane curve germs at the origin, both
    vanishing there, by the axis-restriction reduction.

    Works on primitive integer polynomials; every reduction step strips the
    integer content, which keeps coefficient growth polynomial (the naive
    rational version explodes)."""
    while True:
        if not f or not g:
            return INFINITE
        if f.get((0, 0), 0) != 0 or g.get((0, 0), 0) != 0:
            return 0
        fx, gx = _int_x_restrict(f), _int_x_restrict(g)
        if not fx and not gx:
            return INFINITE
        if not fx:
            # f = y * h; I(f, g) = I(y, g) + I(h, g), I(y, g) = ord_x g(x, 0)
            h = {(i, j - 1): v for (i, j), v in f.items()}
            ordx = next(i for i, c in enumerate(gx) if c != 0)
            rest = _fulton(_int_strip(h), g)
            return INFINITE if isinstance(rest, _InfiniteType) else ordx + rest
        if not gx:
            f, g = g, f
            continue
        r, s = len(fx) - 1, len(gx) - 1
        if r > s:
            f, g = g, f
            continue
        # replace g by lc(fx) * g - lc(gx) * x^{s-r} * f: same ideal pairing,
        # strictly smaller degree of the x-axis restriction
        lf, lg = fx[-1], gx[-1]
        g2 = {k: v * lf for k, v in g.items()}
        shift = s - r
        for (i, j), v in f.items():
            key = (i + shift, j)
            g2[key] = g2.get(key, 0) - lg * v
        g2 = {k: v for k, v in g2.items() if v}
        if not g2:
            return INFINITE
        g = _int_strip(g2)


def monomials_below(k: int) -> list[tuple[int, int]]:
    """All exponent pairs of total degree < k, graded-lex ordered."""
    return [(i, d - i) for d in range(k) for i in range(d, -1, -1)]


def quotient_dimension(gens: Sequence[Xpoly], k: int) -> int:
    """dim over Q of (polynomials of degree < k) modulo the span of all
    monomial multiples of the generators truncated below degree k — i.e.
    the dimension of the local ring modulo (ideal + maximal-ideal^k)."""
    basis = monomials_below(k)
    index = {m: i for i, m in enumerate(basis)}
    rows: list[list[int]] = []
    for gen in gens:
        igen = _int_xpoly({m: Fraction(v) for m, v in gen.items()})
        if not igen:
            continue
        val = min(i + j for (i, j) in igen)
        for (a, b) in monomials_below(max(k - val, 0)):
            row = [0] * len(basis)
            nonzero = False
            for (i, j), v in igen.items():
                ii, jj = i + a, j + b
                if ii + jj < k:
                    row[index[(ii, jj)]] = v
                    nonzero = True
            if nonzero:
                rows.append(row)
    rank = _row_rank(rows, len(basis))
    return len(basis) - rank


def _row_rank(rows: list[list[int]], width: int) -> int:
    """Rank of an integer matrix by fraction-free elimination; rows are
    rescaled to primitive form after each step to bound growth."""
    from math import gcd

    rank = 0
    mat = [row[:] for row in rows]
    r = 0
    for col in range(width):
        if r >= len(mat):
            break
        pivot = None
        for rr in range(r, len(mat)):
            if mat[rr][col] != 0:
                pivot = rr
                break
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        prow = mat[r]
        pv = prow[col]
        for rr in range(r + 1, len(mat)):
            v = mat[rr][col]
            if v:
                row = mat[rr]
                new = [row[c] * pv - v * prow[c] for c in range(width)]
                g = 0
                for c in new:
                    g = gcd(g, c)
                if g > 1:
                    new = [c // g for c in new]
                mat[rr] = new
        rank += 1
        r += 1
    return rank


def intersection_multiplicity(
    f: JetPoly | Xpoly,
    g: JetPoly | Xpoly,
    *,
    require_jet_valid: bool = False,
) -> MultiplicityResult:
    """Intersection multiplicity at the origin of two plane curve germs.

    Inputs are treated as exact polynomials.  The value comes from the
    classical recursive algorithm; the certificate ``stabilized_at`` is the
    smallest ``K`` with ``d_K = d_{K+1}`` in the monomial quotient
    dimensions, which (by Nakayama) proves the maximal ideal power
    ``m^K`` lies inside the ideal, so the value depends only on the
    ``K``-jets of the input.

    With ``require_jet_valid=True`` the call additionally demands that the
    certificate order not exceed the declared jet orders of the inputs,
    raising :class:`TruncationInsufficient` otherwise.
    """
    fd, gd = _as_xpoly(f), _as_xpoly(g)
    if fd.get((0, 0), Fraction(0)) != 0 or gd.get((0, 0), Fraction(0)) != 0:
        raise NotAtOrigin("both germs must vanish at the origin")
    if not fd or not gd:
        return MultiplicityResult(INFINITE, None)
    ifd, igd = _int_xpoly(fd), _int_xpoly(gd)
    # a common component through the origin survives every reduction step
    # of the elimination below, which therefore ends in an infinite leaf;
    # no separate gcd screen is needed (or affordable on large jets)
    value = _fulton(ifd, igd)
    if isinstance(value, _InfiniteType):
        return MultiplicityResult(INFINITE, None)
    prev = quotient_dimension([ifd, igd], 1)
    stabilized = None
    for k in range(2, value + 3):
        cur = quotient_dimension([ifd, igd], k)
        if cur == prev:
            stabilized = k - 1
            break
        prev = cur
    assert stabilized is not None and prev == value, (
        "dimension certificate disagrees with recursive value"
    )
    if require_jet_valid:
        orders = _orders(f, g)
        if orders and stabilized > min(orders):
            raise TruncationInsufficient(
                f"certificate needs {stabilized}-jets but inputs carry only "
                f"order {min(orders)}"
            )
    return MultiplicityResult(value, stabilized)


def milnor_number(f: JetPoly | Xpoly) -> MultiplicityResult:
    """Milnor number at the origin: the intersection multiplicity of the
    two partial derivatives."""
    fd = _as_xpoly(f)
    if fd.get((0, 0), Fraction(0)) != 0:
        raise NotAtOrigin("the germ must vanish at the origin")
    fx: Xpoly = {}
    fy: Xpoly = {}
    for (i, j), v in fd.items():
        if i > 0:
            fx[(i - 1, j)] = fx.get((i - 1, j), Fraction(0)) + v * i
        if j > 0:
            fy[(i, j - 1)] = fy.get((i, j - 1), Fraction(0)) + v * j
    fx, fy = xnormal(fx), xnormal(fy)
    if fd and (fx.get((0, 0), Fraction(0)) != 0 or fy.get((0, 0), Fraction(0)) != 0):
        # regular point: empty critical locus
        return MultiplicityResult(0, 1)
    return intersection_multiplicity(fx, fy)


# ---------------------------------------------------------------------------
# corank and classification
# ---------------------------------------------------------------------------

def corank_and_hessian(f: JetPoly) -> tuple[int, Fraction]:
    """Corank of the quadratic part at the origin and the Hessian
    determinant (of the constant Hessian of the 2-jet)."""
    a20 = f.coefficient(2, 0)
    a11 = f.coefficient(1, 1)
    a02 = f.coefficient(0, 2)
    det = 4 * a20 * a02 - a11 * a11
    if det != 0:
        return 0, det
    if a20 == 0 and a11 == 0 and a02 == 0:
        return 2, det
    return 1, det


def _cubic_coeffs(f: JetPoly) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    return (
        f.coefficient(3, 0),
        f.coefficient(2, 1),
        f.coefficient(1, 2),
        f.coefficient(0, 3),
    )


def binary_cubic_discriminant(a: Fraction, b: Fraction, c: Fraction, d: Fraction) -> Fraction:
    return (
        18 * a * b * c * d
        - 4 * b**3 * d
        + b * b * c * c
        - 4 * a * c**3
        - 27 * a * a * d * d
    )


def _linear_jet(order: int, cx: Fraction, cy: Fraction) -> JetPoly:
    return JetPoly({(1, 0): cx, (0, 1): cy}, order)


def _compose_linear(f: JetPoly, m: tuple[Fraction, Fraction, Fraction, Fraction]) -> JetPoly:
    """Compose with the linear map (x, y) -> (m0 x + m1 y, m2 x + m3 y)."""
    order = f.order
    return f.compose(_linear_jet(order, m[0], m[1]), _linear_jet(order, m[2], m[3]))


def _a_series(f: JetPoly, mu: int) -> SingularityClass:
    """Classify a corank-1 germ with finite Milnor number ``mu``."""
    order = max(f.order, mu + 2)
    g = f.with_order(order)
    a20, a11, a02 = g.coefficient(2, 0), g.coefficient(1, 1), g.coefficient(0, 2)
    if a20 == 0:
        # corank 1 with det = 0 and a20 = 0 forces a11 = 0, a02 != 0: swap
        g = _compose_linear(g, (Fraction(0), Fraction(1), Fraction(1), Fraction(0)))
        a20, a11 = g.coefficient(2, 0), g.coefficient(1, 1)
    lam = a20
    if a11 != 0:
        # x -> x - (a11 / 2 a20) y  kills the cross term
        g = _compose_linear(g, (Fraction(1), -a11 / (2 * lam), Fraction(0), Fraction(1)))
    assert g.coefficient(1, 1) == 0 and g.coefficient(0, 2) == 0
    # solve d g / d x = 0 for x = psi(y) by fixed-point iteration
    gx = g.derive("x").with_order(order)
    y_var = jet_y(order)
    psi = JetPoly({}, order)
    for _ in range(order + 1):
        correction = gx.compose(psi, y_var) - psi * (2 * lam)
        psi = correction * Fraction(-1, 2) / lam
    assert gx.compose(psi, y_var).is_zero() or gx.compose(psi, y_var).valuation() > order - 1
    h = g.compose(psi, y_var)
    residual = [(j, v) for (i, j), v in h.terms() if i == 0]
    assert residual, "residual series vanished although the Milnor number is finite"
    m, c_m = min(residual, key=lambda t: t[0])
    assert m == mu + 1, f"residual degree {m} does not match Milnor number {mu}"
    sign: str | None = None
    if mu % 2 == 1:
        sign = "+" if c_m * lam > 0 else "-"
    return SingularityClass.A(mu, sign)


def _double_factor(a: Fraction, b: Fraction, c: Fraction, d: Fraction) -> tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction] | None, bool]:
    """For a degenerate (zero discriminant) nonzero binary cubic, return
    ``(L, M, is_cube)``: the repeated linear factor L = (p, q) meaning
    p*x + q*y, a cofactor direction M when the cubic is L^2 * M (else
    None), and whether the cubic is a perfect cube."""
    q_poly: Upoly = unormalize([d, c, b, a])  # cubic in w = x/y ... coeffs by degree
    if a != 0:
        qq = q_poly
        g2 = ugcd(qq, uderive(qq))
        if udeg(g2) == 1:
            w0 = -g2[0] / g2[1]
            # cofactor root w1 from division by (w - w0)^2
            quo, rem = udivmod(qq, umul_local([-w0, Fraction(1)], [-w0, Fraction(1)]))
            assert not rem
            # quo = a (w - w1)
            w1 = -quo[0] / quo[1]
            return (Fraction(1), -w0), (Fraction(1), -w1), False
        assert udeg(g2) == 2
        w0 = -g2[1] / (2 * g2[2])
        return (Fraction(1), -w0), None, True
    # a = 0: y divides the cubic; residual quadratic b w^2 + c w + d
    if b != 0:
        # discriminant zero branch guaranteed by the caller
        w0 = -c / (2 * b)
        return (Fraction(1), -w0), (Fraction(0), Fraction(1)), False
    if c != 0:
        # cubic = y^2 (c x + d y): L = y double, M = c x + d y
        return (Fraction(0), Fraction(1)), (c, d), False
    # cubic = d y^3
    return (Fraction(0), Fraction(1)), None, True


def umul_local(p: Upoly, q: Upoly) -> Upoly:
    from .polytools import umul

    return umul(p, q)


def _d_series(f: JetPoly, mu: int, L: tuple[Fraction, Fraction], M: tuple[Fraction, Fraction]) -> SingularityClass:
    """Classify a corank-2 germ whose cubic is L^2 M with M independent of L."""
    order = max(f.order, mu + 2)
    g = f.with_order(order)
    # first change: (u, v) = (L, L') with L' a complementary linear form
    lp, lq = L
    if lq != 0:
        comp = (Fraction(1), Fraction(0))  # x
    else:
        comp = (Fraction(0), Fraction(1))  # y
    # invert the matrix [[lp, lq], [comp0, comp1]]
    det = lp * comp[1] - lq * comp[0]
    inv = (comp[1] / det, -lq / det, -comp[0] / det, lp / det)
    g = _compose_linear(g, inv)
    # cubic is now u^2 (p u + q v); make the second change v -> p u + q v
    p_co = g.coefficient(3, 0)
    q_co = g.coefficient(2, 1)
    assert q_co != 0, "cofactor collapsed onto the repeated factor"
    det2 = q_co
    inv2 = (Fraction(1), Fraction(0), -p_co / det2, Fraction(1) / det2)
    g = _compose_linear(g, inv2)
    assert g.coefficient(3, 0) == 0 and g.coefficient(2, 1) == 1
    assert g.coefficient(1, 2) == 0 and g.coefficient(0, 3) == 0
    # degree-by-degree kills of every monomial u^a v^b with a >= 1, a+b = d
    x_var = JetPoly({(1, 0): 1}, order)
    y_var = JetPoly({(0, 1): 1}, order)
    for d in range(4, order + 1):
        for (i, j), v in list(g.homogeneous_part(d).coeff_dict().items()):
            if i == 0:
                continue
            if i == 1:
                shift = JetPoly({(0, d - 2): -v / 2}, order)
                g = g.compose(x_var + shift, y_var)
            else:
                shift = JetPoly({(i - 2, j): -v}, order)
                g = g.compose(x_var, y_var + shift)
    residual = [(j, v) for (i, j), v in g.terms() if i == 0 and j >= 4]
    assert residual, "no residual tail for a finite-multiplicity corank-2 germ"
    m, c_m = min(residual, key=lambda t: t[0])
    k = m + 1
    assert k == mu, f"reduced index {k} does not match Milnor number {mu}"
    sign: str | None = None
    if k % 2 == 0:
        sign = "+" if c_m > 0 else "-"
    return SingularityClass.D(k, sign)


def classify_singularity(f: JetPoly) -> SingularityClass:
    """Recognise the class of a plane function germ: Regular, A(k, ±),
    D(k, ±), E6/E7/E8, NonSimple, or Degenerate (non-isolated).

    The input is treated as an exact polynomial; the class is certified
    against the declared jet order (the class's determinacy degree must not
    exceed it), otherwise :class:`TruncationInsufficient` is raised.
    """
    if f.coefficient(0, 0) != 0:
        raise NotAtOrigin("classify germs that vanish at the origin")
    if f.coefficient(1, 0) != 0 or f.coefficient(0, 1) != 0:
        return SingularityClass.regular()
    mu_res = milnor_number(f)
    if not mu_res.is_finite:
        return SingularityClass.degenerate()
    mu = int(mu_res)
    corank, det = corank_and_hessian(f)
    if corank == 0:
        assert mu == 1
        _require_order(f, 2)
        return SingularityClass.A(1, "+" if det > 0 else "-")
    if corank == 1:
        _require_order(f, mu + 1)
        return _a_series(f, mu)
    # corank 2
    a, b, c, d = _cubic_coeffs(f)
    if a == 0 and b == 0 and c == 0 and d == 0:
        return SingularityClass.nonsimple()
    disc = binary_cubic_discriminant(a, b, c, d)
    if disc != 0:
        assert mu == 4
        _require_order(f, 3)
        return SingularityClass.D(4, "-" if disc > 0 else "+")
    L, M, is_cube = _double_factor(a, b, c, d)
    if is_cube:
        if mu in (6, 7, 8):
            _require_order(f, {6: 4, 7: 4, 8: 5}[mu])
            return SingularityClass.E(mu)
        return SingularityClass.nonsimple()
    _require_order(f, mu - 1)
    return _d_series(f, mu, L, M)


def _require_order(f: JetPoly, determinacy: int) -> None:
    if f.order < determinacy:
        raise TruncationInsufficient(
            f"class is {determinacy}-determined but the jet carries order {f.order}"
        )


# ---------------------------------------------------------------------------
# quasihomogeneous weights
# ---------------------------------------------------------------------------

def quasihomogeneous_weights(f: JetPoly | Xpoly) -> tuple[Fraction, Fraction] | None:
    """Positive rational weights (r1, r2) with every exponent (i, j) of the
    germ satisfying ``i r1 + j r2 = 1``, or None if no such weights exist."""
    fd = _as_xpoly(f)
    if not fd:
        raise NotAtOrigin("the zero germ has no weights")
    exps = sorted(fd.keys())
    if len(exps) == 1:
        i, j = exps[0]
        if i == 0 and j == 0:
            return None
        if i == 0:
            return (Fraction(1), Fraction(1, j))
        if j == 0:
            return (Fraction(1, i), Fraction(1))
        return (Fraction(1, i + j), Fraction(1, i + j))
    (i1, j1) = exps[0]
    solution: tuple[Fraction, Fraction] | None = None
    for (i2, j2) in exps[1:]:
        det = i1 * j2 - i2 * j1
        if det != 0:
            r1 = Fraction(j2 - j1, det)
            r2 = Fraction(i1 - i2, det)
            solution = (r1, r2)
            break
    if solution is None:
        return None
    r1, r2 = solution
    if r1 <= 0 or r2 <= 0:
        return None
    for (i, j) in exps:
        if i * r1 + j * r2 != 1:
            return None
    return solution
