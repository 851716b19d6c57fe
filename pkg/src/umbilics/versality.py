"""Versality of the distance-squared family and transversality of the
coefficient-jet curve to the umbilic stratum.

Distance-squared family
-----------------------
For a patch through the origin the squared-distance function to an ambient
point v is d2_v(x1, x2) = sum_i e_i (X_i(x1, x2) - v_i)^2 with metric signs
e = (1, 1, 1) or (1, 1, -1).  At an umbilic with nonzero curvature there is
a unique centre v0 = c * n0 on the normal through the origin killing the
whole quadratic part; the singularity of d2_{v0} there has corank 2, and
it is of type D4 exactly when the cubic part is a nondegenerate binary
cubic.

``d4_and_versality`` reports (has_D4, versal) where ``versal`` is the
criterion for the three-parameter family v -> d2_v, together with added
constants, to be a versal unfolding of a D4 point: the 3-jets of the
orbit-tangent directions and the family directions must fill the whole
10-dimensional space of 3-jets.  When the centre does not exist (flat
point) or the cubic is degenerate, (False, False) is returned.

Coefficient-jet transversality
------------------------------
``monge_taylor_transversality`` checks that the curve of 2-jet data of the
graph function along the two coordinate directions of the surface crosses
the umbilic locus transversally.  The umbilic locus is cut out, near a
point where some metric coefficient is a unit, by two of the three
curvature-line coefficient functions expressed in the five 2-jet
coordinates (fx, fy, fxx/2, fxy, fyy/2) of the graph function; the test is
that the 2x2 matrix of their differentials against the two motion
directions is invertible.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .errors import NotUmbilic
from .jets import JetPoly, jet_const
from .localalg import _row_rank, binary_cubic_discriminant
from .rationals import Q
from .surfaces import MongePatch, principal_bde

Point3 = tuple[Fraction, Fraction, Fraction]


@dataclass(frozen=True)
class JetSpaceBasis:
    """Monomial basis of the space of k-jets of functions of two variables
    (polynomials of total degree <= k)."""

    order: int

    @property
    def monomials(self) -> list[tuple[int, int]]:
        return [
            (i, d - i)
            for d in range(self.order + 1)
            for i in range(d, -1, -1)
        ]

    @property
    def dimension(self) -> int:
        return (self.order + 1) * (self.order + 2) // 2

    def vector(self, g: JetPoly) -> list[Fraction]:
        return [g.coefficient(i, j) for (i, j) in self.monomials]


def metric_signs(ambient: str) -> tuple[int, int, int]:
    return (1, 1, 1) if ambient == "euclidean" else (1, 1, -1)


def normal_at_origin(patch: MongePatch) -> Point3:
    """The (unnormalised) ambient-adapted cross product of the chart frame
    at the origin."""
    fu0 = patch.f.coefficient(1, 0)
    fv0 = patch.f.coefficient(0, 1)
    if patch.graph_axis == "z":
        if patch.ambient == "euclidean":
            return (-fu0, -fv0, Fraction(1))
        return (-fu0, -fv0, Fraction(-1))
    return (fu0, Fraction(-1), -fv0)


def distance_squared_jet(patch: MongePatch, v: Sequence[object], order: int | None = None) -> JetPoly:
    """The squared-distance function to the ambient point ``v`` as a jet in
    the chart variables."""
    if order is None:
        order = patch.f.order
    p = patch.with_order(order)
    X = p.embedding_jets()
    signs = metric_signs(patch.ambient)
    total = jet_const(0, order)
    for Xi, vi, e in zip(X, v, signs):
        diff = Xi - jet_const(Q(vi), order)  # type: ignore[arg-type]
        total = total + diff * diff * e
    return total


def _focal_center(patch: MongePatch) -> Point3 | None:
    """The centre c * n0 on the normal killing the quadratic part of the
    squared-distance function, or None if no such centre exists."""
    order = max(patch.f.order, 4)
    p = patch.with_order(order)
    X = p.embedding_jets()
    signs = metric_signs(patch.ambient)
    n0 = normal_at_origin(patch)
    # d2_{c n0} = A - 2 c B + c^2 * const with A = sum e X^2, B = sum e n X
    A = jet_const(0, order)
    B = jet_const(0, order)
    for Xi, ni, e in zip(X, n0, signs):
        A = A + Xi * Xi * e
        B = B + Xi * (ni * e)
    c: Fraction | None = None
    for key in ((2, 0), (1, 1), (0, 2)):
        ak, bk = A.coefficient(*key), B.coefficient(*key)
        if bk == 0:
            if ak != 0:
                return None
            continue
        ck = ak / (2 * bk)
        if c is None:
            c = ck
        elif c != ck:
            return None
    if c is None:
        # quadratic part vanishes for every centre: flat point
        return None
    return (c * n0[0], c * n0[1], c * n0[2])


def d4_and_versality(patch: MongePatch) -> tuple[bool, bool]:
    """Whether the squared-distance function from the focal centre has a
    D4 point at the origin, and whether the three-parameter family of
    squared-distance functions (plus constants) is a versal unfolding of
    it.  (False, False) when there is no focal centre or the cubic part is
    degenerate."""
    w = principal_bde(patch)
    if not w.vanishes_at_origin():
        raise NotUmbilic("the origin is not an umbilic point of this patch")
    v0 = _focal_center(patch)
    if v0 is None:
        return False, False
    order = max(patch.f.order, 4)
    g = distance_squared_jet(patch, v0, order)
    g = g - jet_const(g.coefficient(0, 0), order)
    assert all(g.coefficient(*k) == 0 for k in ((1, 0), (0, 1), (2, 0), (1, 1), (0, 2)))
    cubic = (
        g.coefficient(3, 0),
        g.coefficient(2, 1),
        g.coefficient(1, 2),
        g.coefficient(0, 3),
    )
    has_d4 = binary_cubic_discriminant(*cubic) != 0
    if not has_d4:
        return False, False

    basis = JetSpaceBasis(3)
    gu = g.derive("u").with_order(order)
    gv = g.derive("v").with_order(order)
    one = jet_const(1, order)
    xj = JetPoly({(1, 0): 1}, order)
    yj = JetPoly({(0, 1): 1}, order)
    vectors: list[JetPoly] = []
    for m in (one, xj, yj):
        vectors.append((m * gu).jet(3))
        vectors.append((m * gv).jet(3))
    vectors.append(jet_const(1, 3))
    X = patch.with_order(order).embedding_jets()
    for Xi, vi, e in zip(X, v0, metric_signs(patch.ambient)):
        vectors.append(((Xi - jet_const(vi, order)) * (-2 * e)).jet(3))
    rows = [basis.vector(vec) for vec in vectors]
    versal = _row_rank(rows, basis.dimension) == basis.dimension
    return True, versal


# ---------------------------------------------------------------------------
# transversality of the 2-jet curve to the umbilic stratum
# ---------------------------------------------------------------------------

Jet2 = tuple[Fraction, Fraction, Fraction, Fraction, Fraction]
# (p, q, r, s, t) = (fx, fy, fxx/2, fxy, fyy/2) at a point, in chart variables


def _bde_coefficient_functions(
    ambient: str, graph_axis: str
) -> tuple[Callable[[Jet2], Fraction], ...]:
    """The three curvature-line coefficient functions a, b, c of the 2-jet
    coordinates, and the metric coefficients E, F, G, per chart."""

    if graph_axis == "z" and ambient == "euclidean":

        def a(j: Jet2) -> Fraction:
            p, q, r, s, t = j
            return (p * q) * (2 * t) - (1 + q * q) * s

        def b(j: Jet2) -> Fraction:
            p, q, r, s, t = j
            return (1 + p * p) * (2 * t) - (1 + q * q) * (2 * r)

        def c(j: Jet2) -> Fraction:
            p, q, r, s, t = j
            return (1 + p * p) * s - (p * q) * (2 * r)

        def E(j: Jet2) -> Fraction:
            return 1 + j[0] * j[0]

        def F(j: Jet2) -> Fraction:
            return j[0] * j[1]

        def G(j: Jet2) -> Fraction:
            return 1 + j[1] * j[1]

    elif graph_axis == "z":

        def a(j: Jet2) -> Fraction:
            p, q, r, s, t = j
            return -(p * q) * (2 * t) - (1 - q * q) * s

        def b(j: Jet2) -> Fraction:
            p, q, r, s, t = j
            return (1 - p * p) * (2 * t) - (1 - q * q) * (2 * r)

        def c(j: Jet2) -> Fraction:
            p, q, r, s, t = j
            return (1 - p * p) * s + (p * q) * (2 * r)

        def E(j: Jet2) -> Fraction:
            return 1 - j[0] * j[0]

        def F(j: Jet2) -> Fraction:
            return -(j[0] * j[1])

        def G(j: Jet2) -> Fraction:
            return 1 - j[1] * j[1]

    else:

        def a(j: Jet2) -> Fraction:
            p, q, r, s, t = j
            return -(p * q) * (2 * t) + (q * q - 1) * s

        def b(j: Jet2) -> Fraction:
            p, q, r, s, t = j
            return -(1 + p * p) * (2 * t) + (q * q - 1) * (2 * r)

        def c(j: Jet2) -> Fraction:
            p, q, r, s, t = j
            return -(1 + p * p) * s + (p * q) * (2 * r)

        def E(j: Jet2) -> Fraction:
            return 1 + j[0] * j[0]

        def F(j: Jet2) -> Fraction:
            return j[0] * j[1]

        def G(j: Jet2) -> Fraction:
            return j[1] * j[1] - 1

    return a, b, c, E, F, G


def _gradient(fun: Callable[[Jet2], Fraction], at: Jet2) -> tuple[Fraction, ...]:
    """Exact gradient of a function polynomial of degree <= 2 in each
    variable, by unit central differences."""
    out = []
    base = list(at)
    for i in range(5):
        plus = list(base)
        minus = list(base)
        plus[i] += 1
        minus[i] -= 1
        out.append((fun(tuple(plus)) - fun(tuple(minus))) / 2)  # type: ignore[arg-type]
    return tuple(out)


def monge_taylor_transversality(patch: MongePatch) -> bool:
    """Whether the curve of 2-jet data of the graph function along the two
    chart directions meets the umbilic locus transversally at the origin.

    The locus is cut out by the two curvature-line coefficient functions
    picked by the first unit metric coefficient (E -> (b, c), F -> (a, c),
    G -> (a, b)); the test is the invertibility of the matrix of their
    differentials against the two jet-curve velocities."""
    w = principal_bde(patch)
    if not w.vanishes_at_origin():
        raise NotUmbilic("the origin is not an umbilic point of this patch")
    f = patch.f
    base: Jet2 = (
        f.coefficient(1, 0),
        f.coefficient(0, 1),
        f.coefficient(2, 0),
        f.coefficient(1, 1),
        f.coefficient(0, 2),
    )
    a, b, c, E, F, G = _bde_coefficient_functions(patch.ambient, patch.graph_axis)
    if E(base) != 0:
        eqs = (b, c)
    elif F(base) != 0:
        eqs = (a, c)
    elif G(base) != 0:
        eqs = (a, b)
    else:
        eqs = (a, b)
    eta1 = _gradient(eqs[0], base)
    eta2 = _gradient(eqs[1], base)
    # velocities of the 2-jet curve for base moves along the two chart
    # directions, read off the Taylor coefficients of the graph function
    a20, a11, a02 = f.coefficient(2, 0), f.coefficient(1, 1), f.coefficient(0, 2)
    a30, a21, a12, a03 = (
        f.coefficient(3, 0),
        f.coefficient(2, 1),
        f.coefficient(1, 2),
        f.coefficient(0, 3),
    )
    v1 = (2 * a20, a11, 3 * a30, 2 * a21, a12)
    v2 = (a11, 2 * a02, a21, 2 * a12, 3 * a03)
    dot = lambda u, v: sum(ui * vi for ui, vi in zip(u, v))
    det = dot(eta1, v1) * dot(eta2, v2) - dot(eta1, v2) * dot(eta2, v1)
    return det != 0
