"""Monge patches in Euclidean and Minkowski 3-space and their curvature data.

Ambient conventions
-------------------
* ``euclidean``: inner product u0 v0 + u1 v1 + u2 v2.
* ``minkowski``: inner product u0 v0 + u1 v1 - u2 v2 (third coordinate
  timelike).

A patch is the graph of a polynomial over one coordinate plane:

* ``graph_axis = "z"``: (x, y) -> (x, y, f(x, y)) — chart variables (x, y);
* ``graph_axis = "y"``: (x, z) -> (x, f(x, z), z) — chart variables (x, z).

The cross product used for the second fundamental form is the one adapted
to the ambient inner product, i.e. the unique bilinear product with
< u x v, w > = det(u, v, w); in the Minkowski case this is the Euclidean
cross product with the third component negated.  No normalisation by the
(generally non-rational) length of the normal is performed: the curvature
line equation is insensitive to that positive factor, and keeping things
polynomial keeps them exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Literal

from .errors import NoNonzeroMetricCoefficient, SpecError
from .jets import DEFAULT_ORDER, JetPoly
from .rationals import Q

Ambient = Literal["euclidean", "minkowski"]
GraphAxis = Literal["z", "y"]

CausalType = Literal["spacelike", "timelike", "lightlike"]


@dataclass(frozen=True)
class MongePatch:
    """A polynomial graph surface through the origin.

    ``f`` is the graph function as an exact polynomial, stored as a jet of
    some working order; raising the order never changes the data, it only
    deepens truncations of derived products.
    """

    ambient: str
    graph_axis: str
    f: JetPoly
    name: str | None = None

    def __post_init__(self) -> None:
        if self.ambient not in ("euclidean", "minkowski"):
            raise SpecError(f"unknown ambient {self.ambient!r}")
        if self.graph_axis not in ("z", "y"):
            raise SpecError(f"unknown graph axis {self.graph_axis!r}")
        if self.f.coefficient(0, 0) != 0:
            raise SpecError("the patch must pass through the origin")
        if self.ambient == "euclidean" and self.graph_axis != "z":
            # the Euclidean ambient is isotropic; only the z-graph is used
            raise SpecError("euclidean patches use the z-graph chart")

    @property
    def order(self) -> int:
        return self.f.order

    def with_order(self, order: int) -> "MongePatch":
        return MongePatch(self.ambient, self.graph_axis, self.f.with_order(order), self.name)

    def chart_variables(self) -> tuple[str, str]:
        return ("x", "y") if self.graph_axis == "z" else ("x", "z")

    def embedding_jets(self) -> tuple[JetPoly, JetPoly, JetPoly]:
        """The three ambient coordinates as jets of the chart variables."""
        order = self.f.order
        u = JetPoly({(1, 0): 1}, order)
        v = JetPoly({(0, 1): 1}, order)
        if self.graph_axis == "z":
            return u, v, self.f
        return u, self.f, v


@dataclass(frozen=True)
class FundamentalForms:
    """First (E, F, G) and unnormalised second (lbar, mbar, nbar)
    fundamental form coefficients as exact jets."""

    E: JetPoly
    F: JetPoly
    G: JetPoly
    lbar: JetPoly
    mbar: JetPoly
    nbar: JetPoly

    def metric_at_origin(self) -> tuple[Fraction, Fraction, Fraction]:
        return (
            self.E.coefficient(0, 0),
            self.F.coefficient(0, 0),
            self.G.coefficient(0, 0),
        )


@dataclass(frozen=True)
class BdeGerm:
    """A binary differential equation a dv^2 + b du dv + c du^2 = 0.

    For a patch this is the curvature-line equation with

        a = F nbar - G mbar,  b = E nbar - G lbar,  c = E mbar - F lbar.
    """

    a: JetPoly
    b: JetPoly
    c: JetPoly

    @property
    def order(self) -> int:
        return min(self.a.order, self.b.order, self.c.order)

    def discriminant(self) -> JetPoly:
        return self.b * self.b - self.a * self.c * 4

    def vanishes_at_origin(self) -> bool:
        return (
            self.a.coefficient(0, 0) == 0
            and self.b.coefficient(0, 0) == 0
            and self.c.coefficient(0, 0) == 0
        )

    def mirrored(self) -> "BdeGerm":
        """The same equation with the roles of the two variables swapped."""
        swap = lambda g: JetPoly({(j, i): v for (i, j), v in g.coeff_dict().items()}, g.order)
        return BdeGerm(swap(self.c), swap(self.b), swap(self.a))


def fundamental_forms(patch: MongePatch) -> FundamentalForms:
    """Exact fundamental form jets of a patch in its chart."""
    f = patch.f
    order = f.order
    fu = f.derive("u").with_order(order)
    fv = f.derive("v").with_order(order)
    fuu = fu.derive("u").with_order(order)
    fuv = fu.derive("v").with_order(order)
    fvv = fv.derive("v").with_order(order)
    one = JetPoly({(0, 0): 1}, order)
    if patch.graph_axis == "z":
        if patch.ambient == "euclidean":
            E = one + fu * fu
            F = fu * fv
            G = one + fv * fv
            l, m, n = fuu, fuv, fvv
        else:
            E = one - fu * fu
            F = -(fu * fv)
            G = one - fv * fv
            l, m, n = fuu, fuv, fvv
    else:
        # y-graph (x, f, z), Minkowski only
        E = one + fu * fu
        F = fu * fv
        G = fv * fv - one
        l, m, n = -fuu, -fuv, -fvv
    return FundamentalForms(E, F, G, l, m, n)


def principal_bde(patch_or_forms: MongePatch | FundamentalForms) -> BdeGerm:
    """The curvature-line equation of a patch as an exact jet triple."""
    forms = (
        patch_or_forms
        if isinstance(patch_or_forms, FundamentalForms)
        else fundamental_forms(patch_or_forms)
    )
    a = forms.F * forms.nbar - forms.G * forms.mbar
    b = forms.E * forms.nbar - forms.G * forms.lbar
    c = forms.E * forms.mbar - forms.F * forms.lbar
    return BdeGerm(a, b, c)


def special_curves(patch: MongePatch) -> tuple[JetPoly, JetPoly, JetPoly]:
    """The three distinguished curve germs of a patch, as exact jets:

    * the locus of metric degeneration, ``F^2 - E G``;
    * the locus where the two curvature directions coincide (and, on the
      Lorentzian side, become lightlike): the discriminant
      ``b^2 - 4 a c`` of the curvature-line equation — in parametrisations
      with lightlike coordinate curves this reduces to lbar * nbar up to a
      unit;
    * the same discriminant jet under its equation-level name.

    The second and third entries are one jet with two labels: which regions
    of its zero set deserve which reading depends on the sign of the first.
    """
    forms = fundamental_forms(patch)
    w = principal_bde(forms)
    ld = forms.F * forms.F - forms.E * forms.G
    disc = w.discriminant()
    return ld, disc, disc


def causal_type_at_origin(patch: MongePatch) -> CausalType:
    """Causal type of the tangent plane at the origin, from the sign of
    (F^2 - E G)(0)."""
    forms = fundamental_forms(patch)
    E0, F0, G0 = forms.metric_at_origin()
    disc = F0 * F0 - E0 * G0
    if disc < 0:
        return "spacelike"
    if disc > 0:
        return "timelike"
    return "lightlike"


def detect_umbilic(patch: MongePatch) -> tuple[bool, CausalType]:
    """Whether the origin is an umbilic point, and its causal type."""
    w = principal_bde(patch)
    return w.vanishes_at_origin(), causal_type_at_origin(patch)


def unit_branch_pair(w: BdeGerm, forms: FundamentalForms) -> tuple[JetPoly, JetPoly]:
    """The two equation components whose common zeros define the umbilic,
    chosen by the first metric coefficient that is a unit at the origin.

    E(0) != 0 gives (b, c); else F(0) != 0 gives (a, c); else G(0) != 0
    gives (a, b).  The dropped component is dependent on the other two
    through G c = F b - E a near such a point.
    """
    E0, F0, G0 = forms.metric_at_origin()
    if E0 != 0:
        return w.b, w.c
    if F0 != 0:
        return w.a, w.c
    if G0 != 0:
        return w.a, w.b
    raise NoNonzeroMetricCoefficient(
        "all metric coefficients vanish at the origin; no chart branch applies"
    )


def monge_patch(
    ambient: str,
    graph_axis: str,
    coefficients: dict[tuple[int, int], object],
    order: int | None = None,
    name: str | None = None,
) -> MongePatch:
    """Convenience constructor taking a coefficient dict with int/str/Fraction
    values."""
    coeffs = {k: Q(v) for k, v in coefficients.items()}  # type: ignore[arg-type]
    deg = max((i + j for (i, j) in coeffs), default=0)
    if order is None:
        order = max(DEFAULT_ORDER, deg)
    if deg > order:
        raise SpecError(f"coefficient beyond the truncation order {order}")
    return MongePatch(ambient, graph_axis, JetPoly(coeffs, order), name)
