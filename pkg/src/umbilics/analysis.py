"""Umbilic point analysis: multiplicities, discriminant germs, and the
local configuration of curvature lines.

Multiplicity conventions
------------------------
* ``umbilic_multiplicity`` is the intersection multiplicity at the origin
  of the two independent components of the curvature-line equation picked
  by :func:`umbilics.surfaces.unit_branch_pair`.
* ``bde_multiplicity`` of an equation germ ``w`` with discriminant
  ``d = b^2 - 4ac`` is

      m(w) = (1/2) * m(d, a d_u^2 - b d_u d_v + c d_v^2),

  an integer when finite (an odd right-hand side raises
  :class:`~umbilics.errors.OddDimension`).  For the curvature-line
  equation of a patch the inequality ``m(w) >= 3 * m_u`` holds.

Both patch-level computations re-run themselves at increasing jet order
until the certified stabilisation degree of the answer fits inside the
working order, so a reported finite value is exact for the polynomial
patch.  An INFINITE answer is trusted only once the working order is large
enough that the computed coefficient products are no longer truncated.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Literal, Sequence

from .errors import (
    DegenerateConfig,
    NotUmbilic,
    OddDimension,
    TruncationInsufficient,
    ZeroOneJet,
)
from .jets import JetPoly
from .localalg import (
    INFINITE,
    MultiplicityResult,
    SingularityClass,
    classify_singularity,
    corank_and_hessian,
    intersection_multiplicity,
)
from .polytools import (
    Upoly,
    count_real_roots_interval,
    isolate_real_roots,
    udeg,
    udivmod,
    uderive,
    ueval,
    ugcd,
    umul,
    unormalize,
    urational_roots,
)
from .rationals import DyadicInterval, Q
from .surfaces import (
    BdeGerm,
    CausalType,
    FundamentalForms,
    MongePatch,
    causal_type_at_origin,
    fundamental_forms,
    principal_bde,
    unit_branch_pair,
)

RootSite = Fraction | DyadicInterval | Literal["infinity"]
RootKind = Literal["saddle", "node"]


@dataclass(frozen=True)
class ConfigRoot:
    """One solution direction of the cubic direction equation at an
    umbilic: its site (an exact slope, an isolating interval, or the
    direction at infinity) and its local type."""

    site: RootSite
    kind: RootKind


@dataclass(frozen=True)
class ConfigLabel:
    """Topological label of the curvature-line configuration."""

    kind: str  # "lemon" | "monstar" | "star" | "timelike" | "degenerate"
    n_saddles: int
    n_nodes: int
    roots: tuple[ConfigRoot, ...]

    def __str__(self) -> str:
        if self.kind == "timelike":
            return f"timelike({self.n_saddles}S,{self.n_nodes}N)"
        return self.kind


@dataclass(frozen=True)
class UmbilicReport:
    """Everything the analyzer knows about an umbilic point of a patch."""

    causal_type: CausalType
    multiplicity: MultiplicityResult
    bde_multiplicity: MultiplicityResult | None
    inequality_holds: bool | None
    discriminant_class: SingularityClass | None
    degeneracy_class: SingularityClass | None
    config: ConfigLabel


def _pair_at_order(patch: MongePatch, order: int) -> tuple[JetPoly, JetPoly, FundamentalForms, BdeGerm]:
    p = patch.with_order(order)
    forms = fundamental_forms(p)
    w = principal_bde(forms)
    g1, g2 = unit_branch_pair(w, forms)
    return g1, g2, forms, w


def _exact_product_order(patch: MongePatch) -> int:
    """An order at which the coefficient products of the curvature-line
    equation are no longer truncated, so an infinite answer is exact."""
    d = max(patch.f.total_degree(), 1)
    return 3 * d


def umbilic_multiplicity(patch: MongePatch, max_order: int | None = None) -> MultiplicityResult:
    """Certified multiplicity of the umbilic at the origin of a patch.

    Raises :class:`NotUmbilic` if the origin is not umbilic, and
    :class:`TruncationInsufficient` if no certificate fits below
    ``max_order``.
    """
    if max_order is None:
        max_order = max(patch.f.order, _exact_product_order(patch)) + 1
    order = patch.f.order
    last_error: TruncationInsufficient | None = None
    while order <= max_order:
        g1, g2, forms, w = _pair_at_order(patch, order)
        if not w.vanishes_at_origin():
            raise NotUmbilic("the origin is not an umbilic point of this patch")
        m = intersection_multiplicity(g1, g2)
        if not m.is_finite:
            if order >= _exact_product_order(patch):
                return m
            last_error = TruncationInsufficient(
                f"equation components share a factor at truncation order {order}"
            )
        elif m.stabilized_at is not None and m.stabilized_at <= order:
            return m
        else:
            last_error = TruncationInsufficient(
                f"multiplicity certificate needs degree {m.stabilized_at}, order is {order}"
            )
        order += 1
    raise last_error or TruncationInsufficient("no certificate below the maximum order")


def bde_multiplicity_germ(w: BdeGerm) -> MultiplicityResult:
    """Multiplicity of an equation germ, treating its coefficient jets as
    exact polynomials."""
    if not w.vanishes_at_origin():
        raise NotUmbilic("the equation coefficients do not vanish at the origin")
    d = w.discriminant()
    du = d.derive("u").with_order(d.order)
    dv = d.derive("v").with_order(d.order)
    expr = w.a * du * du - w.b * du * dv + w.c * dv * dv
    m = intersection_multiplicity(d, expr)
    if not m.is_finite:
        return m
    if int(m) % 2 != 0:
        raise OddDimension(f"directional intersection number {int(m)} is odd")
    return MultiplicityResult(int(m) // 2, m.stabilized_at)


def bde_multiplicity(source: BdeGerm | MongePatch, max_order: int | None = None) -> MultiplicityResult:
    """Multiplicity of the curvature-line equation of a patch (with order
    escalation), or of a bare equation germ (taken as exact)."""
    if isinstance(source, BdeGerm):
        return bde_multiplicity_germ(source)
    patch = source
    if max_order is None:
        max_order = max(patch.f.order, _exact_product_order(patch)) + 3
    order = patch.f.order
    last_error: TruncationInsufficient | None = None
    while order <= max_order:
        _, _, _, w = _pair_at_order(patch, order)
        if not w.vanishes_at_origin():
            raise NotUmbilic("the origin is not an umbilic point of this patch")
        m = bde_multiplicity_germ(w)
        if not m.is_finite:
            if order >= _exact_product_order(patch):
                return m
            last_error = TruncationInsufficient(
                f"degenerate at truncation order {order}"
            )
        elif m.stabilized_at is not None and m.stabilized_at <= order - 1:
            # the discriminant derivative loses one order; stay safe
            return m
        else:
            last_error = TruncationInsufficient(
                f"certificate needs degree {m.stabilized_at}, order is {order}"
            )
        order += 1
    raise last_error or TruncationInsufficient("no certificate below the maximum order")


def phi_alpha(w: BdeGerm) -> tuple[Upoly, Upoly]:
    """The direction cubic ``phi`` and the divergence factor ``alpha`` of an
    equation germ, from the linear parts of its coefficients.

    With a = a_u u + a_v v + ..., b, c likewise, and p the direction slope
    dv/du:

        phi(p)   = a_v p^3 + (a_u + b_v) p^2 + (b_u + c_v) p + c_u
        alpha(p) = a_v p^2 + (b_v / 2 + a_u) p + b_u / 2

    A solution direction p0 (phi(p0) = 0) is a saddle of the lifted field
    when phi'(p0) * alpha(p0) > 0 and a node when it is negative.
    """
    if not w.vanishes_at_origin():
        raise NotUmbilic("the equation coefficients do not vanish at the origin")
    au, av = w.a.coefficient(1, 0), w.a.coefficient(0, 1)
    bu, bv = w.b.coefficient(1, 0), w.b.coefficient(0, 1)
    cu, cv = w.c.coefficient(1, 0), w.c.coefficient(0, 1)
    if not any((au, av, bu, bv, cu, cv)):
        raise ZeroOneJet("all equation coefficients have zero linear part")
    phi = unormalize([cu, bu + cv, au + bv, av])
    alpha = unormalize([Fraction(bu, 2), au + Fraction(bv, 2), av])
    return phi, alpha


def _discriminant_morse_type(w: BdeGerm) -> str:
    """Sign type of the quadratic part of the discriminant: "definite",
    "indefinite", or "degenerate" (including negative definite, which
    admits no real solution directions)."""
    d = w.discriminant()
    a20 = d.coefficient(2, 0)
    a11 = d.coefficient(1, 1)
    a02 = d.coefficient(0, 2)
    det = 4 * a20 * a02 - a11 * a11
    if det < 0:
        return "indefinite"
    if det > 0:
        return "definite" if a20 > 0 else "negative-definite"
    return "degenerate"


def _rational_roots_and_residual(p: Upoly) -> tuple[list[Fraction], Upoly]:
    """All rational roots of ``p`` (with multiplicity) and the cofactor left
    after dividing them out."""
    residual = unormalize(p)
    values: list[Fraction] = []
    for value, mult in urational_roots(p):
        for _ in range(mult):
            residual, rem = udivmod(residual, unormalize([-value, Fraction(1)]))
            assert not rem
            values.append(value)
    return values, residual


def _interval_sign_of(poly: Upoly, root_poly: Upoly, lo: Fraction, hi: Fraction) -> int:
    """Sign of ``poly`` at the unique root of ``root_poly`` in (lo, hi).

    Requires gcd(root_poly, poly) = 1, so the sign is nonzero and interval
    refinement terminates.
    """
    while True:
        if (
            ueval(poly, lo) != 0
            and ueval(poly, hi) != 0
            and count_real_roots_interval(poly, lo, hi) == 0
        ):
            return 1 if ueval(poly, lo) > 0 else -1
        mid = (lo + hi) / 2
        assert ueval(root_poly, mid) != 0, "rational root left in residual factor"
        if count_real_roots_interval(root_poly, lo, mid) == 1:
            hi = mid
        else:
            lo = mid


def classify_config(w: BdeGerm) -> ConfigLabel:
    """Topological configuration of the solution curves of an equation germ
    near the origin, from its linear parts.

    Requires a Morse discriminant and simple solution directions with
    nonvanishing divergence factor; otherwise raises
    :class:`DegenerateConfig`.
    """
    morse = _discriminant_morse_type(w)
    if morse == "degenerate":
        raise DegenerateConfig("the discriminant quadratic part is degenerate")
    if morse == "negative-definite":
        raise DegenerateConfig("the discriminant is negative definite: no real directions")
    phi, alpha = phi_alpha(w)
    if udeg(phi) < 0:
        raise DegenerateConfig("the direction cubic vanishes identically")

    sign_poly = umul(uderive(phi), alpha)
    if udeg(ugcd(phi, sign_poly)) > 0:
        raise DegenerateConfig(
            "repeated solution direction or direction with vanishing divergence factor"
        )

    roots: list[ConfigRoot] = []

    def classify_value(sign: int, site: RootSite) -> None:
        roots.append(ConfigRoot(site, "saddle" if sign > 0 else "node"))

    # finite directions
    rational, residual = _rational_roots_and_residual(phi)
    for value in rational:
        classify_value(1 if ueval(sign_poly, value) > 0 else -1, value)
    if udeg(residual) >= 1:
        for lo, hi in isolate_real_roots(residual):
            assert lo != hi, "rational root left in residual factor"
            classify_value(
                _interval_sign_of(sign_poly, residual, lo, hi), DyadicInterval(lo, hi)
            )

    # the direction at infinity appears when the cubic degenerates
    drop = 3 - udeg(phi)
    if drop >= 2:
        raise DegenerateConfig("the direction at infinity is a repeated solution")
    if drop == 1:
        wm = w.mirrored()
        phi_m, alpha_m = phi_alpha(wm)
        g_m = umul(uderive(phi_m), alpha_m)
        s = ueval(g_m, Fraction(0))
        if s == 0:
            raise DegenerateConfig("vanishing divergence factor at the infinite direction")
        classify_value(1 if s > 0 else -1, "infinity")

    n_s = sum(1 for r in roots if r.kind == "saddle")
    n_n = len(roots) - n_s
    if morse == "indefinite":
        return ConfigLabel("timelike", n_s, n_n, tuple(roots))
    table = {(1, 0): "lemon", (3, 0): "star", (2, 1): "monstar"}
    kind = table.get((n_s, n_n))
    if kind is None:
        raise DegenerateConfig(
            f"root pattern {n_s}S+{n_n}N is not a stable definite-discriminant configuration"
        )
    return ConfigLabel(kind, n_s, n_n, tuple(roots))


def check_inequality(patch: MongePatch) -> tuple[MultiplicityResult, MultiplicityResult, bool]:
    """Return (m_u, m(w), m(w) >= 3 m_u) for the umbilic at the origin."""
    mu = umbilic_multiplicity(patch)
    mw = bde_multiplicity(patch)
    if not mw.is_finite:
        holds = True
    elif not mu.is_finite:
        holds = False
    else:
        holds = int(mw) >= 3 * int(mu)
    return mu, mw, holds


def _classify_germ_safely(g: JetPoly) -> SingularityClass | None:
    try:
        return classify_singularity(g)
    except TruncationInsufficient:
        return None


@dataclass(frozen=True)
class EquivalencePanel:
    """The four genericity predicates at an umbilic whose agreement
    characterizes multiplicity one.

    ``None`` marks a predicate that is undefined for the patch (a
    non-``D4`` distance-squared germ has no versality verdict, a curve
    germ with nonzero linear part has no Morse verdict, and a predicate
    whose computation cannot be certified is left open).
    """

    mu_is_one: bool | None
    morse_curve: bool | None
    d4_versal: bool | None
    transversal: bool | None

    def defined(self) -> dict[str, bool]:
        out: dict[str, bool] = {}
        for key in ("mu_is_one", "morse_curve", "d4_versal", "transversal"):
            val = getattr(self, key)
            if val is not None:
                out[key] = val
        return out

    @property
    def consistent(self) -> bool:
        return len(set(self.defined().values())) <= 1


def equivalence_panel(patch: MongePatch) -> EquivalencePanel:
    """Evaluate the four equivalent genericity predicates at the origin
    umbilic: multiplicity one, Morse singularity of the discriminant (or,
    at a lightlike point, of the metric degeneracy curve), versality of the
    ``D4`` distance-squared deformation, and transversality of the
    Monge-Taylor map to the codimension-one stratum."""
    from .versality import d4_and_versality, monge_taylor_transversality

    forms = fundamental_forms(patch)
    w = principal_bde(forms)
    if not w.vanishes_at_origin():
        raise NotUmbilic("the origin is not an umbilic point of this patch")
    causal = causal_type_at_origin(patch)

    try:
        mu = umbilic_multiplicity(patch)
        mu_is_one: bool | None = mu.is_finite and int(mu) == 1
    except TruncationInsufficient:
        mu_is_one = None

    if causal == "lightlike":
        germ = forms.F * forms.F - forms.E * forms.G
    else:
        germ = w.discriminant()
    if germ.coefficient(0, 0) != 0 or germ.coefficient(1, 0) != 0 or germ.coefficient(0, 1) != 0:
        morse: bool | None = None
    else:
        hess = 4 * germ.coefficient(2, 0) * germ.coefficient(0, 2) - germ.coefficient(1, 1) ** 2
        morse = hess != 0

    try:
        is_d4, versal = d4_and_versality(patch)
        d4_versal: bool | None = versal if is_d4 else None
    except (TruncationInsufficient, OddDimension):
        d4_versal = None

    try:
        transversal: bool | None = monge_taylor_transversality(patch)
    except (TruncationInsufficient, OddDimension):
        transversal = None

    return EquivalencePanel(
        mu_is_one=mu_is_one,
        morse_curve=morse,
        d4_versal=d4_versal,
        transversal=transversal,
    )


def analyze_umbilic(patch: MongePatch, max_order: int | None = None) -> UmbilicReport:
    """Full report on the umbilic at the origin of a patch."""
    forms = fundamental_forms(patch)
    w = principal_bde(forms)
    if not w.vanishes_at_origin():
        raise NotUmbilic("the origin is not an umbilic point of this patch")
    causal = causal_type_at_origin(patch)
    mu = umbilic_multiplicity(patch, max_order=max_order)
    try:
        mw: MultiplicityResult | None = bde_multiplicity(patch, max_order=max_order)
    except (OddDimension, TruncationInsufficient):
        mw = None
    if mw is None:
        holds: bool | None = None
    elif not mw.is_finite:
        holds = True
    elif not mu.is_finite:
        holds = False
    else:
        holds = int(mw) >= 3 * int(mu)

    disc = w.discriminant()
    disc_class = _classify_germ_safely(disc) if disc.coefficient(0, 0) == 0 else None
    ld = forms.F * forms.F - forms.E * forms.G
    ld_class = _classify_germ_safely(ld) if ld.coefficient(0, 0) == 0 else None

    try:
        config = classify_config(w)
    except (DegenerateConfig, ZeroOneJet):
        config = ConfigLabel("degenerate", 0, 0, ())
    return UmbilicReport(
        causal_type=causal,
        multiplicity=mu,
        bde_multiplicity=mw,
        inequality_holds=holds,
        discriminant_class=disc_class,
        degeneracy_class=ld_class,
        config=config,
    )
