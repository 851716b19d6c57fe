"""Perturbation experiments on umbilic points.

The multiplicity of an umbilic is the number of complex solutions of the
curvature-line equation pair concentrated at the point; under a small
generic perturbation of the patch this cluster splits into that many
simple solutions (some real, some in conjugate pairs).  This module
exhibits witnesses:

* :func:`complex_count` counts the cluster exactly — the equation pair is
  turned into two exact polynomials, one variable is eliminated by an
  exact resultant, and the resultant's roots inside a dyadic disk are
  counted (with multiplicity) by an exact Routh table.  The same count is
  repeated for the other projection and both must agree.
* :func:`find_umbilics` locates the real solutions inside the disk:
  exact real-root isolation of both resultant projections, float pairing,
  then a damped two-dimensional Newton polish.
* :func:`split_experiment` sweeps a family of coefficient perturbations,
  checking that the complex count is conserved and reporting the maximum
  number of simple real umbilics observed.

Floating-point is used only to *locate* real points; every count is
exact.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from .errors import BranchInvalid, IllConditioned, NotUmbilic
from .jets import JetPoly
from .polytools import (
    Upoly,
    Xpoly,
    count_roots_in_disk,
    resultant_x,
    resultant_y,
    unormalize,
    xdeg,
    xnormal,
)
from .rationals import DyadicInterval, Q
from .surfaces import MongePatch, fundamental_forms, principal_bde

DEFAULT_RADIUS = Fraction(1, 8)
MAX_HALVINGS = 6
_WIGGLE = Fraction(1, 2**20)


# ---------------------------------------------------------------------------
# report types
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LocatedUmbilic:
    """A real solution of the equation pair inside the search disk."""

    x: float
    y: float
    multiplicity: int
    residual: float
    morse: bool

    def is_simple(self) -> bool:
        return self.multiplicity == 1 and self.morse


@dataclass(frozen=True)
class SplitReport:
    """Outcome of analysing one perturbed patch."""

    perturbation: tuple[tuple[int, int, Fraction], ...]
    real_umbilics: tuple[LocatedUmbilic, ...]
    complex_count: int
    radius: Fraction

    @property
    def simple_real_count(self) -> int:
        return sum(1 for u in self.real_umbilics if u.is_simple())


@dataclass(frozen=True)
class ExperimentResult:
    """Outcome of sweeping a perturbation family."""

    base_multiplicity: int
    reports: tuple[SplitReport, ...]
    max_real_observed: int
    radius: Fraction


# ---------------------------------------------------------------------------
# exact equation pair on a disk
# ---------------------------------------------------------------------------

def perturb_patch(
    patch: MongePatch, deltas: dict[tuple[int, int], object]
) -> MongePatch:
    """The patch with rational deltas added to its graph coefficients."""
    coeffs = patch.f.coeff_dict()
    for key, value in deltas.items():
        coeffs[key] = coeffs.get(key, Fraction(0)) + Q(value)  # type: ignore[arg-type]
    coeffs = {k: v for k, v in coeffs.items() if v != 0}
    deg = max((i + j for (i, j) in coeffs), default=1)
    order = max(patch.f.order, deg)
    return MongePatch(
        patch.ambient, patch.graph_axis, JetPoly(coeffs, order), patch.name
    )


def _interval_eval(p: Xpoly, box: DyadicInterval) -> DyadicInterval:
    """Interval evaluation of an exact polynomial on box x box."""
    total = DyadicInterval.of(0)
    for (i, j), coeff in p.items():
        term = DyadicInterval.of(coeff)
        for _ in range(i + j):
            term = term * box
        total = total + term
    return total


@lru_cache(maxsize=128)
def _bde_data(
    patch: MongePatch,
) -> tuple[tuple[tuple[str, Xpoly, Xpoly, Xpoly], ...], Xpoly]:
    """Branch table ((metric name, metric, component 1, component 2), ...)
    and exact discriminant of the curvature-line equation of a patch, at a
    jet order high enough that every product is an exact polynomial."""
    exact_order = 3 * max(patch.f.total_degree(), 1)
    p = patch.with_order(max(patch.f.order, exact_order))
    forms = fundamental_forms(p)
    w = principal_bde(forms)
    disc = xnormal(w.discriminant().coeff_dict())
    xp = lambda jet: xnormal(jet.coeff_dict())
    branches = (
        ("E", xp(forms.E), xp(w.b), xp(w.c)),
        ("F", xp(forms.F), xp(w.a), xp(w.c)),
        ("G", xp(forms.G), xp(w.a), xp(w.b)),
    )
    return branches, disc


def _equation_pair(
    patch: MongePatch, radius: Fraction
) -> tuple[Xpoly, Xpoly, Xpoly, str]:
    """The two equation components as exact polynomials, plus the exact
    discriminant and the name of the metric coefficient that selected the
    branch.

    The branch is the first metric coefficient (E, then F, then G) that is
    interval-certified nonvanishing on the square of half-width ``radius``;
    raises :class:`BranchInvalid` when none is.
    """
    branches, disc = _bde_data(patch)
    box = DyadicInterval(-radius, radius)
    for name, metric, g1, g2 in branches:
        if _interval_eval(metric, box).sign() in (1, -1):
            return g1, g2, disc, name
    raise BranchInvalid(
        "no metric coefficient is sign-definite on the search disk"
    )


# ---------------------------------------------------------------------------
# exact complex counting
# ---------------------------------------------------------------------------
#
# The root bookkeeping of a resultant is only faithful when both
# polynomials keep full degree in the eliminated variable over every base
# point (no fiber degree drop, no content): then the multiplicity of a
# resultant root equals the sum of the local solution multiplicities in
# its fiber.  A small rational shear of the surviving variable,
# x~ = x - lam*y (resp. y~ = y - mu*x), makes the leading coefficients
# constant, which guarantees exactly that; the shear only tilts the slab
# |x~| < r in which the roots are counted, and the two slab counts are
# required to agree.

_SHEARS = (
    Fraction(0),
    Fraction(1, 16), Fraction(-1, 16),
    Fraction(1, 7), Fraction(-1, 7),
    Fraction(1, 3), Fraction(-1, 3),
    Fraction(1), Fraction(-1),
)


def _top_form(g: Xpoly) -> Xpoly:
    d = xdeg(g)
    return {k: c for k, c in g.items() if k[0] + k[1] == d}


def _shear_sub(g: Xpoly, lam: Fraction, axis: str) -> Xpoly:
    """``g(x + lam*y, y)`` for axis 'x', ``g(x, y + lam*x)`` for 'y'."""
    out: Xpoly = {}
    for (i, j), c in g.items():
        if axis == "x":
            # x^i -> (x + lam y)^i
            for k in range(i + 1):
                key = (k, j + i - k)
                out[key] = out.get(key, Fraction(0)) + c * comb(i, k) * lam ** (i - k)
        else:
            for k in range(j + 1):
                key = (i + j - k, k)
                out[key] = out.get(key, Fraction(0)) + c * comb(j, k) * lam ** (j - k)
    return xnormal(out)


def _regular_shear(g1: Xpoly, g2: Xpoly, axis: str) -> Fraction:
    """A shear after which both polynomials have constant leading
    coefficient in the variable the ``axis`` projection eliminates."""
    t1, t2 = _top_form(g1), _top_form(g2)
    for lam in _SHEARS:
        ok = True
        for top in (t1, t2):
            if axis == "x":
                value = sum(c * lam**i for (i, j), c in top.items())
            else:
                value = sum(c * lam**j for (i, j), c in top.items())
            if value == 0:
                ok = False
                break
        if ok:
            return lam
    raise IllConditioned("no admissible shear direction found")


def _disk_count(poly: Upoly, radius: Fraction) -> int:
    """Roots of ``poly`` in the open disk, retrying with a tiny radius
    wiggle when the exact Routh table degenerates."""
    try:
        return count_roots_in_disk(poly, radius)
    except IllConditioned:
        pass
    lo = count_roots_in_disk(poly, radius * (1 - _WIGGLE))
    hi = count_roots_in_disk(poly, radius * (1 + _WIGGLE))
    if lo != hi:
        raise IllConditioned(
            "a root cluster straddles the disk boundary at this radius"
        )
    return lo


def _sheared_resultant(g1: Xpoly, g2: Xpoly, axis: str) -> tuple[Upoly, Fraction]:
    lam = _regular_shear(g1, g2, axis)
    h1 = _shear_sub(g1, lam, axis) if lam else g1
    h2 = _shear_sub(g2, lam, axis) if lam else g2
    res = resultant_y(h1, h2) if axis == "x" else resultant_x(h1, h2)
    res = unormalize(res)
    if not res:
        raise IllConditioned(
            "the equation components share a curve of common zeros"
        )
    return res, lam


@lru_cache(maxsize=128)
def _resultants_for(
    patch: MongePatch, branch: str
) -> tuple[Upoly, Fraction, Upoly, Fraction]:
    """Both sheared resultant projections of the selected equation pair
    (radius-independent, so cached per patch and branch)."""
    branches, _ = _bde_data(patch)
    for name, _, g1, g2 in branches:
        if name == branch:
            res_x, lam = _sheared_resultant(g1, g2, "x")
            res_y, mu = _sheared_resultant(g1, g2, "y")
            return res_x, lam, res_y, mu
    raise BranchInvalid(f"no branch named {branch!r}")  # pragma: no cover


def complex_count(patch: MongePatch, radius: Fraction | None = None) -> int:
    """Number of complex solutions (with multiplicity) of the equation
    pair concentrated in the (sheared) polydisk of the given half-width.

    With ``radius=None`` starts at 1/8 and halves on
    :class:`IllConditioned`, at most six times.  Both coordinate
    projections are counted and must agree.
    """
    if radius is not None:
        return _complex_count_at(patch, Q(radius))
    r = DEFAULT_RADIUS
    for attempt in range(MAX_HALVINGS + 1):
        try:
            return _complex_count_at(patch, r)
        except IllConditioned:
            if attempt == MAX_HALVINGS:
                raise
            r = r / 2
    raise IllConditioned("unreachable")  # pragma: no cover


def _complex_count_at(patch: MongePatch, radius: Fraction) -> int:
    _, _, _, branch = _equation_pair(patch, radius)
    res_x, _, res_y, _ = _resultants_for(patch, branch)
    cx = _disk_count(res_x, radius)
    cy = _disk_count(res_y, radius)
    if cx != cy:
        raise IllConditioned(
            f"projection counts disagree ({cx} vs {cy}); solutions likely "
            "escape the polydisk"
        )
    return cx


# ---------------------------------------------------------------------------
# real root location
# ---------------------------------------------------------------------------

def _root_candidates(res: Upoly, bound: Fraction) -> tuple[list[float], list[complex]]:
    """Float roots of an exact polynomial: the real candidates overlapping
    (-bound, bound), plus the full root list for cluster counting.

    Near-real conjugate pairs produced by a multiple real root are kept in
    the full list, so the cluster count at a point recovers its
    multiplicity."""
    import numpy as np

    coeffs = [float(c) for c in reversed(res)]
    roots = [complex(r) for r in np.roots(coeffs)] if len(coeffs) > 1 else []
    reals = sorted(
        {round(r.real, 12) for r in roots if abs(r.imag) < 1e-5 and abs(r.real) < float(bound)}
    )
    return [float(v) for v in reals], roots


def _cluster_size(roots: list[complex], at: float) -> int:
    return sum(1 for r in roots if abs(r - at) < 3e-6)


def _float_fn(p: Xpoly):
    terms = sorted(p.items())

    def fn(x: float, y: float) -> float:
        return sum(float(c) * x**i * y**j for (i, j), c in terms)

    return fn


def _xderive(p: Xpoly, axis: int) -> Xpoly:
    out: Xpoly = {}
    for (i, j), c in p.items():
        if axis == 0 and i > 0:
            out[(i - 1, j)] = out.get((i - 1, j), Fraction(0)) + i * c
        elif axis == 1 and j > 0:
            out[(i, j - 1)] = out.get((i, j - 1), Fraction(0)) + j * c
    return xnormal(out)


def _newton_polish(
    g1: Xpoly, g2: Xpoly, x: float, y: float, tol: float
) -> tuple[float, float, float] | None:
    f1, f2 = _float_fn(g1), _float_fn(g2)
    j11 = _float_fn(_xderive(g1, 0))
    j12 = _float_fn(_xderive(g1, 1))
    j21 = _float_fn(_xderive(g2, 0))
    j22 = _float_fn(_xderive(g2, 1))

    def residual(a: float, b: float) -> float:
        return max(abs(f1(a, b)), abs(f2(a, b)))

    r = residual(x, y)
    for _ in range(80):
        if r < tol:
            return x, y, r
        a, b, c, d = j11(x, y), j12(x, y), j21(x, y), j22(x, y)
        det = a * d - b * c
        if det == 0.0:
            return (x, y, r) if r < 1e-8 else None
        v1, v2 = f1(x, y), f2(x, y)
        dx = (d * v1 - b * v2) / det
        dy = (a * v2 - c * v1) / det
        step = 1.0
        while step > 1e-6:
            nx, ny = x - step * dx, y - step * dy
            nr = residual(nx, ny)
            if nr < r:
                x, y, r = nx, ny, nr
                break
            step /= 2
        else:
            return (x, y, r) if r < 1e-8 else None
    return (x, y, r) if r < 1e-8 else None


def find_umbilics(
    patch: MongePatch,
    radius: Fraction | None = None,
    tol: float = 1e-12,
) -> list[LocatedUmbilic]:
    """All real solutions of the selected equation pair inside the open
    polydisk, Newton-polished to the requested residual.

    Each point carries a multiplicity — the smaller of the multiplicities
    of its two resultant projections, which for an isolated cluster is the
    local solution count — and a Morse flag: an exact-coefficient,
    float-evaluated check that the equation pair has invertible Jacobian
    and the discriminant a nondegenerate Hessian at the point.
    """
    r = Q(radius) if radius is not None else DEFAULT_RADIUS
    g1, g2, disc, branch = _equation_pair(patch, r)
    res_x, lam, res_y, mu = _resultants_for(patch, branch)
    xs, all_x = _root_candidates(res_x, r * (1 + abs(lam)) * 2)
    ys, all_y = _root_candidates(res_y, r * (1 + abs(mu)) * 2)
    f1, f2 = _float_fn(g1), _float_fn(g2)
    pair_tol = 1e-5
    flam, fmu = float(lam), float(mu)
    scale = 1.0 - flam * fmu
    found: list[LocatedUmbilic] = []
    for xs0, ys0 in itertools.product(xs, ys):
        # the sheared coordinates are x~ = x - lam*y, y~ = y - mu*x
        x0 = (xs0 + flam * ys0) / scale
        y0 = ys0 + fmu * x0
        if max(abs(f1(x0, y0)), abs(f2(x0, y0))) > pair_tol:
            continue
        polished = _newton_polish(g1, g2, x0, y0, tol)
        if polished is None:
            continue
        x, y, resid = polished
        if abs(x) >= float(r) or abs(y) >= float(r):
            continue
        if any(abs(u.x - x) < 1e-7 and abs(u.y - y) < 1e-7 for u in found):
            continue
        mult = min(_cluster_size(all_x, x - flam * y), _cluster_size(all_y, y - fmu * x))
        found.append(
            LocatedUmbilic(
                float(x), float(y), max(mult, 1), float(resid),
                bool(_morse_at(g1, g2, disc, x, y)),
            )
        )
    found.sort(key=lambda u: (u.x, u.y))
    return found


def _morse_at(g1: Xpoly, g2: Xpoly, disc: Xpoly, x: float, y: float) -> bool:
    """Simple-point test at a located solution: invertible equation-pair
    Jacobian and nondegenerate discriminant Hessian (float-level)."""
    tol = 1e-9
    j11 = _float_fn(_xderive(g1, 0))(x, y)
    j12 = _float_fn(_xderive(g1, 1))(x, y)
    j21 = _float_fn(_xderive(g2, 0))(x, y)
    j22 = _float_fn(_xderive(g2, 1))(x, y)
    if abs(j11 * j22 - j12 * j21) <= tol:
        return False
    du = _xderive(disc, 0)
    dv = _xderive(disc, 1)
    huu = _float_fn(_xderive(du, 0))(x, y)
    huv = _float_fn(_xderive(du, 1))(x, y)
    hvv = _float_fn(_xderive(dv, 1))(x, y)
    return abs(huu * hvv - huv * huv) > tol


# ---------------------------------------------------------------------------
# family sweep
# ---------------------------------------------------------------------------

def default_family(
    directions: tuple[tuple[int, int], ...] = ((1, 1), (2, 0)),
    magnitudes: tuple[object, ...] = (
        Fraction(-1, 1024),
        Fraction(-1, 2048),
        Fraction(0),
        Fraction(1, 2048),
        Fraction(1, 1024),
    ),
) -> list[dict[tuple[int, int], Fraction]]:
    """A grid of coefficient perturbations over the quadratic/cubic
    directions that unfold a degenerate umbilic (by default the mixed
    quadratic term and the pure square, five magnitudes each)."""
    mags = [Q(m) for m in magnitudes]
    family = []
    for combo in itertools.product(mags, repeat=len(directions)):
        family.append(
            {d: eps for d, eps in zip(directions, combo) if eps != 0}
        )
    return family


def split_experiment(
    patch: MongePatch,
    family: list[dict[tuple[int, int], object]] | None = None,
    radius: Fraction | None = None,
    tol: float = 1e-12,
) -> ExperimentResult:
    """Sweep a perturbation family of a patch with a finite-multiplicity
    umbilic at the origin.

    For every member the complex solution count in the disk must equal the
    unperturbed multiplicity (conservation); the result records each
    member's located real umbilics and the maximum number of simple real
    ones observed, which can never exceed the multiplicity.
    """
    from .analysis import umbilic_multiplicity

    base = umbilic_multiplicity(patch)
    if not base.is_finite:
        raise NotUmbilic("the origin umbilic has infinite multiplicity")
    m_u = int(base)
    if radius is None:
        r = DEFAULT_RADIUS
        for attempt in range(MAX_HALVINGS + 1):
            try:
                _complex_count_at(patch, r)
                break
            except IllConditioned:
                if attempt == MAX_HALVINGS:
                    raise
                r = r / 2
    else:
        r = Q(radius)
    members = family if family is not None else default_family()
    reports: list[SplitReport] = []
    for member in members:
        deltas = {k: Q(v) for k, v in member.items()}  # type: ignore[arg-type]
        perturbed = perturb_patch(patch, deltas)
        count = _complex_count_at(perturbed, r)
        if count != m_u:
            raise IllConditioned(
                f"complex count {count} != multiplicity {m_u}: the "
                "perturbation is too large for this radius"
            )
        points = find_umbilics(perturbed, r, tol)
        located = sum(u.multiplicity for u in points)
        if located > count:
            raise IllConditioned(
                "located real multiplicity exceeds the complex count"
            )
        reports.append(
            SplitReport(
                perturbation=tuple(
                    (i, j, deltas[(i, j)]) for (i, j) in sorted(deltas)
                ),
                real_umbilics=tuple(points),
                complex_count=count,
                radius=r,
            )
        )
    max_real = max((rep.simple_real_count for rep in reports), default=0)
    if max_real > m_u:
        raise IllConditioned(
            f"observed {max_real} simple real umbilics, more than the "
            f"multiplicity {m_u}"
        )
    return ExperimentResult(
        base_multiplicity=m_u,
        reports=tuple(reports),
        max_real_observed=max_real,
        radius=r,
    )
