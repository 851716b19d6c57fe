"""Parameter-plane stratifications for one-parameter cubic families.

Four families are tracked, one per reduced shape of the cubic part of a
Monge patch at an umbilic:

* ``"beta"`` — spacelike umbilic over ``(x² + y²)/2`` with cubic part
  ``(1+s)x³ − t x²y + (s−3)xy² − t y³`` (graph axis ``z``);
* ``"timelike_i"`` — timelike umbilic over ``(x² − z²)/2`` with cubic
  ``x(x² + s xz + t z²)`` (graph axis ``y``);
* ``"timelike_iii_plus"`` / ``"timelike_iii_minus"`` — timelike umbilic
  with cubic ``(x ± z)(x² + s xz + t z²)``.

Each ``(s, t)`` plane is partitioned by a handful of algebraic curves into
open regions on which the curvature-line configuration is constant.  This
module stores those curves as exact bivariate polynomials, decides curve
membership and region identity for query points (rational, or certified
dyadic intervals for irrational boost parameters), and reports the frozen
configuration label of each recognised region from a packaged catalog.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from importlib import resources

from .analysis import ConfigLabel, classify_config
from .errors import AnalysisError, SpecError
from .polytools import Xpoly, xeval, xnormal
from .rationals import DyadicInterval, Q
from .surfaces import MongePatch, monge_patch, principal_bde

PLANES = ("beta", "timelike_i", "timelike_iii_plus", "timelike_iii_minus")

CURVE_NAMES = (
    "degenerate_discriminant",
    "phi_repeated_root",
    "phi_alpha_common_root",
    "inner_hypocycloid",
)

#: region_id used for points lying on a stratum curve.
BOUNDARY_REGION = 0
#: region_id used when the open region is not in the packaged catalog, or
#: when interval inputs leave the region undetermined.
UNKNOWN_REGION = -1


def _xp(terms: dict[tuple[int, int], int | Fraction]) -> Xpoly:
    return xnormal({k: Q(v) for k, v in terms.items()})


# ---------------------------------------------------------------------------
# curve data
# ---------------------------------------------------------------------------

# Circle s² + t² − 9: degenerate discriminant of the spacelike family; it is
# simultaneously the locus where φ and α acquire a common root, and it is the
# m_u > 1 curve of the beta plane.
_BETA_CIRCLE = _xp({(2, 0): 1, (0, 2): 1, (0, 0): -9})

# Implicit equation of the outer hypocycloid (repeated root of the slope
# cubic φ), obtained once by exact elimination from its parametrisation and
# revalidated by ``scripts/generate_fixtures.py``.
_BETA_OUTER = _xp(
    {
        (4, 0): 1,
        (3, 0): 24,
        (2, 2): 2,
        (2, 0): 162,
        (1, 2): -72,
        (0, 4): 1,
        (0, 2): 162,
        (0, 0): -2187,
    }
)

# Inner hypocycloid: discriminant of the cubic part itself (boundary of the
# three-real-roots region).
_BETA_INNER = _xp(
    {
        (0, 0): -27,
        (2, 0): 18,
        (3, 0): -8,
        (4, 0): 1,
        (0, 2): 18,
        (1, 2): 24,
        (2, 2): 2,
        (0, 4): 1,
    }
)

# Timelike family (i): degenerate discriminant s² − t² − 3t.
_TI_DEGENERATE = _xp({(2, 0): 1, (0, 2): -1, (0, 1): -3})

# Repeated root of φ for family (i):
# 8s⁴ − (61/4)s²t² + 8t⁴ − 39s²t + 36t³ − 9s² + 54t² + 27t.
_TI_PHI_REPEATED = _xp(
    {
        (4, 0): 8,
        (2, 2): Fraction(-61, 4),
        (0, 4): 8,
        (2, 1): -39,
        (0, 3): 36,
        (2, 0): -9,
        (0, 2): 54,
        (0, 1): 27,
    }
)

# Common root of φ and α for family (i): (s+t+1)(s−t−1) = s² − t² − 2t − 1.
_TI_COMMON = _xp({(2, 0): 1, (0, 2): -1, (0, 1): -2, (0, 0): -1})
_TI_LINE_PLUS = _xp({(1, 0): 1, (0, 1): 1, (0, 0): 1})  # s + t + 1
_TI_LINE_MINUS = _xp({(1, 0): 1, (0, 1): -1, (0, 0): -1})  # s − t − 1

# Family (iii±): degenerate discriminant (t−1)(1+t∓s).
_T3P_DEGENERATE = _xp({(0, 2): 1, (1, 1): -1, (1, 0): 1, (0, 0): -1})
_T3M_DEGENERATE = _xp({(0, 2): 1, (1, 1): 1, (1, 0): -1, (0, 0): -1})
_T3_LINE_T1 = _xp({(0, 1): 1, (0, 0): -1})  # t − 1
_T3P_LINE = _xp({(0, 1): 1, (1, 0): -1, (0, 0): 1})  # 1 + t − s
_T3M_LINE = _xp({(0, 1): 1, (1, 0): 1, (0, 0): 1})  # 1 + t + s

# Family (iii±): repeated root of the quadratic cofactor of φ.
_T3_PHI_REPEATED = _xp({(2, 0): 3, (0, 2): -4, (0, 1): -4, (0, 0): -4})

# Families (iii±) always share a root between φ and α, so their common-root
# "curve" is the whole plane (the zero polynomial, vanishing identically).
_ZERO: Xpoly = {}


@dataclass(frozen=True)
class PlaneData:
    """Stratification data of one parameter plane."""

    name: str
    curves: tuple[tuple[str, Xpoly], ...]
    components: tuple[tuple[str, Xpoly], ...]
    mult_one_curve: str


_PLANES: dict[str, PlaneData] = {
    "beta": PlaneData(
        name="beta",
        curves=(
            ("degenerate_discriminant", _BETA_CIRCLE),
            ("phi_repeated_root", _BETA_OUTER),
            ("phi_alpha_common_root", _BETA_CIRCLE),
            ("inner_hypocycloid", _BETA_INNER),
        ),
        components=(
            ("circle", _BETA_CIRCLE),
            ("outer_hypocycloid", _BETA_OUTER),
            ("inner_hypocycloid", _BETA_INNER),
        ),
        mult_one_curve="degenerate_discriminant",
    ),
    "timelike_i": PlaneData(
        name="timelike_i",
        curves=(
            ("degenerate_discriminant", _TI_DEGENERATE),
            ("phi_repeated_root", _TI_PHI_REPEATED),
            ("phi_alpha_common_root", _TI_COMMON),
        ),
        components=(
            ("degenerate_conic", _TI_DEGENERATE),
            ("phi_quartic", _TI_PHI_REPEATED),
            ("line_s+t+1", _TI_LINE_PLUS),
            ("line_s-t-1", _TI_LINE_MINUS),
        ),
        mult_one_curve="degenerate_discriminant",
    ),
    "timelike_iii_plus": PlaneData(
        name="timelike_iii_plus",
        curves=(
            ("degenerate_discriminant", _T3P_DEGENERATE),
            ("phi_repeated_root", _T3_PHI_REPEATED),
            ("phi_alpha_common_root", _ZERO),
        ),
        components=(
            ("line_t-1", _T3_LINE_T1),
            ("line_1+t-s", _T3P_LINE),
            ("cofactor_conic", _T3_PHI_REPEATED),
        ),
        mult_one_curve="degenerate_discriminant",
    ),
    "timelike_iii_minus": PlaneData(
        name="timelike_iii_minus",
        curves=(
            ("degenerate_discriminant", _T3M_DEGENERATE),
            ("phi_repeated_root", _T3_PHI_REPEATED),
            ("phi_alpha_common_root", _ZERO),
        ),
        components=(
            ("line_t-1", _T3_LINE_T1),
            ("line_1+t+s", _T3M_LINE),
            ("cofactor_conic", _T3_PHI_REPEATED),
        ),
        mult_one_curve="degenerate_discriminant",
    ),
}


def plane_data(plane: str) -> PlaneData:
    try:
        return _PLANES[plane]
    except KeyError:
        raise SpecError(f"unknown parameter plane {plane!r}; choose from {PLANES}") from None


def curve_polynomial(plane: str, curve: str) -> Xpoly:
    """The exact defining polynomial of a named stratum curve (may be the
    zero polynomial when the curve fills the whole plane)."""
    for name, poly in plane_data(plane).curves:
        if name == curve:
            return dict(poly)
    known = tuple(name for name, _ in plane_data(plane).curves)
    raise SpecError(f"plane {plane!r} has no curve {curve!r}; choose from {known}")


def curve_value(plane: str, curve: str, s: object, t: object) -> Fraction:
    """Evaluate a named stratum curve's polynomial at rational ``(s, t)``."""
    return xeval(curve_polynomial(plane, curve), Q(s), Q(t))  # type: ignore[arg-type]


# ---------------------------------------------------------------------------
# family patches
# ---------------------------------------------------------------------------

def family_patch(plane: str, s: object, t: object, order: int | None = None) -> MongePatch:
    """The Monge patch whose umbilic at the origin realises parameter
    ``(s, t)`` of the given plane."""
    sq, tq = Q(s), Q(t)
    half = Fraction(1, 2)
    if plane == "beta":
        coeffs: dict[tuple[int, int], Fraction] = {
            (2, 0): half,
            (0, 2): half,
            (3, 0): 1 + sq,
            (2, 1): -tq,
            (1, 2): sq - 3,
            (0, 3): -tq,
        }
        return monge_patch("minkowski", "z", coeffs, order=order,
                           name=f"beta({sq},{tq})")
    data = plane_data(plane)  # validates the plane name
    if plane == "timelike_i":
        cubic = {(3, 0): Q(1), (2, 1): sq, (1, 2): tq}
    elif plane == "timelike_iii_plus":
        cubic = {(3, 0): Q(1), (2, 1): sq + 1, (1, 2): tq + sq, (0, 3): tq}
    else:
        cubic = {(3, 0): Q(1), (2, 1): sq - 1, (1, 2): tq - sq, (0, 3): -tq}
    coeffs = {(2, 0): half, (0, 2): -half}
    coeffs.update({k: v for k, v in cubic.items() if v != 0})
    return monge_patch("minkowski", "y", coeffs, order=order,
                       name=f"{data.name}({sq},{tq})")


# ---------------------------------------------------------------------------
# region catalog
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RegionRecord:
    """One open region of a parameter plane, frozen in the packaged catalog."""

    plane: str
    region_id: int
    signs: tuple[int, ...]
    sample_point: tuple[Fraction, Fraction]
    config: ConfigLabel


@lru_cache(maxsize=None)
def region_catalog(plane: str) -> tuple[RegionRecord, ...]:
    """The packaged region catalog of a plane (empty if not generated yet)."""
    plane_data(plane)
    try:
        path = resources.files("umbilics").joinpath("_catalogs/regions.json")
        raw = json.loads(path.read_text(encoding="utf-8"))
    except (FileNotFoundError, OSError):
        return ()
    records = []
    for rec in raw.get(plane, {}).get("regions", ()):
        cfg = rec["config"]
        records.append(
            RegionRecord(
                plane=plane,
                region_id=int(rec["region_id"]),
                signs=tuple(int(x) for x in rec["signs"]),
                sample_point=(Q(rec["sample_point"][0]), Q(rec["sample_point"][1])),
                config=ConfigLabel(
                    kind=cfg["kind"],
                    n_saddles=int(cfg["n_saddles"]),
                    n_nodes=int(cfg["n_nodes"]),
                    roots=(),
                ),
            )
        )
    return tuple(records)


@lru_cache(maxsize=None)
def _region_lookup(plane: str) -> dict[tuple[int, ...], RegionRecord]:
    return {rec.signs: rec for rec in region_catalog(plane)}


# ---------------------------------------------------------------------------
# stratification
# ---------------------------------------------------------------------------

def _eval_exact(poly: Xpoly, s: Fraction, t: Fraction) -> Fraction:
    return xeval(poly, s, t)


def _eval_interval(poly: Xpoly, s: DyadicInterval, t: DyadicInterval) -> DyadicInterval:
    acc = DyadicInterval.of(0)
    for (i, j), c in poly.items():
        term = DyadicInterval.of(c)
        for _ in range(i):
            term = term * s
        for _ in range(j):
            term = term * t
        acc = acc + term
    return acc


def _sign(q: Fraction) -> int:
    return (q > 0) - (q < 0)


def _classified_config(plane: str, s: Fraction, t: Fraction) -> ConfigLabel:
    patch = family_patch(plane, s, t, order=4)
    try:
        return classify_config(principal_bde(patch))
    except AnalysisError:
        return ConfigLabel(kind="degenerate", n_saddles=0, n_nodes=0, roots=())


@dataclass(frozen=True)
class StratumLabel:
    """Where a parameter point sits in its plane's stratification.

    ``region_id`` is positive for catalogued open regions,
    ``BOUNDARY_REGION`` (0) on a stratum curve, and ``UNKNOWN_REGION`` (-1)
    when the region is outside the catalog or undetermined at the input's
    precision.  ``mult_one`` is ``None`` only for interval inputs that
    straddle the plane's multiplicity-one boundary; ``undetermined`` lists
    the curves (or sign components) that could not be decided at the
    interval's precision.
    """

    plane: str
    region_id: int
    on_curves: tuple[str, ...]
    predicted_config: ConfigLabel
    mult_one: bool | None
    undetermined: tuple[str, ...] = ()


_UNDETERMINED = ConfigLabel(kind="undetermined at precision", n_saddles=0, n_nodes=0, roots=())


def _stratify_exact(data: PlaneData, s: Fraction, t: Fraction) -> StratumLabel:
    on = tuple(name for name, poly in data.curves if _eval_exact(poly, s, t) == 0)
    mult_one = data.mult_one_curve not in on
    signs = tuple(_sign(_eval_exact(poly, s, t)) for _, poly in data.components)
    if 0 in signs:
        return StratumLabel(
            plane=data.name,
            region_id=BOUNDARY_REGION,
            on_curves=on,
            predicted_config=_classified_config(data.name, s, t),
            mult_one=mult_one,
        )
    record = _region_lookup(data.name).get(signs)
    if record is None:
        return StratumLabel(
            plane=data.name,
            region_id=UNKNOWN_REGION,
            on_curves=on,
            predicted_config=_classified_config(data.name, s, t),
            mult_one=mult_one,
        )
    return StratumLabel(
        plane=data.name,
        region_id=record.region_id,
        on_curves=on,
        predicted_config=record.config,
        mult_one=mult_one,
    )


def _stratify_interval(data: PlaneData, s: DyadicInterval, t: DyadicInterval) -> StratumLabel:
    on: list[str] = []
    unknown: list[str] = []
    for name, poly in data.curves:
        sign = _eval_interval(poly, s, t).sign()
        if sign is None:
            unknown.append(name)
        elif sign == 0:
            on.append(name)
    mult_one: bool | None
    if data.mult_one_curve in unknown:
        mult_one = None
    else:
        mult_one = data.mult_one_curve not in on
    if unknown:
        return StratumLabel(
            plane=data.name,
            region_id=UNKNOWN_REGION,
            on_curves=(),
            predicted_config=_UNDETERMINED,
            mult_one=mult_one,
            undetermined=tuple(unknown),
        )
    comp_signs: list[int] = []
    comp_unknown: list[str] = []
    for name, poly in data.components:
        sign = _eval_interval(poly, s, t).sign()
        if sign is None or sign == 0:
            comp_unknown.append(name)
            comp_signs.append(0)
        else:
            comp_signs.append(sign)
    if comp_unknown or 0 in comp_signs:
        return StratumLabel(
            plane=data.name,
            region_id=UNKNOWN_REGION,
            on_curves=tuple(on),
            predicted_config=_UNDETERMINED,
            mult_one=mult_one,
            undetermined=tuple(comp_unknown),
        )
    record = _region_lookup(data.name).get(tuple(comp_signs))
    if record is None:
        return StratumLabel(
            plane=data.name,
            region_id=UNKNOWN_REGION,
            on_curves=tuple(on),
            predicted_config=_UNDETERMINED,
            mult_one=mult_one,
        )
    return StratumLabel(
        plane=data.name,
        region_id=record.region_id,
        on_curves=tuple(on),
        predicted_config=record.config,
        mult_one=mult_one,
    )


def stratify(plane: str, s: object, t: object) -> StratumLabel:
    """Locate ``(s, t)`` in the plane's stratification.

    Inputs may be rationals (ints, Fractions, "p/q" strings) for exact
    answers, or :class:`DyadicInterval` values for certified-interval
    answers; mixed inputs are promoted to intervals.
    """
    data = plane_data(plane)
    if isinstance(s, DyadicInterval) or isinstance(t, DyadicInterval):
        si = s if isinstance(s, DyadicInterval) else DyadicInterval.of(Q(s))
        ti = t if isinstance(t, DyadicInterval) else DyadicInterval.of(Q(t))
        if si.is_point() and ti.is_point():
            return _stratify_exact(data, si.lo, ti.lo)
        return _stratify_interval(data, si, ti)
    return _stratify_exact(data, Q(s), Q(t))


def stratify_beta(s: object, t: object) -> StratumLabel:
    """Stratify the spacelike family's parameter plane."""
    return stratify("beta", s, t)


_TIMELIKE_CASES = {"i": "timelike_i", "iii_plus": "timelike_iii_plus",
                   "iii_minus": "timelike_iii_minus"}


def stratify_timelike(s: object, t: object, case: str) -> StratumLabel:
    """Stratify a timelike family's parameter plane (case i, iii_plus or
    iii_minus)."""
    try:
        plane = _TIMELIKE_CASES[case]
    except KeyError:
        raise SpecError(
            f"unknown timelike case {case!r}; choose from {tuple(_TIMELIKE_CASES)}"
        ) from None
    return stratify(plane, s, t)
