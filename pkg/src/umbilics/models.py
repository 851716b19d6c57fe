"""A library of concrete model patches with asserted invariants.

Every entry is an explicit rational-coefficient Monge patch (or, for the
cross-cap, a bare curvature-line equation germ) realising one of the
studied umbilic types, bundled with the values its analysis is expected to
produce: umbilic multiplicity, lightlike-discriminant Milnor number,
singularity class of the lightlike locus, and so on.  The expectations are
frozen here so the test-suite can replay them against the computing
pipeline.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import UnknownModel
from .jets import DEFAULT_ORDER, JetPoly
from .rationals import Q
from .strata import family_patch
from .surfaces import BdeGerm, MongePatch, monge_patch


@dataclass(frozen=True)
class Expectation:
    """Frozen values the analysis of a model is expected to reproduce.

    ``multiplicity`` is the exact umbilic multiplicity of the patch;
    ``multiplicity_candidates``, when present, lists the values the
    classified lightlike-pencil type alone admits (for the minus D-forms of
    even index the type does not determine the multiplicity)."""

    multiplicity: int | None = None
    multiplicity_candidates: tuple[int, ...] | None = None
    causal: str | None = None
    ld_milnor: int | None = None
    lpl_class: str | None = None
    config_kind: str | None = None


@dataclass(frozen=True)
class ModelEntry:
    """One concrete model: a patch (or a bare BDE germ) plus expectations."""

    name: str
    label: str
    patch: MongePatch | None
    expect: Expectation
    germ: BdeGerm | None = None


# ---------------------------------------------------------------------------
# builders
# ---------------------------------------------------------------------------

def quintic_family(
    kappa: object,
    a: object,
    b: object,
    c: object,
    *,
    d40: object = 0,
    d31: object = 0,
    d22: object = 0,
    d13: object = 0,
    d04: object = 0,
    d50: object = 0,
    d41: object = 0,
    d32: object = 0,
    d23: object = 0,
    d14: object = 0,
    d05: object = 0,
    name: str | None = None,
) -> MongePatch:
    """The Euclidean graph z = (κ/2)(x²+y²) + cubic + quartic + quintic,
    where the coefficient of xⁱyʲ is d_ij/(i!·j!) and the cubic slots are
    a = d30, b = d12, c = d03 (the x²y slot is always absent)."""
    named = {
        (3, 0): a, (1, 2): b, (0, 3): c,
        (4, 0): d40, (3, 1): d31, (2, 2): d22, (1, 3): d13, (0, 4): d04,
        (5, 0): d50, (4, 1): d41, (3, 2): d32, (2, 3): d23, (1, 4): d14,
        (0, 5): d05,
    }

    def fact(n: int) -> int:
        out = 1
        for i in range(2, n + 1):
            out *= i
        return out

    coeffs: dict[tuple[int, int], Fraction] = {}
    kq = Q(kappa)
    if kq != 0:
        coeffs[(2, 0)] = kq / 2
        coeffs[(0, 2)] = kq / 2
    for (i, j), value in named.items():
        v = Q(value)
        if v != 0:
            coeffs[(i, j)] = v / (fact(i) * fact(j))
    return monge_patch("euclidean", "z", coeffs, name=name)


def spacelike_ladder(k: int) -> MongePatch:
    """Spacelike planar-point patch z = x³ − x yᵏ⁺¹ with multiplicity k."""
    if k < 1:
        raise UnknownModel("spacelike_Ak needs k >= 1")
    return monge_patch(
        "minkowski", "z", {(3, 0): 1, (1, k + 1): -1}, name=f"spacelike_A{k}"
    )


def timelike_ladder(k: int) -> MongePatch:
    """Timelike patch y = x³ + x zᵏ⁺¹ with multiplicity k."""
    if k < 1:
        raise UnknownModel("timelike_Ak needs k >= 1")
    return monge_patch(
        "minkowski", "y", {(3, 0): 1, (1, k + 1): 1}, name=f"timelike_A{k}"
    )


def lightlike_ladder(k: int) -> MongePatch:
    """Lightlike patch z = (3/5)x + (4/5)y + x³/3 + yᵏ⁺²/(k+2): the
    lightlike discriminant is an A_k singularity and the multiplicity is k."""
    if k < 1:
        raise UnknownModel("lightlike_Ak needs k >= 1")
    coeffs = {
        (1, 0): Fraction(3, 5),
        (0, 1): Fraction(4, 5),
        (3, 0): Fraction(1, 3),
        (0, k + 2): Fraction(1, k + 2),
    }
    return monge_patch("minkowski", "z", coeffs, name=f"lightlike_A{k}")


def lightlike_adapted(
    a22: object, a30: object, a31: object, a32: object, a33: object,
    sign: str = "+", name: str | None = None,
) -> MongePatch:
    """Lightlike patch in an adapted frame:
    z = ±x + a22·y² + a30·x³ + a31·x²y + a32·xy² + a33·y³."""
    if sign not in ("+", "-"):
        raise UnknownModel("lightlike_adapted sign must be '+' or '-'")
    lin = Q(1) if sign == "+" else Q(-1)
    coeffs = {
        (1, 0): lin, (0, 2): Q(a22),
        (3, 0): Q(a30), (2, 1): Q(a31), (1, 2): Q(a32), (0, 3): Q(a33),
    }
    return monge_patch(
        "minkowski", "z", {k: v for k, v in coeffs.items() if v != 0}, name=name
    )


def _lightlike_pencil_patch(k: int, sign: str) -> MongePatch:
    """Timelike patch y = (x² − z²) + (x−z)(x+z)² ± (x−z)ᵏ whose
    lightlike-pencil locus is a D_k singularity.

    For even k the two signs land in opposite normal forms: the patch
    written with ``+`` realises D_k⁻ and the one with ``−`` realises
    D_k⁺ (for odd k the two normal forms are equivalent)."""
    if k < 4:
        raise UnknownModel("Dk_pm needs k >= 4")
    if sign not in ("+", "-"):
        raise UnknownModel("Dk_pm sign must be '+' or '-'")
    s = Q(1) if sign == "+" else Q(-1)
    coeffs: dict[tuple[int, int], Fraction] = {(2, 0): Q(1), (0, 2): Q(-1)}
    # (x−z)(x+z)² = x³ + x²z − xz² − z³
    for key, v in {(3, 0): 1, (2, 1): 1, (1, 2): -1, (0, 3): -1}.items():
        coeffs[key] = coeffs.get(key, Q(0)) + v
    # ± (x−z)^k
    for i in range(k + 1):
        key = (k - i, i)
        coeffs[key] = coeffs.get(key, Q(0)) + s * comb(k, i) * ((-1) ** i)
    coeffs = {key: v for key, v in coeffs.items() if v != 0}
    return monge_patch("minkowski", "y", coeffs, order=max(DEFAULT_ORDER, k),
                       name=f"D{k}{sign}")


def _e7_patch() -> MongePatch:
    """Timelike patch y = (x² − z²) + (x−z)³ + (x+z)⁵ with an E₇
    lightlike-pencil locus.

    In the rotated coordinates u = x+z, v = x−z the graph reads
    uv + v³ + u⁵ and the pencil locus is equivalent to v(v² + u³)."""
    coeffs: dict[tuple[int, int], Fraction] = {(2, 0): Q(1), (0, 2): Q(-1)}
    # (x−z)³ = x³ − 3x²z + 3xz² − z³
    for key, v in {(3, 0): 1, (2, 1): -3, (1, 2): 3, (0, 3): -1}.items():
        coeffs[key] = coeffs.get(key, Q(0)) + v
    # (x+z)⁵
    for i in range(6):
        key = (5 - i, i)
        coeffs[key] = coeffs.get(key, Q(0)) + comb(5, i)
    coeffs = {key: v for key, v in coeffs.items() if v != 0}
    return monge_patch("minkowski", "y", coeffs, name="E7")


def crosscap_germ(order: int = DEFAULT_ORDER) -> BdeGerm:
    """The curvature-line equation germ at a cross-cap point,
    (a, b, c) = (0, −x/2, y)."""
    zero = JetPoly({}, order)
    b = JetPoly({(1, 0): Fraction(-1, 2)}, order)
    c = JetPoly({(0, 1): Fraction(1)}, order)
    return BdeGerm(zero, b, c)


# ---------------------------------------------------------------------------
# the catalog
# ---------------------------------------------------------------------------

MODEL_NAMES = (
    "D1_2", "D1_23", "D2_1", "D2_2p", "D2_3", "D2_h", "crosscap",
    "spacelike_Ak", "timelike_Ak", "lightlike_Ak", "Dk_pm", "E7",
)


def model_library(name: str, k: int = 2, sign: str = "+", branch: int = 1) -> ModelEntry:
    """A named model patch (or germ) with its frozen expectations.

    ``k`` parametrises the ladder families and the D-series index, ``sign``
    the D-series sign, ``branch`` the two defining alternatives of D2_h.
    """
    if name == "D1_2":
        return ModelEntry(
            name, "D1_2",
            quintic_family(1, 2, 1, 1, name="D1_2"),
            Expectation(multiplicity=1, causal="spacelike"),
        )
    if name == "D1_23":
        return ModelEntry(
            name, "D1_23",
            quintic_family(1, 1, 1, 1, name="D1_23"),
            Expectation(multiplicity=2, causal="spacelike"),
        )
    if name == "D2_1":
        return ModelEntry(
            name, "D2_1",
            quintic_family(1, 2, 1, 0, name="D2_1"),
            Expectation(multiplicity=1, causal="spacelike"),
        )
    if name == "D2_2p":
        return ModelEntry(
            name, "D2_2p",
            quintic_family(1, 1, 1, 0, d40=2, d50=13, name="D2_2p"),
            Expectation(multiplicity=3, causal="spacelike"),
        )
    if name == "D2_3":
        return ModelEntry(
            name, "D2_3",
            quintic_family(1, 1, 1, 0, d40=2, name="D2_3"),
            Expectation(multiplicity=3, causal="spacelike"),
        )
    if name == "D2_h":
        if branch == 1:
            patch = quintic_family(1, 0, 0, 1, d31=1, name="D2_h_1")
            label = "D2_h_1"
        elif branch == 2:
            patch = quintic_family(1, 1, 0, 0, d13=1, name="D2_h_2")
            label = "D2_h_2"
        else:
            raise UnknownModel("D2_h has branches 1 and 2")
        return ModelEntry(name, label, patch,
                          Expectation(multiplicity=2, causal="spacelike"))
    if name == "crosscap":
        return ModelEntry(
            name, "crosscap", None,
            Expectation(multiplicity=1),
            germ=crosscap_germ(),
        )
    if name == "spacelike_Ak":
        return ModelEntry(
            name, f"spacelike_A{k}", spacelike_ladder(k),
            Expectation(multiplicity=k, causal="spacelike"),
        )
    if name == "timelike_Ak":
        return ModelEntry(
            name, f"timelike_A{k}", timelike_ladder(k),
            Expectation(
                multiplicity=k,
                causal="timelike",
                lpl_class=f"A{2 * k - 1}-" if k >= 2 else None,
            ),
        )
    if name == "lightlike_Ak":
        return ModelEntry(
            name, f"lightlike_A{k}", lightlike_ladder(k),
            Expectation(multiplicity=k, causal="lightlike", ld_milnor=k),
        )
    if name == "Dk_pm":
        if sign not in ("+", "-"):
            raise UnknownModel("Dk_pm sign must be '+' or '-'")
        mult: int | None = 2
        candidates: tuple[int, ...] | None = None
        if k % 2 == 1:
            cls = f"D{k}"
        else:
            # defining signs land in the opposite normal forms (see
            # _lightlike_pencil_patch)
            cls = f"D{k}-" if sign == "+" else f"D{k}+"
            if cls.endswith("-") and k // 2 != 2:
                # the minus form alone only pins the multiplicity down to
                # two values; this patch realises the smaller one
                candidates = (2, k // 2)
        return ModelEntry(
            name, f"D{k}{sign}", _lightlike_pencil_patch(k, sign),
            Expectation(
                multiplicity=mult,
                multiplicity_candidates=candidates,
                causal="timelike",
                lpl_class=cls,
            ),
        )
    if name == "E7":
        return ModelEntry(
            name, "E7", _e7_patch(),
            Expectation(multiplicity=3, causal="timelike", lpl_class="E7"),
        )
    raise UnknownModel(f"unknown model {name!r}; choose from {MODEL_NAMES}")


def _family_entry(plane: str, s: object, t: object,
                  expect: Expectation) -> ModelEntry:
    patch = family_patch(plane, s, t)
    return ModelEntry(plane, patch.name or plane, patch, expect)


def model_catalog() -> tuple[ModelEntry, ...]:
    """Every bundled model instance: the named library across its parameter
    ranges plus a spread of family samples across the parameter planes."""
    entries: list[ModelEntry] = []
    for k in (1, 2, 3, 4):
        entries.append(model_library("spacelike_Ak", k=k))
        entries.append(model_library("timelike_Ak", k=k))
    for k in (1, 2, 3):
        entries.append(model_library("lightlike_Ak", k=k))
    for name in ("D1_2", "D1_23", "D2_1", "D2_2p", "D2_3"):
        entries.append(model_library(name))
    entries.append(model_library("D2_h", branch=1))
    entries.append(model_library("D2_h", branch=2))
    entries.append(model_library("crosscap"))
    entries.append(model_library("Dk_pm", k=4, sign="+"))
    entries.append(model_library("Dk_pm", k=4, sign="-"))
    entries.append(model_library("Dk_pm", k=5, sign="+"))
    entries.append(model_library("Dk_pm", k=6, sign="+"))
    entries.append(model_library("Dk_pm", k=6, sign="-"))
    entries.append(model_library("E7"))
    # spacelike one-parameter family samples (star / monstar / lemon zones)
    entries.append(_family_entry("beta", 0, 0,
                                 Expectation(multiplicity=1, causal="spacelike",
                                             config_kind="star")))
    entries.append(_family_entry("beta", 0, 4,
                                 Expectation(multiplicity=1, causal="spacelike",
                                             config_kind="lemon")))
    entries.append(_family_entry("beta", 0, Fraction(7, 2),
                                 Expectation(multiplicity=1, causal="spacelike")))
    entries.append(_family_entry("beta", 0, 2,
                                 Expectation(multiplicity=1, causal="spacelike")))
    entries.append(_family_entry("beta", 5, 5,
                                 Expectation(multiplicity=1, causal="spacelike")))
    entries.append(_family_entry("beta", -4, 0,
                                 Expectation(multiplicity=1, causal="spacelike")))
    # timelike family samples
    entries.append(_family_entry("timelike_i", 0, Fraction(-3, 2),
                                 Expectation(multiplicity=1, causal="timelike")))
    entries.append(_family_entry("timelike_i", 2, 2,
                                 Expectation(multiplicity=1, causal="timelike")))
    entries.append(_family_entry("timelike_i", -3, 1,
                                 Expectation(multiplicity=1, causal="timelike")))
    entries.append(_family_entry("timelike_i", 0, 1,
                                 Expectation(multiplicity=1, causal="timelike")))
    entries.append(_family_entry("timelike_iii_plus", 1, 2,
                                 Expectation(multiplicity=1, causal="timelike",
                                             config_kind="degenerate")))
    entries.append(_family_entry("timelike_iii_minus", -2, 3,
                                 Expectation(multiplicity=1, causal="timelike",
                                             config_kind="degenerate")))
    # Euclidean classics
    entries.append(ModelEntry(
        "euclidean_star", "euclidean_star",
        quintic_family(1, 6, -6, 0, name="euclidean_star"),
        Expectation(multiplicity=1, causal="spacelike", config_kind="star"),
    ))
    entries.append(ModelEntry(
        "euclidean_lemon", "euclidean_lemon",
        quintic_family(1, 6, 2, 0, name="euclidean_lemon"),
        Expectation(multiplicity=1, causal="spacelike"),
    ))
    # adapted-frame lightlike patches (both lightlike tangent branches)
    entries.append(ModelEntry(
        "lightlike_adapted", "lightlike_adapted_plus",
        lightlike_adapted(1, 1, 0, 0, 1, "+", name="lightlike_adapted_plus"),
        Expectation(multiplicity=1, causal="lightlike"),
    ))
    entries.append(ModelEntry(
        "lightlike_adapted", "lightlike_adapted_minus",
        lightlike_adapted(1, 1, 1, 0, -1, "-", name="lightlike_adapted_minus"),
        Expectation(causal="lightlike"),
    ))
    return tuple(entries)
