#!/usr/bin/env python3
"""Regenerate the packaged data artifacts from first principles.

This script rebuilds everything the library ships frozen:

* re-derives the stratum curves of all four parameter planes with an
  independent symbolic computation (sympy) and asserts that the exact
  polynomials stored in ``umbilics.strata`` match;
* samples each parameter plane on a rational grid, groups points by the
  sign vector of the plane's component polynomials, classifies several
  spread samples per region (asserting constancy), and writes the region
  catalog to ``src/umbilics/_catalogs/regions.json``;
* constructs 20 exact rational points on every stratum curve (conic
  chords through a rational base point, double-root linear solves for the
  quartics, direct parametrisation for lines) and stores them next to the
  catalog, asserting exact vanishing;
* exports every patch-backed model of the library as a surface spec JSON
  into ``src/umbilics/_models/``;
* renders the four golden phase portraits into ``tests/goldens/``.

Run from anywhere; paths are anchored at the repository root.
"""

from __future__ import annotations

import json
import sys
from fractions import Fraction
from pathlib import Path

import sympy as sp

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "src"))

from umbilics.analysis import classify_config  # noqa: E402
from umbilics.cli import patch_to_spec, serialize_surface_spec  # noqa: E402
from umbilics.errors import AnalysisError  # noqa: E402
from umbilics.models import model_catalog  # noqa: E402
from umbilics.polytools import Xpoly, xeval  # noqa: E402
from umbilics.portrait import emit_svg, integrate_lines  # noqa: E402
from umbilics.rationals import format_rational  # noqa: E402
from umbilics.strata import PLANES, family_patch, plane_data  # noqa: E402
from umbilics.surfaces import principal_bde  # noqa: E402

CATALOG_PATH = ROOT / "src" / "umbilics" / "_catalogs" / "regions.json"
MODELS_DIR = ROOT / "src" / "umbilics" / "_models"
GOLDEN_DIR = ROOT / "tests" / "goldens"

X, Y, S, T, P = sp.symbols("x y s t p")


# ---------------------------------------------------------------------------
# symbolic re-derivation of the stratum curves
# ---------------------------------------------------------------------------

def _jet1(expr: sp.Expr) -> tuple[sp.Expr, sp.Expr]:
    """Coefficients of x and y in the linear part of an expression."""
    at0 = {X: 0, Y: 0}
    assert sp.simplify(expr.subs(at0)) == 0, "coefficient must vanish at the umbilic"
    return sp.diff(expr, X).subs(at0), sp.diff(expr, Y).subs(at0)


def _phi_alpha_symbolic(f: sp.Expr, graph: str) -> tuple[sp.Expr, sp.Expr]:
    """Direction cubic and divergence factor of the curvature-line equation
    of a Minkowski Monge patch, computed symbolically from scratch.

    ``graph='z'``: surface (x, y, f) in signature (+,+,-);
    ``graph='y'``: surface (x, f, y) with the patch variables (x, y) being
    the first and third coordinates.
    """
    fx, fy = sp.diff(f, X), sp.diff(f, Y)
    if graph == "z":
        E, F, G = 1 - fx**2, -fx * fy, 1 - fy**2
        ell, m, n = sp.diff(f, X, 2), sp.diff(sp.diff(f, X), Y), sp.diff(f, Y, 2)
    else:
        E, F, G = 1 + fx**2, fx * fy, fy**2 - 1
        ell, m, n = -sp.diff(f, X, 2), -sp.diff(sp.diff(f, X), Y), -sp.diff(f, Y, 2)
    a = sp.expand(F * n - G * m)
    b = sp.expand(E * n - G * ell)
    c = sp.expand(E * m - F * ell)
    au, av = _jet1(a)
    bu, bv = _jet1(b)
    cu, cv = _jet1(c)
    phi = sp.expand(av * P**3 + (au + bv) * P**2 + (bu + cv) * P + cu)
    alpha = sp.expand(av * P**2 + (au + sp.Rational(1, 2) * bv) * P + sp.Rational(1, 2) * bu)
    return phi, alpha


def _family_graph(plane: str) -> tuple[sp.Expr, str]:
    if plane == "beta":
        cubic = (1 + S) * X**3 - T * X**2 * Y + (S - 3) * X * Y**2 - T * Y**3
        return (X**2 + Y**2) / 2 + cubic, "z"
    if plane == "timelike_i":
        cubic = X * (X**2 + S * X * Y + T * Y**2)
    elif plane == "timelike_iii_plus":
        cubic = (X + Y) * (X**2 + S * X * Y + T * Y**2)
    else:
        cubic = (X - Y) * (X**2 + S * X * Y + T * Y**2)
    return (X**2 - Y**2) / 2 + cubic, "y"


def _xpoly_to_sympy(poly: Xpoly) -> sp.Expr:
    return sp.expand(sum(sp.Rational(c) * S**i * T**j for (i, j), c in poly.items()))


def _proportional(e1: sp.Expr, e2: sp.Expr) -> bool:
    p1 = sp.Poly(sp.expand(e1), S, T)
    p2 = sp.Poly(sp.expand(e2), S, T)
    if p1.is_zero or p2.is_zero:
        return p1.is_zero and p2.is_zero
    m = p1.monoms()[0]
    if m not in p2.monoms():
        return False
    k = sp.Rational(p2.coeff_monomial(m), p1.coeff_monomial(m))
    return sp.expand(k * e1 - e2) == 0


def _factor_bases(expr: sp.Expr) -> list[sp.Expr]:
    _, factors = sp.factor_list(sp.expand(expr), S, T)
    return [base for base, _ in factors if base.free_symbols & {S, T}]


def _assert_factor(expr: sp.Expr, frozen: Xpoly, what: str) -> None:
    bases = _factor_bases(expr)
    # the frozen polynomial may itself be reducible (a union of lines);
    # each of its irreducible factors must appear in the derived expression
    for target in _factor_bases(_xpoly_to_sympy(frozen)):
        if not any(_proportional(base, target) for base in bases):
            raise AssertionError(
                f"{what}: frozen factor {target} not found in derived factorization"
            )


def validate_curves() -> None:
    """Independent derivation of every stratum curve; hard assertion that
    the frozen polynomials agree."""
    for plane in PLANES:
        data = plane_data(plane)
        curves = dict(data.curves)
        f, graph = _family_graph(plane)
        phi, alpha = _phi_alpha_symbolic(f, graph)

        disc_phi = sp.discriminant(sp.Poly(phi, P))
        _assert_factor(disc_phi, curves["phi_repeated_root"], f"{plane}: phi repeated root")

        res = sp.resultant(sp.Poly(phi, P), sp.Poly(alpha, P))
        common = curves["phi_alpha_common_root"]
        if not common:  # identically-common-root planes
            assert sp.expand(res) == 0, f"{plane}: resultant should vanish identically"
        else:
            _assert_factor(res, common, f"{plane}: phi/alpha common root")

        # degeneracy of the quadratic part of the equation discriminant
        fx, fy = sp.diff(f, X), sp.diff(f, Y)
        if graph == "z":
            E, F, G = 1 - fx**2, -fx * fy, 1 - fy**2
            ell, m, n = sp.diff(f, X, 2), sp.diff(sp.diff(f, X), Y), sp.diff(f, Y, 2)
        else:
            E, F, G = 1 + fx**2, fx * fy, fy**2 - 1
            ell, m, n = -sp.diff(f, X, 2), -sp.diff(sp.diff(f, X), Y), -sp.diff(f, Y, 2)
        a = F * n - G * m
        b = E * n - G * ell
        c = E * m - F * ell
        disc = sp.expand(b**2 - 4 * a * c)
        q = sp.Poly(disc.subs({X: X, Y: Y}), X, Y)
        q20 = q.coeff_monomial((2, 0))
        q11 = q.coeff_monomial((1, 1))
        q02 = q.coeff_monomial((0, 2))
        hess = sp.expand(4 * q20 * q02 - q11**2)
        _assert_factor(hess, curves["degenerate_discriminant"], f"{plane}: degenerate discriminant")

        # the beta quartic must match exactly (this is the curve obtained by
        # elimination; the others are revalidated by factor membership)
        if plane == "beta":
            target = _xpoly_to_sympy(curves["phi_repeated_root"])
            bases = [b2 for b2 in _factor_bases(disc_phi) if sp.Poly(b2, S, T).total_degree() == 4]
            assert len(bases) == 1 and _proportional(bases[0], target), (
                "beta: quartic factor of the eliminated repeated-root locus "
                "does not match the frozen polynomial"
            )
        print(f"  {plane}: all stratum curves re-derived and matched")


# ---------------------------------------------------------------------------
# exact points on the stratum curves
# ---------------------------------------------------------------------------

def _conic_chord_points(poly: Xpoly, base: tuple[Fraction, Fraction], count: int,
                        slopes: "range") -> list[tuple[Fraction, Fraction]]:
    """Rational points on a conic via chords of rational slope through a
    rational base point on it."""
    q20 = poly.get((2, 0), Fraction(0))
    q11 = poly.get((1, 1), Fraction(0))
    q02 = poly.get((0, 2), Fraction(0))
    q10 = poly.get((1, 0), Fraction(0))
    q01 = poly.get((0, 1), Fraction(0))
    s0, t0 = base
    assert xeval(poly, s0, t0) == 0, "base point must lie on the conic"
    out: list[tuple[Fraction, Fraction]] = []
    for num in slopes:
        m = Fraction(num, 7)  # denominators spread the points around the conic
        A = q20 + q11 * m + q02 * m * m
        B = (2 * q20 * s0 + q11 * t0 + q10) + (q11 * s0 + 2 * q02 * t0 + q01) * m
        if A == 0:
            continue
        lam = -B / A
        if lam == 0:
            continue
        pt = (s0 + lam, t0 + lam * m)
        if pt in out:
            continue
        assert xeval(poly, pt[0], pt[1]) == 0
        out.append(pt)
        if len(out) == count:
            break
    assert len(out) == count, "could not construct enough conic points"
    return out


def _double_root_points(phi: sp.Expr, frozen: Xpoly, count: int) -> list[tuple[Fraction, Fraction]]:
    """Rational points on a repeated-root locus: for slope p0, the two
    conditions phi = phi' = 0 are linear in (s, t)."""
    dphi = sp.diff(phi, P)
    out: list[tuple[Fraction, Fraction]] = []
    num = 0
    while len(out) < count and num < 400:
        num += 1
        for den in (5, 7):
            p0 = sp.Rational(num, den)
            eq1 = sp.expand(phi.subs(P, p0))
            eq2 = sp.expand(dphi.subs(P, p0))
            sol = sp.linsolve([eq1, eq2], [S, T])
            if not sol:
                continue
            (sv, tv), = sol
            if sv.free_symbols or tv.free_symbols:
                continue  # underdetermined system
            pt = (Fraction(int(sp.fraction(sv)[0]), int(sp.fraction(sv)[1])),
                  Fraction(int(sp.fraction(tv)[0]), int(sp.fraction(tv)[1])))
            if pt in out:
                continue
            assert xeval(frozen, pt[0], pt[1]) == 0, "double-root point misses the frozen curve"
            out.append(pt)
            if len(out) == count:
                break
    assert len(out) == count, "could not construct enough double-root points"
    return out


def _cubic_repeated_factor_points(count: int) -> list[tuple[Fraction, Fraction]]:
    """Points on the inner hypocycloid of the beta plane: parameters where
    the family's cubic part acquires a repeated linear factor."""
    cubic = (1 + S) * X**3 - T * X**2 * Y + (S - 3) * X * Y**2 - T * Y**3
    w = sp.symbols("w")
    cw = cubic.subs({X: 1, Y: w})
    return _double_root_points(cw.subs(w, P), plane_data("beta").curves[3][1], count)


def curve_points() -> dict[str, dict[str, list[list[str]]]]:
    """20 exact rational points on every stratum curve of every plane."""
    result: dict[str, dict[str, list[list[str]]]] = {}
    phis: dict[str, sp.Expr] = {}
    for plane in PLANES:
        f, graph = _family_graph(plane)
        phis[plane], _ = _phi_alpha_symbolic(f, graph)

    def fmt(pts: list[tuple[Fraction, Fraction]]) -> list[list[str]]:
        return [[format_rational(s), format_rational(t)] for s, t in pts]

    beta = dict(plane_data("beta").curves)
    circle = beta["degenerate_discriminant"]
    result["beta"] = {
        "degenerate_discriminant": fmt(_conic_chord_points(circle, (Fraction(3), Fraction(0)), 20, range(1, 200))),
        "phi_alpha_common_root": fmt(_conic_chord_points(circle, (Fraction(3), Fraction(0)), 20, range(200, 420))),
        "phi_repeated_root": fmt(_double_root_points(phis["beta"], beta["phi_repeated_root"], 20)),
        "inner_hypocycloid": fmt(_cubic_repeated_factor_points(20)),
    }

    ti = dict(plane_data("timelike_i").curves)
    lines_pts = [(Fraction(k), Fraction(-k - 1)) for k in range(1, 11)]
    lines_pts += [(Fraction(k), Fraction(k - 1)) for k in range(1, 11)]
    for s, t in lines_pts:
        assert xeval(ti["phi_alpha_common_root"], s, t) == 0
    result["timelike_i"] = {
        "degenerate_discriminant": fmt(_conic_chord_points(
            ti["degenerate_discriminant"], (Fraction(0), Fraction(0)), 20, range(8, 200))),
        "phi_repeated_root": fmt(_double_root_points(phis["timelike_i"], ti["phi_repeated_root"], 20)),
        "phi_alpha_common_root": fmt(lines_pts),
    }

    for plane, sign in (("timelike_iii_plus", 1), ("timelike_iii_minus", -1)):
        data = dict(plane_data(plane).curves)
        deg_pts = [(Fraction(k), Fraction(1)) for k in range(1, 11)]
        deg_pts += [(Fraction(sign * (1 + k)), Fraction(k)) for k in range(2, 12)]
        for s, t in deg_pts:
            assert xeval(data["degenerate_discriminant"], s, t) == 0
        anywhere = [(Fraction(k), Fraction(k + 1)) for k in range(1, 21)]
        result[plane] = {
            "degenerate_discriminant": fmt(deg_pts),
            "phi_repeated_root": fmt(_conic_chord_points(
                data["phi_repeated_root"], (Fraction(2), Fraction(1)), 20, range(8, 200))),
            "phi_alpha_common_root": fmt(anywhere),
        }
    print("  20 exact points frozen per stratum curve")
    return result


# ---------------------------------------------------------------------------
# region catalogs
# ---------------------------------------------------------------------------

def _config_at(plane: str, s: Fraction, t: Fraction):
    try:
        return classify_config(principal_bde(family_patch(plane, s, t, order=4)))
    except AnalysisError:
        from umbilics.analysis import ConfigLabel

        return ConfigLabel(kind="degenerate", n_saddles=0, n_nodes=0, roots=())


def build_regions() -> dict[str, dict]:
    catalog: dict[str, dict] = {}
    for plane in PLANES:
        data = plane_data(plane)
        classes: dict[tuple[int, ...], list[tuple[Fraction, Fraction]]] = {}
        grid = [Fraction(k, 4) for k in range(-16, 17)]
        for t in grid:
            for s in grid:
                signs = []
                for _, poly in data.components:
                    v = xeval(poly, s, t)
                    signs.append((v > 0) - (v < 0))
                if 0 in signs:
                    continue
                classes.setdefault(tuple(signs), []).append((s, t))
        regions = []
        for region_id, signs in enumerate(sorted(classes), start=1):
            pts = classes[signs]
            picks = sorted({pts[0], pts[len(pts) // 2], pts[-1], pts[len(pts) // 4], pts[(3 * len(pts)) // 4]})
            configs = [_config_at(plane, s, t) for s, t in picks]
            head = configs[0]
            for cfg in configs[1:]:
                assert (cfg.kind, cfg.n_saddles, cfg.n_nodes) == (head.kind, head.n_saddles, head.n_nodes), (
                    f"{plane}: configuration not constant on sign class {signs}: "
                    f"{[(str(c)) for c in configs]} at {picks}"
                )
            sample = min(pts)
            regions.append(
                {
                    "region_id": region_id,
                    "signs": list(signs),
                    "sample_point": [format_rational(sample[0]), format_rational(sample[1])],
                    "config": {
                        "kind": head.kind,
                        "n_saddles": head.n_saddles,
                        "n_nodes": head.n_nodes,
                    },
                }
            )
        catalog[plane] = {"regions": regions}
        kinds = sorted({r["config"]["kind"] for r in regions})
        print(f"  {plane}: {len(regions)} open regions ({', '.join(kinds)})")
    return catalog


# ---------------------------------------------------------------------------
# bundled model specs
# ---------------------------------------------------------------------------

def _slug(label: str) -> str:
    out = []
    for ch in label:
        if ch.isalnum() or ch == "_":
            out.append(ch)
        elif ch == "+":
            out.append("_plus")
        elif ch == "-":
            out.append("_minus")
        elif ch in "(),/":
            out.append("_")
    text = "".join(out)
    while "__" in text:
        text = text.replace("__", "_")
    return text.strip("_")


def export_models() -> None:
    MODELS_DIR.mkdir(parents=True, exist_ok=True)
    for old in MODELS_DIR.glob("*.json"):
        old.unlink()
    written = 0
    for entry in model_catalog():
        if entry.patch is None:
            continue
        spec = patch_to_spec(entry.patch)
        path = MODELS_DIR / f"{_slug(entry.label)}.json"
        assert not path.exists(), f"model slug collision: {path.name}"
        path.write_text(serialize_surface_spec(spec), encoding="utf-8")
        written += 1
    print(f"  {written} model specs exported")


# ---------------------------------------------------------------------------
# golden portraits
# ---------------------------------------------------------------------------

GOLDEN_SOURCES = (
    ("star", "beta", Fraction(0), Fraction(0)),
    ("lemon", "beta", Fraction(0), Fraction(4)),
    ("monstar", "beta", Fraction(0), Fraction(7, 2)),
    ("timelike_3s", "timelike_i", Fraction(-1), Fraction(1, 4)),
)


def render_goldens() -> None:
    GOLDEN_DIR.mkdir(parents=True, exist_ok=True)
    for name, plane, s, t in GOLDEN_SOURCES:
        patch = family_patch(plane, s, t)
        pp = integrate_lines(patch, step=1 / 256, max_len=1.2,
                             half_width=0.4, overlay_grid=96)
        svg = emit_svg(pp)
        (GOLDEN_DIR / f"{name}.svg").write_text(svg, encoding="utf-8")
        print(f"  {name}.svg ({len(svg)} bytes, "
              f"{len(pp.separatrix_angles)} separatrix directions)")


# ---------------------------------------------------------------------------

def main() -> int:
    print("validating stratum curves against independent derivation:")
    validate_curves()
    print("building region catalogs:")
    catalog = build_regions()
    print("freezing on-curve points:")
    points = curve_points()
    for plane in PLANES:
        catalog[plane]["curve_points"] = points[plane]
    CATALOG_PATH.parent.mkdir(parents=True, exist_ok=True)
    CATALOG_PATH.write_text(json.dumps(catalog, indent=2, sort_keys=True) + "\n",
                            encoding="utf-8")
    print(f"  wrote {CATALOG_PATH.relative_to(ROOT)}")
    print("exporting bundled model specs:")
    export_models()
    print("rendering golden portraits:")
    render_goldens()
    print("done")
    return 0


if __name__ == "__main__":
    sys.exit(main())
