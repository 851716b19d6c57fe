"""Command-line front end: parse surface spec files, run analyses, and
emit reports and figures.

Surface specs are small JSON documents with exact rational coefficients::

    {
      "name": "spacelike cubic ladder k=2",
      "ambient": "minkowski",
      "graph_axis": "z",
      "order": 7,
      "coefficients": [[3, 0, "1"], [1, 3, "-1"]]
    }

Coefficient values must be integer or ``p/q`` strings; decimal floats are
rejected (floating point enters only through portrait and grid options).
Exit codes: 0 on success, 2 on a spec parsing problem, 3 on an analysis
error; analysis error messages are passed through verbatim.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .analysis import analyze_umbilic, equivalence_panel
from .deform import DEFAULT_RADIUS, split_experiment
from .errors import AnalysisError, SpecError
from .localalg import MultiplicityResult
from .rationals import format_rational
from .strata import plane_data, stratify
from .surfaces import MongePatch, monge_patch
from .portrait import emit_svg, integrate_lines

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/[1-9]\d*)?$")
_PLANES = ("beta", "timelike_i", "timelike_iii_plus", "timelike_iii_minus")


# ---------------------------------------------------------------------------
# surface spec files
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SurfaceSpec:
    """A parsed surface description: ambient tag, graph axis, truncation
    order, and exact rational coefficients as (i, j, value-string) triples."""

    ambient: str
    graph_axis: str
    order: int
    coefficients: tuple[tuple[int, int, str], ...]
    name: str | None = None

    def coefficient_dict(self) -> dict[tuple[int, int], Fraction]:
        return {(i, j): Fraction(v) for i, j, v in self.coefficients}


def parse_surface_spec(text: str) -> SurfaceSpec:
    """Parse the JSON text of a surface spec.

    Raises :class:`SpecError` with line/column positions for malformed
    JSON and with the offending triple spelled out for bad coefficients.
    """
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as e:
        raise SpecError(
            f"spec parse error at line {e.lineno}, column {e.colno}: {e.msg}"
        ) from None
    if not isinstance(raw, dict):
        raise SpecError("spec must be a JSON object")
    required = {"ambient", "graph_axis", "order", "coefficients"}
    missing = sorted(required - raw.keys())
    if missing:
        raise SpecError(f"spec missing required keys: {', '.join(missing)}")
    unknown = sorted(raw.keys() - required - {"name"})
    if unknown:
        raise SpecError(f"spec has unknown keys: {', '.join(unknown)}")
    ambient = raw["ambient"]
    axis = raw["graph_axis"]
    order = raw["order"]
    name = raw.get("name")
    if not isinstance(ambient, str) or not isinstance(axis, str):
        raise SpecError("ambient and graph_axis must be strings")
    if not isinstance(order, int) or isinstance(order, bool) or order < 1:
        raise SpecError("order must be a positive integer")
    if name is not None and not isinstance(name, str):
        raise SpecError("name must be a string when present")
    coeffs_raw = raw["coefficients"]
    if not isinstance(coeffs_raw, list):
        raise SpecError("coefficients must be a list of (i, j, value) triples")
    triples: list[tuple[int, int, str]] = []
    seen: set[tuple[int, int]] = set()
    for item in coeffs_raw:
        if (
            not isinstance(item, list)
            or len(item) != 3
            or not all(isinstance(k, int) and not isinstance(k, bool) for k in item[:2])
            or not isinstance(item[2], str)
        ):
            raise SpecError(
                f"coefficient entry {item!r} is not an "
                '[i, j, "p/q"] triple with a rational string value'
            )
        i, j, value = item
        if i < 0 or j < 0:
            raise SpecError(f"coefficient {item!r} has negative exponents")
        if not _RATIONAL_RE.match(value):
            raise SpecError(
                f"coefficient ({i}, {j}, \"{value}\") is not an exact "
                "rational: use integer or p/q strings, no decimals"
            )
        if (i, j) in seen:
            raise SpecError(f"coefficient ({i}, {j}) appears more than once")
        seen.add((i, j))
        triples.append((i, j, value))
    triples.sort(key=lambda t: (t[0], t[1]))
    return SurfaceSpec(
        ambient=ambient,
        graph_axis=axis,
        order=order,
        coefficients=tuple(triples),
        name=name,
    )


def serialize_surface_spec(spec: SurfaceSpec) -> str:
    """Canonical JSON text for a spec: fixed key order, coefficients sorted
    by exponent pair, values in lowest terms."""
    doc: dict[str, object] = {}
    if spec.name is not None:
        doc["name"] = spec.name
    doc["ambient"] = spec.ambient
    doc["graph_axis"] = spec.graph_axis
    doc["order"] = spec.order
    doc["coefficients"] = [
        [i, j, format_rational(Fraction(v))]
        for i, j, v in sorted(spec.coefficients)
    ]
    return json.dumps(doc, indent=2) + "\n"


def spec_to_patch(spec: SurfaceSpec, order: int | None = None) -> MongePatch:
    """Build the exact Monge patch a spec describes (optionally overriding
    the truncation order)."""
    return monge_patch(
        spec.ambient,
        spec.graph_axis,
        spec.coefficient_dict(),
        order=order if order is not None else spec.order,
        name=spec.name,
    )


def patch_to_spec(patch: MongePatch) -> SurfaceSpec:
    coeffs = tuple(
        (i, j, format_rational(c))
        for (i, j), c in sorted(patch.f.coeff_dict().items())
    )
    return SurfaceSpec(
        ambient=patch.ambient,
        graph_axis=patch.graph_axis,
        order=patch.f.order,
        coefficients=coeffs,
        name=patch.name,
    )


def model_directory() -> Path:
    """The directory of bundled surface spec files; the environment
    variable ``UMBILICS_MODEL_DIR`` overrides the packaged copies."""
    env = os.environ.get("UMBILICS_MODEL_DIR")
    if env:
        return Path(env)
    return Path(__file__).resolve().parent / "_models"


def load_spec(source: str) -> SurfaceSpec:
    """Read a spec from a file path, or failing that from the bundled
    model directory by bare name."""
    path = Path(source)
    if not path.is_file():
        candidate = model_directory() / f"{source}.json"
        if candidate.is_file():
            path = candidate
        else:
            raise SpecError(
                f"no spec file {source!r} and no bundled model of that name"
            )
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise SpecError(f"cannot read spec file {source!r}: {e}") from None
    return parse_surface_spec(text)


# ---------------------------------------------------------------------------
# rendering helpers
# ---------------------------------------------------------------------------

def _mult_str(m: MultiplicityResult | None) -> str:
    if m is None:
        return "undetermined"
    if not m.is_finite:
        return "infinite"
    return str(int(m))


def _tri_str(v: bool | None, yes: str = "yes", no: str = "no") -> str:
    if v is None:
        return "n/a"
    return yes if v else no


def _parse_grid_number(text: str) -> Fraction:
    """Grid and range options accept rational strings and plain decimals
    (converted exactly)."""
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise SpecError(f"bad numeric option {text!r}") from None


def _emit(out_path: str | None, text: str) -> None:
    if out_path is None or out_path == "-":
        sys.stdout.write(text)
    else:
        Path(out_path).write_text(text, encoding="utf-8")


# ---------------------------------------------------------------------------
# analyze
# ---------------------------------------------------------------------------

def _analyze_one(source: str, order: int | None) -> tuple[str, str]:
    spec = load_spec(source)
    patch = spec_to_patch(spec, order=order)
    report = analyze_umbilic(patch)
    panel = equivalence_panel(patch)
    title = spec.name or source
    mw = report.bde_multiplicity
    lines = [
        f"surface: {title}",
        f"  ambient {spec.ambient}, graph axis {spec.graph_axis}, "
        f"order {order if order is not None else spec.order}",
        f"causal type: {report.causal_type}",
        f"umbilic multiplicity m_u: {_mult_str(report.multiplicity)}",
        f"equation multiplicity m(w): {_mult_str(mw)}",
        f"inequality m(w) >= 3 m_u: {_tri_str(report.inequality_holds, 'holds', 'fails')}",
        f"discriminant class: {report.discriminant_class or 'n/a'}",
        f"degeneracy-locus class: {report.degeneracy_class or 'n/a'}",
        f"configuration: {report.config}",
        "equivalence panel:",
        f"  multiplicity one: {_tri_str(panel.mu_is_one)}",
        f"  Morse singular curve: {_tri_str(panel.morse_curve)}",
        f"  D4 deformation versal: {_tri_str(panel.d4_versal)}",
        f"  jet-map transversal: {_tri_str(panel.transversal)}",
        f"  consistent: {_tri_str(panel.consistent)}",
    ]
    records = [
        f"surface={title}",
        f"ambient={spec.ambient}",
        f"graph_axis={spec.graph_axis}",
        f"order={order if order is not None else spec.order}",
        f"causal_type={report.causal_type}",
        f"m_u={_mult_str(report.multiplicity)}",
        f"m_w={_mult_str(mw)}",
        f"inequality={_tri_str(report.inequality_holds, 'holds', 'fails')}",
        f"discriminant_class={report.discriminant_class or 'n/a'}",
        f"degeneracy_class={report.degeneracy_class or 'n/a'}",
        f"config={report.config}",
        f"panel.mu_is_one={_tri_str(panel.mu_is_one)}",
        f"panel.morse_curve={_tri_str(panel.morse_curve)}",
        f"panel.d4_versal={_tri_str(panel.d4_versal)}",
        f"panel.transversal={_tri_str(panel.transversal)}",
        f"panel.consistent={_tri_str(panel.consistent)}",
    ]
    return "\n".join(lines) + "\n", "\n".join(records) + "\n"


def cmd_analyze(args: argparse.Namespace) -> int:
    sources: list[str] = args.spec
    if args.jobs > 1 and len(sources) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_analyze_one, sources, [args.order] * len(sources)))
    else:
        results = [_analyze_one(s, args.order) for s in sources]
    chunks = [r[0] if args.format == "text" else r[1] for r in results]
    _emit(args.out, "\n".join(chunks) if args.format == "text" else "".join(chunks))
    return 0


# ---------------------------------------------------------------------------
# stratify
# ---------------------------------------------------------------------------

def _stratify_svg(plane: str, lo: Fraction, hi: Fraction, grid: int) -> str:
    """Deterministic SVG of the stratum curves of a parameter plane."""
    from .portrait import _marching_squares

    data = plane_data(plane)
    box = (float(lo), float(lo), float(hi), float(hi))
    width = height = 480
    sx = width / (box[2] - box[0])
    sy = height / (box[3] - box[1])

    def tx(p: tuple[float, float]) -> str:
        x = (p[0] - box[0]) * sx
        y = (box[3] - p[1]) * sy
        return f"{x:.3f},{y:.3f}"

    palette = ["#1f5fa8", "#c03a2b", "#2a9d4e", "#8e44ad", "#e67e22", "#16a085"]
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width}" height="{height}" viewBox="0 0 {width} {height}">',
        f'<rect x="0" y="0" width="{width}" height="{height}" '
        f'fill="#ffffff" stroke="#222222" stroke-width="1"/>',
    ]
    for idx, (curve_name, poly) in enumerate(data.curves):
        terms = sorted(poly.items())

        def fn(x: float, y: float, t=terms) -> float:
            return sum(float(c) * x**i * y**j for (i, j), c in t)

        color = palette[idx % len(palette)]
        lines.append(
            f'<g class="curve-{curve_name}" fill="none" stroke="{color}" '
            f'stroke-width="1.4">'
        )
        for polyline in _marching_squares(fn, box, max(grid * 8, 160)):
            pts = " ".join(tx(p) for p in polyline)
            lines.append(f'<polyline points="{pts}"/>')
        lines.append("</g>")
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def cmd_stratify(args: argparse.Namespace) -> int:
    plane = args.plane
    lo = _parse_grid_number(args.low)
    hi = _parse_grid_number(args.high)
    if hi <= lo:
        raise SpecError("grid range must have low < high")
    n = args.grid
    if n < 2:
        raise SpecError("grid must have at least 2 points per side")
    rows: list[str] = []
    for kt in range(n):
        t = lo + (hi - lo) * kt / (n - 1)
        for ks in range(n):
            s = lo + (hi - lo) * ks / (n - 1)
            label = stratify(plane, s, t)
            on = ",".join(label.on_curves) if label.on_curves else "-"
            if args.format == "records":
                rows.append(
                    f"plane={plane} s={format_rational(s)} t={format_rational(t)} "
                    f"region={label.region_id} on_curves={on} "
                    f"config={label.predicted_config} mult_one={label.mult_one}"
                )
            else:
                rows.append(
                    f"s={format_rational(s):>8s} t={format_rational(t):>8s}  "
                    f"region {label.region_id:>3d}  on [{on}]  "
                    f"{label.predicted_config}  mult_one={label.mult_one}"
                )
    _emit(args.out, "\n".join(rows) + "\n")
    if args.svg:
        Path(args.svg).write_text(
            _stratify_svg(plane, lo, hi, n), encoding="utf-8"
        )
    return 0


# ---------------------------------------------------------------------------
# portrait
# ---------------------------------------------------------------------------

def cmd_portrait(args: argparse.Namespace) -> int:
    spec = load_spec(args.spec)
    patch = spec_to_patch(spec, order=args.order)
    seeds = None
    if args.seed:
        seeds = [(float(s), float(t)) for s, t in args.seed]
    pp = integrate_lines(
        patch,
        seeds=seeds,
        step=args.step,
        max_len=args.max_len,
        half_width=args.half_width,
        overlay_grid=args.overlay_grid,
    )
    _emit(args.out, emit_svg(pp))
    return 0


# ---------------------------------------------------------------------------
# deform
# ---------------------------------------------------------------------------

def cmd_deform(args: argparse.Namespace) -> int:
    spec = load_spec(args.spec)
    patch = spec_to_patch(spec, order=args.order)
    if args.radius is None:
        radius = DEFAULT_RADIUS
    elif _RATIONAL_RE.match(args.radius):
        radius = Fraction(args.radius)
    else:
        raise SpecError(f"--radius must be an exact rational, got {args.radius!r}")
    result = split_experiment(patch, radius=radius)
    title = spec.name or args.spec
    lines: list[str] = []
    if args.format == "text":
        lines.append(f"surface: {title}")
        lines.append(f"umbilic multiplicity m_u: {result.base_multiplicity}")
        lines.append(f"counting radius: {format_rational(result.radius)}")
        lines.append(f"family members: {len(result.reports)}")
        lines.append(f"max real umbilics observed: {result.max_real_observed}")
        for rep in result.reports:
            pert = " ".join(
                f"d[{i},{j}]={format_rational(v)}" for i, j, v in rep.perturbation
            ) or "(unperturbed)"
            lines.append(f"member {pert}")
            lines.append(
                f"  complex count in disk: {rep.complex_count}; "
                f"real points found: {len(rep.real_umbilics)}"
            )
            for u in rep.real_umbilics:
                lines.append(
                    f"    ({u.x:+.6f}, {u.y:+.6f})  multiplicity {u.multiplicity}"
                    f"  morse={'yes' if u.morse else 'no'}"
                )
    else:
        for rep in result.reports:
            pert = ";".join(
                f"{i},{j},{format_rational(v)}" for i, j, v in rep.perturbation
            )
            pts = ";".join(
                f"{u.x:.6f},{u.y:.6f},{u.multiplicity},{int(u.morse)}"
                for u in rep.real_umbilics
            )
            lines.append(
                f"surface={title} perturbation=[{pert}] "
                f"complex_count={rep.complex_count} real={len(rep.real_umbilics)} "
                f"points=[{pts}]"
            )
        lines.append(
            f"surface={title} m_u={result.base_multiplicity} "
            f"radius={format_rational(result.radius)} "
            f"max_real={result.max_real_observed}"
        )
    _emit(args.out, "\n".join(lines) + "\n")
    return 0


# ---------------------------------------------------------------------------
# models
# ---------------------------------------------------------------------------

def cmd_models(args: argparse.Namespace) -> int:
    directory = model_directory()
    if not directory.is_dir():
        raise SpecError(f"model directory {directory} does not exist")
    rows = []
    for path in sorted(directory.glob("*.json")):
        try:
            spec = parse_surface_spec(path.read_text(encoding="utf-8"))
        except SpecError as e:
            rows.append(f"{path.stem:32s}  (unreadable: {e})")
            continue
        rows.append(
            f"{path.stem:32s}  {spec.ambient:9s} graph {spec.graph_axis}  "
            f"order {spec.order}  {spec.name or ''}".rstrip()
        )
    _emit(args.out, "\n".join(rows) + "\n")
    return 0


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="umbilics",
        description="Exact analysis of umbilic points of polynomial "
        "Monge patches in Euclidean and Minkowski 3-space.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_an = sub.add_parser("analyze", help="multiplicities, classes, and "
                          "genericity panel for a surface spec")
    p_an.add_argument("spec", nargs="+", help="spec file path or bundled model name")
    p_an.add_argument("--order", type=int, default=None, help="override jet order")
    p_an.add_argument("--format", choices=("text", "records"), default="text")
    p_an.add_argument("--out", default=None, help="output file (default stdout)")
    p_an.add_argument("--jobs", type=int, default=1, help="parallel analyses")
    p_an.set_defaults(func=cmd_analyze)

    p_st = sub.add_parser("stratify", help="stratum labels on a parameter-plane grid")
    p_st.add_argument("plane", choices=_PLANES)
    p_st.add_argument("--grid", type=int, default=9, help="points per side")
    p_st.add_argument("--low", default="-4", help="range low bound (both axes)")
    p_st.add_argument("--high", default="4", help="range high bound (both axes)")
    p_st.add_argument("--format", choices=("text", "records"), default="text")
    p_st.add_argument("--out", default=None)
    p_st.add_argument("--svg", default=None, help="also draw the stratum curves")
    p_st.set_defaults(func=cmd_stratify)

    p_po = sub.add_parser("portrait", help="curvature-line phase portrait SVG")
    p_po.add_argument("spec")
    p_po.add_argument("--order", type=int, default=None)
    p_po.add_argument("--step", type=float, default=1.0 / 256.0)
    p_po.add_argument("--max-len", type=float, default=3.0)
    p_po.add_argument("--half-width", type=float, default=0.45)
    p_po.add_argument("--overlay-grid", type=int, default=160)
    p_po.add_argument("--seed", nargs=2, action="append", metavar=("X", "Y"),
                      help="seed point (repeatable); default ring seeding")
    p_po.add_argument("--out", default=None)
    p_po.set_defaults(func=cmd_portrait)

    p_de = sub.add_parser("deform", help="perturbation splitting experiment")
    p_de.add_argument("spec")
    p_de.add_argument("--order", type=int, default=None)
    p_de.add_argument("--radius", default=None, help="counting disk radius p/q")
    p_de.add_argument("--format", choices=("text", "records"), default="text")
    p_de.add_argument("--out", default=None)
    p_de.set_defaults(func=cmd_deform)

    p_mo = sub.add_parser("models", help="bundled model specs")
    p_mo.add_argument("action", choices=("list",))
    p_mo.add_argument("--out", default=None)
    p_mo.set_defaults(func=cmd_models)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SpecError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except AnalysisError as e:
        print(f"{e}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
