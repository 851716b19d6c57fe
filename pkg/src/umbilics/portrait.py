"""Phase portraits of curvature-line fields, rendered as deterministic SVG.

This is the only module that evaluates jets in floating point: everything
it draws has already been computed and certified exactly upstream.  A
portrait holds the two foliations by solutions of

    a(u,v) dv^2 + b(u,v) du dv + c(u,v) du^2 = 0,

each solution curve integrated with a fixed-step fourth-order Runge-Kutta
scheme on the unoriented root direction field, with continuous branch
tracking.  Inside a tube around the discriminant zero set (where the two
roots collide) the integration switches to the lifted line field

    xi = F_p d/du + p F_p d/dv - (F_u + p F_v) d/dp

on the surface F(u, v, p) = a p^2 + b p + c = 0, in the chart p = dv/du
or - when the tracked direction turns vertical - the reciprocal chart
q = du/dv, and projects the result back to the plane.

Overlay curves (the metric degeneracy locus, the discriminant, and its
Lorentzian-side restriction) are traced by marching squares on the same
box.  SVG output is plain 1.1 text, byte-identical across runs for
identical inputs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import SeedOutsideDomain
from .jets import JetPoly
from .surfaces import BdeGerm, MongePatch, fundamental_forms, principal_bde, special_curves

Point = tuple[float, float]
Polyline = tuple[Point, ...]

DEFAULT_STEP = 1.0 / 256.0
DEFAULT_MAX_LEN = 3.0
DEFAULT_HALF_WIDTH = 0.45


# ---------------------------------------------------------------------------
# portrait data
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Marker:
    """A singular-point marker: umbilics are hollow, folded singularities
    filled; ``kind`` is one of umbilic, folded_saddle, folded_node,
    folded_focus."""

    x: float
    y: float
    kind: str

    @property
    def filled(self) -> bool:
        return self.kind != "umbilic"


@dataclass(frozen=True)
class PhasePortrait:
    """Two families of integral polylines, overlay contours, markers, and
    the measured separatrix angles at the central umbilic (radians in
    (-pi/2, pi/2], one per real root direction of the direction cubic)."""

    foliation1: tuple[Polyline, ...]
    foliation2: tuple[Polyline, ...]
    overlays: dict[str, tuple[Polyline, ...]]
    markers: tuple[Marker, ...]
    box: tuple[float, float, float, float]
    separatrix_angles: tuple[float, ...] = ()

    @property
    def max_step(self) -> float:
        return DEFAULT_MAX_LEN  # documentation hook; polylines carry their own spacing


# ---------------------------------------------------------------------------
# float coefficient field
# ---------------------------------------------------------------------------

class _Field:
    """Float evaluation of an equation germ's coefficients and the derived
    direction data."""

    def __init__(self, w: BdeGerm) -> None:
        self.a = _poly_fn(w.a)
        self.b = _poly_fn(w.b)
        self.c = _poly_fn(w.c)
        self.au = _poly_fn(w.a.derive("u"))
        self.av = _poly_fn(w.a.derive("v"))
        self.bu = _poly_fn(w.b.derive("u"))
        self.bv = _poly_fn(w.b.derive("v"))
        self.cu = _poly_fn(w.c.derive("u"))
        self.cv = _poly_fn(w.c.derive("v"))
        self.disc_jet = w.discriminant()
        self.disc = _poly_fn(self.disc_jet)

    def coeffs(self, x: float, y: float) -> tuple[float, float, float]:
        return self.a(x, y), self.b(x, y), self.c(x, y)

    def directions(self, x: float, y: float) -> list[tuple[float, float]]:
        """Unit direction vectors (du, dv) of the up-to-two real roots."""
        a, b, c = self.coeffs(x, y)
        # a dv^2 + b du dv + c du^2 = 0; solve in the better-conditioned chart
        out: list[tuple[float, float]] = []
        if abs(a) >= abs(c):
            roots = _quadratic_roots(a, b, c)  # p = dv/du
            for p in roots:
                n = math.hypot(1.0, p)
                out.append((1.0 / n, p / n))
            if a == 0.0 and c != 0.0:
                pass  # degree drop handled by the q-chart below when needed
        else:
            roots = _quadratic_roots(c, b, a)  # q = du/dv
            for q in roots:
                n = math.hypot(q, 1.0)
                out.append((q / n, 1.0 / n))
        return out


def _poly_fn(jet: JetPoly):
    terms = sorted(jet.coeff_dict().items())
    data = [(i, j, float(c)) for (i, j), c in terms]

    def fn(x: float, y: float) -> float:
        return sum(c * x**i * y**j for i, j, c in data)

    return fn


def _quadratic_roots(a: float, b: float, c: float) -> list[float]:
    if a == 0.0:
        return [] if b == 0.0 else [-c / b]
    d = b * b - 4.0 * a * c
    if d < 0.0:
        return []
    s = math.sqrt(d)
    # numerically stable split
    q = -0.5 * (b + math.copysign(s, b)) if b != 0.0 else 0.5 * s
    if q == 0.0:
        return [0.0] if d == 0.0 else [0.0, 0.0]
    r1 = q / a
    r2 = c / q
    return [r1] if d == 0.0 else sorted({r1, r2})


def _as_germ(source: BdeGerm | MongePatch) -> BdeGerm:
    if isinstance(source, BdeGerm):
        return source
    return principal_bde(fundamental_forms(source))


# ---------------------------------------------------------------------------
# integration
# ---------------------------------------------------------------------------

def _pick_branch(
    dirs: list[tuple[float, float]], ref: tuple[float, float]
) -> tuple[float, float] | None:
    """The root direction best aligned with ``ref``, oriented along it."""
    best = None
    best_dot = 0.0
    for d in dirs:
        dot = d[0] * ref[0] + d[1] * ref[1]
        if abs(dot) > abs(best_dot):
            best, best_dot = d, dot
    if best is None:
        return None
    if best_dot < 0.0:
        return (-best[0], -best[1])
    return best


def _in_box(x: float, y: float, box: tuple[float, float, float, float]) -> bool:
    return box[0] <= x <= box[2] and box[1] <= y <= box[3]


def _rk4_direction_step(
    fld: _Field, x: float, y: float, ref: tuple[float, float], h: float
) -> tuple[float, float, tuple[float, float]] | None:
    """One RK4 step of the tracked root direction field; None when the
    field ceases to exist along the way."""

    def f(px: float, py: float, r: tuple[float, float]):
        return _pick_branch(fld.directions(px, py), r)

    k1 = f(x, y, ref)
    if k1 is None:
        return None
    k2 = f(x + 0.5 * h * k1[0], y + 0.5 * h * k1[1], k1)
    if k2 is None:
        return None
    k3 = f(x + 0.5 * h * k2[0], y + 0.5 * h * k2[1], k2)
    if k3 is None:
        return None
    k4 = f(x + h * k3[0], y + h * k3[1], k3)
    if k4 is None:
        return None
    dx = (k1[0] + 2.0 * k2[0] + 2.0 * k3[0] + k4[0]) / 6.0
    dy = (k1[1] + 2.0 * k2[1] + 2.0 * k3[1] + k4[1]) / 6.0
    n = math.hypot(dx, dy)
    if n == 0.0:
        return None
    return x + h * dx, y + h * dy, (dx / n, dy / n)


def _lifted_rhs(
    fld: _Field, x: float, y: float, s: float, chart: str
) -> tuple[float, float, float]:
    """The lifted field in chart 'p' (s = dv/du) or 'q' (s = du/dv)."""
    a, b, c = fld.coeffs(x, y)
    au, av = fld.au(x, y), fld.av(x, y)
    bu, bv = fld.bu(x, y), fld.bv(x, y)
    cu, cv = fld.cu(x, y), fld.cv(x, y)
    if chart == "p":
        fp = 2.0 * a * s + b
        fu = au * s * s + bu * s + cu
        fv = av * s * s + bv * s + cv
        return fp, s * fp, -(fu + s * fv)
    # same equation read as c q^2 + b q + a with u and v exchanged
    gq = 2.0 * c * s + b
    gu = cu * s * s + bu * s + au
    gv = cv * s * s + bv * s + av
    return s * gq, gq, -(gv + s * gu)


def _rk4_lifted_step(
    fld: _Field, x: float, y: float, s: float, chart: str, sign: float, h: float
) -> tuple[float, float, float] | None:
    def f(px: float, py: float, ps: float) -> tuple[float, float, float] | None:
        dx, dy, ds = _lifted_rhs(fld, px, py, ps, chart)
        n = math.hypot(dx, dy)
        if n < 1e-14:
            n = math.sqrt(dx * dx + dy * dy + ds * ds)
            if n < 1e-14:
                return None
        return sign * dx / n, sign * dy / n, sign * ds / n

    k1 = f(x, y, s)
    if k1 is None:
        return None
    k2 = f(x + 0.5 * h * k1[0], y + 0.5 * h * k1[1], s + 0.5 * h * k1[2])
    if k2 is None:
        return None
    k3 = f(x + 0.5 * h * k2[0], y + 0.5 * h * k2[1], s + 0.5 * h * k2[2])
    if k3 is None:
        return None
    k4 = f(x + h * k3[0], y + h * k3[1], s + h * k3[2])
    if k4 is None:
        return None
    return (
        x + h * (k1[0] + 2 * k2[0] + 2 * k3[0] + k4[0]) / 6.0,
        y + h * (k1[1] + 2 * k2[1] + 2 * k3[1] + k4[1]) / 6.0,
        s + h * (k1[2] + 2 * k2[2] + 2 * k3[2] + k4[2]) / 6.0,
    )


def _near_discriminant(fld: _Field, x: float, y: float, tube: float) -> bool:
    """Whether (x, y) lies within the discriminant tube: spatial distance
    estimate |delta| / |grad delta| below the tube half-width (points with
    tiny gradient count as inside)."""
    d = fld.disc(x, y)
    eps = 1e-7
    gx = (fld.disc(x + eps, y) - fld.disc(x - eps, y)) / (2 * eps)
    gy = (fld.disc(x, y + eps) - fld.disc(x, y - eps)) / (2 * eps)
    g = math.hypot(gx, gy)
    if g < 1e-12:
        return abs(d) < tube * tube
    return abs(d) / g < tube


def _integrate_one(
    fld: _Field,
    seed: Point,
    direction: tuple[float, float],
    step: float,
    max_len: float,
    box: tuple[float, float, float, float],
) -> Polyline:
    """One solution polyline from a seed along a starting direction."""
    tube = 4.0 * step
    pts: list[Point] = [seed]
    x, y = seed
    ref = direction
    travelled = 0.0
    lifted: tuple[str, float, float] | None = None  # (chart, slope, sign)
    while travelled < max_len and _in_box(x, y, box):
        if lifted is None and _near_discriminant(fld, x, y, tube):
            # enter the lifted chart along the tracked direction
            du, dv = ref
            if abs(du) >= abs(dv):
                lifted = ("p", dv / du, math.copysign(1.0, du))
            else:
                lifted = ("q", du / dv, math.copysign(1.0, dv))
        if lifted is not None:
            chart, s, sign = lifted
            nxt = _rk4_lifted_step(fld, x, y, s, chart, sign, step)
            if nxt is None:
                break
            nx, ny, ns = nxt
            if abs(ns) > 1.0:  # swap charts to keep the slope bounded
                if chart == "p":
                    lifted = ("q", 1.0 / ns, sign * math.copysign(1.0, ns))
                else:
                    lifted = ("p", 1.0 / ns, sign * math.copysign(1.0, ns))
            else:
                lifted = (chart, ns, sign)
            moved = math.hypot(nx - x, ny - y)
            if moved < step * 1e-4:
                break  # converged to a lifted equilibrium
            ref_vec = (nx - x, ny - y)
            n = math.hypot(*ref_vec)
            ref = (ref_vec[0] / n, ref_vec[1] / n)
            x, y = nx, ny
            travelled += moved
            pts.append((x, y))
            if not _near_discriminant(fld, x, y, tube):
                lifted = None
            continue
        nxt2 = _rk4_direction_step(fld, x, y, ref, step)
        if nxt2 is None:
            break
        x, y, ref = nxt2
        travelled += step
        pts.append((x, y))
    return tuple(pts)


# ---------------------------------------------------------------------------
# separatrices and markers
# ---------------------------------------------------------------------------

def _direction_cubic(w: BdeGerm) -> list[float]:
    """Coefficients [c_u, b_u + c_v, a_u + b_v, a_v] of the direction cubic
    in the slope p (float)."""
    au, av = w.a.coefficient(1, 0), w.a.coefficient(0, 1)
    bu, bv = w.b.coefficient(1, 0), w.b.coefficient(0, 1)
    cu, cv = w.c.coefficient(1, 0), w.c.coefficient(0, 1)
    return [float(cu), float(bu + cv), float(au + bv), float(av)]


def _cubic_direction_angles(w: BdeGerm) -> list[float]:
    """Angles in (-pi/2, pi/2] of the real root directions of the direction
    cubic, including the vertical direction when the cubic degenerates."""
    import numpy as np

    coeffs = _direction_cubic(w)
    angles: list[float] = []
    lead_zero = coeffs[3] == 0.0
    trimmed = coeffs[:]
    while trimmed and trimmed[-1] == 0.0:
        trimmed.pop()
    if len(trimmed) > 1:
        roots = np.roots(list(reversed(trimmed)))
        for r in roots:
            if abs(complex(r).imag) < 1e-9:
                angles.append(math.atan(complex(r).real))
    if lead_zero and any(coeffs):
        angles.append(math.pi / 2)
    uniq: list[float] = []
    for t in sorted(angles):
        if not uniq or abs(t - uniq[-1]) > 1e-9:
            uniq.append(t)
    return uniq


def _fold_markers(
    fld: _Field, contours: tuple[Polyline, ...]
) -> list[Marker]:
    """Equilibria of the lifted field on the discriminant contour, located
    by sign changes of the equilibrium function along the polylines and
    classified saddle / node / focus by the reduced Jacobian."""

    def equilibrium_fn(x: float, y: float) -> float:
        a, b, c = fld.coeffs(x, y)
        if abs(a) >= abs(c):
            s = -b / (2.0 * a) if a != 0.0 else 0.0
            return _lifted_rhs(fld, x, y, s, "p")[2]
        s = -b / (2.0 * c) if c != 0.0 else 0.0
        return _lifted_rhs(fld, x, y, s, "q")[2]

    out: list[Marker] = []
    for line in contours:
        vals = [equilibrium_fn(x, y) for x, y in line]
        for k in range(len(line) - 1):
            v0, v1 = vals[k], vals[k + 1]
            if v0 == 0.0 or v0 * v1 >= 0.0:
                continue
            (x0, y0), (x1, y1) = line[k], line[k + 1]
            for _ in range(40):  # bisection along the segment
                xm, ym = 0.5 * (x0 + x1), 0.5 * (y0 + y1)
                vm = equilibrium_fn(xm, ym)
                if v0 * vm <= 0.0:
                    x1, y1, v1 = xm, ym, vm
                else:
                    x0, y0, v0 = xm, ym, vm
            x, y = 0.5 * (x0 + x1), 0.5 * (y0 + y1)
            out.append(Marker(x, y, _fold_kind(fld, x, y)))
    dedup: list[Marker] = []
    for m in sorted(out, key=lambda m: (m.x, m.y)):
        if not any(
            math.hypot(m.x - d.x, m.y - d.y) < 1e-4 for d in dedup
        ):
            dedup.append(m)
    return dedup


def _fold_kind(fld: _Field, x: float, y: float) -> str:
    """Classification of a folded singularity by the eigenvalues of the
    linearised lifted field in its chart."""
    import numpy as np

    a, c = fld.a(x, y), fld.c(x, y)
    chart = "p" if abs(a) >= abs(c) else "q"
    lead = a if chart == "p" else c
    b = fld.b(x, y)
    s = -b / (2.0 * lead) if lead != 0.0 else 0.0
    eps = 1e-6

    def rhs(px: float, py: float, ps: float):
        return _lifted_rhs(fld, px, py, ps, chart)

    base = rhs(x, y, s)
    jac = np.zeros((3, 3))
    for col, (dx, dy, ds) in enumerate(
        ((eps, 0.0, 0.0), (0.0, eps, 0.0), (0.0, 0.0, eps))
    ):
        plus = rhs(x + dx, y + dy, s + ds)
        minus = rhs(x - dx, y - dy, s - ds)
        for row in range(3):
            jac[row, col] = (plus[row] - minus[row]) / (2 * eps)
    eig = np.linalg.eigvals(jac)
    nonzero = sorted(eig, key=lambda z: -abs(z))[:2]
    if any(abs(complex(z).imag) > 1e-4 * abs(complex(z)) for z in nonzero):
        return "folded_focus"
    reals = [complex(z).real for z in nonzero]
    if len(reals) == 2 and reals[0] * reals[1] < 0.0:
        return "folded_saddle"
    return "folded_node"


# ---------------------------------------------------------------------------
# marching squares overlays
# ---------------------------------------------------------------------------

def _marching_squares(
    fn, box: tuple[float, float, float, float], n: int = 160
) -> tuple[Polyline, ...]:
    """Zero contour of a float function on the box as merged polylines."""
    x0, y0, x1, y1 = box
    dx = (x1 - x0) / n
    dy = (y1 - y0) / n
    grid = [
        [fn(x0 + i * dx, y0 + j * dy) for j in range(n + 1)]
        for i in range(n + 1)
    ]

    def interp(xa, ya, va, xb, yb, vb):
        t = va / (va - vb) if va != vb else 0.5
        return (xa + t * (xb - xa), ya + t * (yb - ya))

    segments: list[tuple[Point, Point]] = []
    for i in range(n):
        for j in range(n):
            xa, ya = x0 + i * dx, y0 + j * dy
            xb, yb = xa + dx, ya + dy
            v00, v01 = grid[i][j], grid[i][j + 1]
            v10, v11 = grid[i + 1][j], grid[i + 1][j + 1]
            code = (
                (1 if v00 > 0 else 0)
                | (2 if v10 > 0 else 0)
                | (4 if v11 > 0 else 0)
                | (8 if v01 > 0 else 0)
            )
            if code in (0, 15):
                continue
            pts = []
            if (code & 1) != ((code >> 1) & 1):
                pts.append(interp(xa, ya, v00, xb, ya, v10))
            if ((code >> 1) & 1) != ((code >> 2) & 1):
                pts.append(interp(xb, ya, v10, xb, yb, v11))
            if ((code >> 2) & 1) != ((code >> 3) & 1):
                pts.append(interp(xb, yb, v11, xa, yb, v01))
            if ((code >> 3) & 1) != (code & 1):
                pts.append(interp(xa, yb, v01, xa, ya, v00))
            if len(pts) == 2:
                segments.append((pts[0], pts[1]))
            elif len(pts) == 4:  # ambiguous saddle cell: split by pairs
                segments.append((pts[0], pts[1]))
                segments.append((pts[2], pts[3]))
    return _merge_segments(segments)


def _merge_segments(segments: list[tuple[Point, Point]]) -> tuple[Polyline, ...]:
    def key(p: Point) -> tuple[float, float]:
        return (round(p[0], 9), round(p[1], 9))

    adjacency: dict[tuple[float, float], list[int]] = {}
    for idx, (p, q) in enumerate(segments):
        adjacency.setdefault(key(p), []).append(idx)
        adjacency.setdefault(key(q), []).append(idx)
    used = [False] * len(segments)
    polylines: list[Polyline] = []
    for start in range(len(segments)):
        if used[start]:
            continue
        used[start] = True
        p, q = segments[start]
        chain = [p, q]
        # extend forward then backward
        for endpoint, append in ((q, True), (p, False)):
            current = endpoint
            while True:
                candidates = [
                    i for i in adjacency.get(key(current), []) if not used[i]
                ]
                if not candidates:
                    break
                i = candidates[0]
                used[i] = True
                a, b2 = segments[i]
                nxt = b2 if key(a) == key(current) else a
                if append:
                    chain.append(nxt)
                else:
                    chain.insert(0, nxt)
                current = nxt
        polylines.append(tuple(chain))
    return tuple(polylines)


# ---------------------------------------------------------------------------
# portrait assembly
# ---------------------------------------------------------------------------

def _default_seeds(half: float) -> list[Point]:
    seeds: list[Point] = []
    for ring in (0.35, 0.7):
        r = ring * half
        for k in range(12):
            t = 2.0 * math.pi * k / 12.0
            seeds.append((r * math.cos(t), r * math.sin(t)))
    return seeds


def integrate_lines(
    source: BdeGerm | MongePatch,
    seeds: list[Point] | None = None,
    step: float = DEFAULT_STEP,
    max_len: float = DEFAULT_MAX_LEN,
    half_width: float = DEFAULT_HALF_WIDTH,
    overlay_grid: int = 160,
) -> PhasePortrait:
    """Integrate the two solution foliations of a curvature-line equation
    (or of the equation of a patch) from the given seeds and assemble the
    phase portrait.

    Seeds must lie inside the square box of the given half-width
    (:class:`SeedOutsideDomain` otherwise); ``None`` uses two deterministic
    rings of twelve seeds.  Where the discriminant is negative no real
    directions exist and nothing is emitted.
    """
    w = _as_germ(source)
    fld = _Field(w)
    box = (-half_width, -half_width, half_width, half_width)
    if seeds is None:
        seeds = _default_seeds(half_width)
    for s in seeds:
        if not _in_box(s[0], s[1], box):
            raise SeedOutsideDomain(f"seed {s} outside the portrait box")
    fol1: list[Polyline] = []
    fol2: list[Polyline] = []
    for seed in seeds:
        dirs = fld.directions(*seed)
        for idx, d in enumerate(dirs[:2]):
            target = fol1 if idx == 0 else fol2
            forward = _integrate_one(fld, seed, d, step, max_len, box)
            backward = _integrate_one(
                fld, seed, (-d[0], -d[1]), step, max_len, box
            )
            line = tuple(reversed(backward)) + forward[1:]
            if len(line) >= 2:
                target.append(line)
    # separatrices at a central umbilic
    angles: list[float] = []
    if w.vanishes_at_origin():
        for theta in _cubic_direction_angles(w):
            measured = None
            for sgn in (1.0, -1.0):
                r0 = 1e-7
                seed = (sgn * r0 * math.cos(theta), sgn * r0 * math.sin(theta))
                d0 = (sgn * math.cos(theta), sgn * math.sin(theta))
                d = _pick_branch(fld.directions(*seed), d0)
                if d is None:
                    continue
                line = _integrate_one(fld, seed, d, step, max_len, box)
                if len(line) >= 2:
                    fol1.append(line)
                    if measured is None:
                        vx = line[1][0] - line[0][0]
                        vy = line[1][1] - line[0][1]
                        t = math.atan2(vy, vx)
                        while t <= -math.pi / 2:
                            t += math.pi
                        while t > math.pi / 2:
                            t -= math.pi
                        measured = t
            if measured is not None:
                angles.append(measured)
    overlays: dict[str, tuple[Polyline, ...]] = {}
    disc_contours = _marching_squares(fld.disc, box, overlay_grid)
    overlays["discriminant"] = disc_contours
    markers: list[Marker] = []
    if isinstance(source, MongePatch):
        ld_jet, lpl_jet, _ = special_curves(source)
        ld_fn = _poly_fn(ld_jet)
        overlays["ld"] = _marching_squares(ld_fn, box, overlay_grid)
        lorentzian = [
            line
            for line in disc_contours
            if line and ld_fn(*line[len(line) // 2]) > 0.0
        ]
        overlays["lpl"] = tuple(lorentzian)
    if w.vanishes_at_origin():
        markers.append(Marker(0.0, 0.0, "umbilic"))
    guard = max(4.0 * step, 1e-3)
    for m in _fold_markers(fld, disc_contours):
        # an umbilic anchors the discriminant contour but is not a fold point
        if any(
            u.kind == "umbilic" and math.hypot(m.x - u.x, m.y - u.y) < guard
            for u in markers
        ):
            continue
        markers.append(m)
    return PhasePortrait(
        foliation1=tuple(fol1),
        foliation2=tuple(fol2),
        overlays=overlays,
        markers=tuple(markers),
        box=box,
        separatrix_angles=tuple(angles),
    )


# ---------------------------------------------------------------------------
# SVG emission
# ---------------------------------------------------------------------------

DEFAULT_STYLE = {
    "width": 480,
    "height": 480,
    "background": "#ffffff",
    "frame": "#222222",
    "foliation1": "#1f5fa8",
    "foliation2": "#c03a2b",
    "foliation_width": 0.8,
    "overlay_colors": {
        "discriminant": "#2a9d4e",
        "ld": "#8e44ad",
        "lpl": "#e67e22",
    },
    "overlay_width": 1.4,
    "marker_radius": 3.5,
    "marker_color": "#000000",
}


def _fmt(v: float) -> str:
    s = f"{v:.3f}"
    return "0.000" if s == "-0.000" else s


def emit_svg(pp: PhasePortrait, style: dict | None = None) -> str:
    """Deterministic SVG 1.1 text for a portrait: foliation 1 solid,
    foliation 2 dashed, overlays in their own stroke classes, umbilic
    markers hollow and folded singularities filled."""
    st = dict(DEFAULT_STYLE)
    if style:
        overlay_colors = dict(st["overlay_colors"])
        overlay_colors.update(style.get("overlay_colors", {}))
        st.update(style)
        st["overlay_colors"] = overlay_colors
    width, height = st["width"], st["height"]
    x0, y0, x1, y1 = pp.box
    sx = width / (x1 - x0)
    sy = height / (y1 - y0)

    def tx(p: Point) -> str:
        return f"{_fmt((p[0] - x0) * sx)},{_fmt((y1 - p[1]) * sy)}"

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect x="0" y="0" width="{width}" height="{height}" '
        f'fill="{st["background"]}" stroke="{st["frame"]}" stroke-width="1"/>',
    ]
    for name, color, dash in (
        ("foliation1", st["foliation1"], None),
        ("foliation2", st["foliation2"], "4 3"),
    ):
        group = getattr(pp, name)
        dash_attr = f' stroke-dasharray="{dash}"' if dash else ""
        lines.append(
            f'<g class="{name}" fill="none" stroke="{color}" '
            f'stroke-width="{st["foliation_width"]}"{dash_attr}>'
        )
        for poly in group:
            pts = " ".join(tx(p) for p in poly)
            lines.append(f'<polyline points="{pts}"/>')
        lines.append("</g>")
    for name in sorted(pp.overlays):
        color = st["overlay_colors"].get(name, "#666666")
        lines.append(
            f'<g class="overlay-{name}" fill="none" stroke="{color}" '
            f'stroke-width="{st["overlay_width"]}">'
        )
        for poly in pp.overlays[name]:
            pts = " ".join(tx(p) for p in poly)
            lines.append(f'<polyline points="{pts}"/>')
        lines.append("</g>")
    lines.append(f'<g class="markers" stroke="{st["marker_color"]}">')
    for m in pp.markers:
        cx, cy = tx((m.x, m.y)).split(",")
        fill = st["marker_color"] if m.filled else "none"
        lines.append(
            f'<circle cx="{cx}" cy="{cy}" r="{st["marker_radius"]}" '
            f'fill="{fill}" class="{m.kind}"/>'
        )
    lines.append("</g>")
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
