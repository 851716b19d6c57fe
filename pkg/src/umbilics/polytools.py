"""Exact polynomial utilities over the rationals.

Two representations are used throughout:

* **upoly** — a univariate polynomial as a list of Fractions, index =
  degree, no trailing zeros (the zero polynomial is the empty list);
* **xpoly** — a bivariate polynomial as a dict ``{(i, j): Fraction}`` with
  no zero values stored (exact, untruncated — distinct from
  :class:`~umbilics.jets.JetPoly`, which is a truncated jet).

Everything here is exact; nothing ever touches floats.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from .errors import IllConditioned
from .rationals import Q

Upoly = list[Fraction]
Xpoly = dict[tuple[int, int], Fraction]


# ---------------------------------------------------------------------------
# univariate polynomials
# ---------------------------------------------------------------------------

def unormalize(p: Iterable[Fraction | int]) -> Upoly:
    out = [Q(c) for c in p]
    while out and out[-1] == 0:
        out.pop()
    return out


def udeg(p: Sequence[Fraction]) -> int:
    return len(p) - 1


def uadd(p: Sequence[Fraction], q: Sequence[Fraction]) -> Upoly:
    n = max(len(p), len(q))
    return unormalize([(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)])


def uneg(p: Sequence[Fraction]) -> Upoly:
    return [-c for c in p]


def usub(p: Sequence[Fraction], q: Sequence[Fraction]) -> Upoly:
    return uadd(p, uneg(q))


def uscale(p: Sequence[Fraction], s: Fraction | int) -> Upoly:
    s = Q(s)
    if s == 0:
        return []
    return [c * s for c in p]


def umul(p: Sequence[Fraction], q: Sequence[Fraction]) -> Upoly:
    if not p or not q:
        return []
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return unormalize(out)


def ueval(p: Sequence[Fraction], x: Fraction | int) -> Fraction:
    x = Q(x)
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def ueval_float(p: Sequence[Fraction], x: float) -> float:
    acc = 0.0
    for c in reversed(p):
        acc = acc * x + float(c)
    return acc


def uderive(p: Sequence[Fraction]) -> Upoly:
    return unormalize([p[i] * i for i in range(1, len(p))])


def udivmod(p: Sequence[Fraction], q: Sequence[Fraction]) -> tuple[Upoly, Upoly]:
    """Exact division with remainder over Q."""
    if not q:
        raise ZeroDivisionError("division by zero polynomial")
    rem = list(p)
    quo = [Fraction(0)] * max(len(p) - len(q) + 1, 0)
    dq, lead = udeg(q), q[-1]
    while len(rem) >= len(q) and any(c != 0 for c in rem):
        rem = unormalize(rem)
        if udeg(rem) < dq:
            break
        shift = udeg(rem) - dq
        factor = rem[-1] / lead
        quo[shift] = factor
        for i in range(len(q)):
            rem[shift + i] -= factor * q[i]
        rem = unormalize(rem)
    return unormalize(quo), unormalize(rem)


def _int_primitive(p: list[int]) -> list[int]:
    from math import gcd

    g = 0
    for c in p:
        g = gcd(g, c)
    return [c // g for c in p] if g else []


def ugcd(p: Sequence[Fraction], q: Sequence[Fraction]) -> Upoly:
    """Monic gcd over Q, via a primitive pseudo-remainder sequence over the
    integers (naive remainders over Q blow coefficients up exponentially)."""
    a = uclear_denominators(p)
    b = uclear_denominators(q)
    if len(a) < len(b):
        a, b = b, a
    while b:
        # integer pseudo-remainder: repeatedly rem <- lc(b)*rem - top*x^s*b
        rem = list(a)
        lead = b[-1]
        db = len(b) - 1
        while rem and len(rem) - 1 >= db:
            top = rem[-1]
            shift = (len(rem) - 1) - db
            rem = [lead * c for c in rem]
            for i in range(len(b)):
                rem[shift + i] -= top * b[i]
            while rem and rem[-1] == 0:
                rem.pop()
        a, b = b, _int_primitive(rem)
    if not a:
        return []
    lead = Fraction(a[-1])
    return [Fraction(c) / lead for c in a]


def usquarefree_part(p: Sequence[Fraction]) -> Upoly:
    p = unormalize(p)
    if udeg(p) <= 0:
        return p
    g = ugcd(p, uderive(p))
    if udeg(g) <= 0:
        return list(p)
    quo, rem = udivmod(p, g)
    assert not rem
    return quo


def usquarefree_decomposition(p: Sequence[Fraction]) -> list[tuple[Upoly, int]]:
    """Yun's algorithm: returns ``[(f_i, i)]`` with ``p = lc * prod f_i^i``,
    each ``f_i`` monic squarefree, pairwise coprime (trivial ``f_i`` omitted)."""
    p = unormalize(p)
    if udeg(p) <= 0:
        return []
    lead = p[-1]
    p = uscale(p, Fraction(1) / lead)
    dp = uderive(p)
    a = ugcd(p, dp)
    b, _ = udivmod(p, a)
    c, _ = udivmod(dp, a)
    out: list[tuple[Upoly, int]] = []
    i = 1
    while udeg(b) > 0:
        d = usub(c, uderive(b))
        f = ugcd(b, d)
        if udeg(f) > 0:
            out.append((f, i))
        b, _ = udivmod(b, f)
        c, _ = udivmod(d, f)
        i += 1
    return out


def uclear_denominators(p: Sequence[Fraction]) -> list[int]:
    """Primitive integer version of ``p`` (content removed, sign of leading
    coefficient preserved)."""
    p = unormalize(p)
    if not p:
        return []
    from math import gcd, lcm

    denom = 1
    for c in p:
        denom = lcm(denom, c.denominator)
    ints = [int(c * denom) for c in p]
    g = 0
    for c in ints:
        g = gcd(g, abs(c))
    return [c // g for c in ints]


def urational_roots(p: Sequence[Fraction]) -> list[tuple[Fraction, int]]:
    """All rational roots with multiplicities, by the rational-root test."""
    p = unormalize(p)
    if udeg(p) < 1:
        return []
    ints = uclear_denominators(p)
    # factor out x^k
    k = 0
    while ints[0] == 0:
        ints = ints[1:]
        k += 1
    roots: list[tuple[Fraction, int]] = []
    if k:
        roots.append((Fraction(0), k))
    work = unormalize([Fraction(c) for c in ints])
    if udeg(work) >= 1:
        a0, an = abs(ints[0]), abs(ints[-1])
        def divisors(n: int) -> list[int]:
            out = [d for d in range(1, int(abs(n) ** 0.5) + 1) if n % d == 0]
            return sorted(set(out + [n // d for d in out]))
        candidates: set[Fraction] = set()
        for num in divisors(a0):
            for den in divisors(an):
                candidates.add(Fraction(num, den))
                candidates.add(Fraction(-num, den))
        for cand in sorted(candidates):
            mult = 0
            while udeg(work) >= 1 and ueval(work, cand) == 0:
                work, rem = udivmod(work, [-cand, Fraction(1)])
                assert not rem
                mult += 1
            if mult:
                roots.append((cand, mult))
    return sorted(roots)


# -- Sturm sequences and real-root isolation --------------------------------

def sturm_sequence(p: Sequence[Fraction]) -> list[Upoly]:
    seq = [unormalize(p), uderive(p)]
    while seq[-1]:
        _, r = udivmod(seq[-2], seq[-1])
        if not r:
            break
        seq.append(uneg(r))
    return [s for s in seq if s]


def _sign_variations(values: list[Fraction]) -> int:
    signs = [1 if v > 0 else -1 for v in values if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def sturm_count(seq: list[Upoly], a: Fraction, b: Fraction) -> int:
    """Number of distinct real roots in the half-open interval ``(a, b]``
    of the squarefree polynomial whose Sturm sequence is ``seq``."""
    va = _sign_variations([ueval(s, a) for s in seq])
    vb = _sign_variations([ueval(s, b) for s in seq])
    return va - vb


def count_real_roots_interval(p: Sequence[Fraction], a: Fraction, b: Fraction) -> int:
    """Distinct real roots of ``p`` in ``(a, b]`` (via the squarefree part)."""
    ps = usquarefree_part(p)
    if udeg(ps) < 1:
        return 0
    return sturm_count(sturm_sequence(ps), Q(a), Q(b))


def root_bound(p: Sequence[Fraction]) -> Fraction:
    """Cauchy bound: all complex roots have modulus < the returned value."""
    p = unormalize(p)
    if udeg(p) < 1:
        return Fraction(1)
    lead = abs(p[-1])
    return 1 + max(abs(c) / lead for c in p[:-1]) if len(p) > 1 else Fraction(1)


def isolate_real_roots(p: Sequence[Fraction]) -> list[tuple[Fraction, Fraction]]:
    """Disjoint isolating intervals for the distinct real roots of ``p``.

    Each returned pair ``(lo, hi)`` contains exactly one distinct real root;
    a rational root found exactly is returned as a point interval
    ``(r, r)``.  Intervals are sorted increasingly.
    """
    ps = usquarefree_part(p)
    if udeg(ps) < 1:
        return []
    seq = sturm_sequence(ps)
    bound = root_bound(ps)
    out: list[tuple[Fraction, Fraction]] = []

    def recurse(lo: Fraction, hi: Fraction, n_roots: int) -> None:
        if n_roots == 0:
            return
        if n_roots == 1:
            out.append((lo, hi))
            return
        mid = (lo + hi) / 2
        if ueval(ps, mid) == 0:
            out.append((mid, mid))
            eps = (hi - lo) / 4
            left_hi, right_lo = mid - eps, mid + eps
            while ueval(ps, left_hi) == 0:
                left_hi = (lo + left_hi) / 2
            while ueval(ps, right_lo) == 0:
                right_lo = (right_lo + hi) / 2
            recurse(lo, left_hi, sturm_count(seq, lo, left_hi))
            recurse(right_lo, hi, sturm_count(seq, right_lo, hi))
        else:
            recurse(lo, mid, sturm_count(seq, lo, mid))
            recurse(mid, hi, sturm_count(seq, mid, hi))

    recurse(-bound, bound, sturm_count(seq, -bound, bound))
    return sorted(out, key=lambda iv: iv[0])


def refine_root(p: Sequence[Fraction], lo: Fraction, hi: Fraction, width: Fraction) -> tuple[Fraction, Fraction]:
    """Shrink an isolating interval of ``p`` (squarefree on the interval)
    below ``width`` by exact bisection."""
    ps = usquarefree_part(p)
    if lo == hi:
        return lo, hi
    flo = ueval(ps, lo)
    if flo == 0:
        return lo, lo
    fhi = ueval(ps, hi)
    if fhi == 0:
        return hi, hi
    if (flo > 0) == (fhi > 0):
        # single root strictly inside with equal endpoint signs cannot happen
        # for a squarefree isolating interval
        raise ValueError("interval endpoints do not bracket a sign change")
    while hi - lo > width:
        mid = (lo + hi) / 2
        fmid = ueval(ps, mid)
        if fmid == 0:
            return mid, mid
        if (fmid > 0) == (flo > 0):
            lo, flo = mid, fmid
        else:
            hi = mid
    return lo, hi


# ---------------------------------------------------------------------------
# roots in a disk: Moebius map to a half-plane + Routh table
# ---------------------------------------------------------------------------

def _binomial_shift(p: Sequence[Fraction], r: Fraction) -> Upoly:
    """Coefficients of ``q(w) = (1-w)^n p(r (1+w)/(1-w))`` with ``n = deg p``."""
    n = udeg(p)
    one_plus = [Fraction(1), Fraction(1)]
    one_minus = [Fraction(1), Fraction(-1)]
    # precompute powers
    plus_pow: list[Upoly] = [[Fraction(1)]]
    minus_pow: list[Upoly] = [[Fraction(1)]]
    for _ in range(n):
        plus_pow.append(umul(plus_pow[-1], one_plus))
        minus_pow.append(umul(minus_pow[-1], one_minus))
    acc: Upoly = []
    rk = Fraction(1)
    for k in range(n + 1):
        ck = p[k] * rk
        if ck != 0:
            acc = uadd(acc, uscale(umul(plus_pow[k], minus_pow[n - k]), ck))
        rk *= r
    return acc


def _routh_rhp_count(p: Sequence[Fraction]) -> int:
    """Number of roots of ``p`` in the open right half-plane, with
    multiplicity, by the Routh table over exact rationals.

    Raises :class:`IllConditioned` on any degenerate table (which, with
    exact arithmetic, happens only when roots lie on the imaginary axis or
    in symmetric pairs ±w)."""
    p = unormalize(p)
    n = udeg(p)
    if n <= 0:
        return 0
    coeffs = list(reversed(p))  # leading first
    row0 = coeffs[0::2]
    row1 = coeffs[1::2]
    width = len(row0)
    row1 += [Fraction(0)] * (width - len(row1))
    first_col = [row0[0]]
    for _ in range(n):
        if all(c == 0 for c in row1):
            raise IllConditioned("degenerate table: symmetric or boundary roots")
        if row1[0] == 0:
            raise IllConditioned("zero pivot: boundary roots suspected")
        first_col.append(row1[0])
        nxt = []
        for i in range(width - 1):
            a = row0[i + 1] if i + 1 < len(row0) else Fraction(0)
            b = row1[i + 1] if i + 1 < len(row1) else Fraction(0)
            nxt.append((row1[0] * a - row0[0] * b) / row1[0])
        nxt.append(Fraction(0))
        row0, row1 = row1, nxt
        if len(first_col) == n + 1:
            break
    return _sign_variations(first_col)


def count_roots_in_disk(p: Sequence[Fraction], r: Fraction) -> int:
    """Number of complex roots (with multiplicity) of ``p`` in ``|z| < r``.

    Exact: raises :class:`IllConditioned` whenever a root lies on (or the
    method cannot exclude that it lies on) the boundary circle.
    """
    p = unormalize(p)
    n = udeg(p)
    if n <= 0:
        return 0
    if ueval(p, r) == 0 or ueval(p, -r) == 0:
        raise IllConditioned("real root on the boundary circle")
    q = _binomial_shift(p, Q(r))
    if udeg(q) < n:
        raise IllConditioned("degree drop under the disk transform")
    # roots of p in |z|<r  <->  roots of q in Re w < 0  <->  RHP roots of q(-w)
    q_neg = [c if i % 2 == 0 else -c for i, c in enumerate(q)]
    return _routh_rhp_count(q_neg)


# ---------------------------------------------------------------------------
# exact bivariate polynomials (dict representation)
# ---------------------------------------------------------------------------

def xnormal(d: Xpoly) -> Xpoly:
    return {k: v for k, v in d.items() if v != 0}


def xadd(a: Xpoly, b: Xpoly) -> Xpoly:
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, Fraction(0)) + v
    return xnormal(out)


def xsub(a: Xpoly, b: Xpoly) -> Xpoly:
    return xadd(a, {k: -v for k, v in b.items()})


def xmul(a: Xpoly, b: Xpoly) -> Xpoly:
    out: Xpoly = {}
    for (i1, j1), v1 in a.items():
        for (i2, j2), v2 in b.items():
            k = (i1 + i2, j1 + j2)
            out[k] = out.get(k, Fraction(0)) + v1 * v2
    return xnormal(out)


def xscale(a: Xpoly, s: Fraction | int) -> Xpoly:
    s = Q(s)
    return xnormal({k: v * s for k, v in a.items()})


def xeval(a: Xpoly, x: Fraction | int, y: Fraction | int) -> Fraction:
    x, y = Q(x), Q(y)
    return sum((v * x**i * y**j for (i, j), v in a.items()), Fraction(0))


def xdeg(a: Xpoly, axis: int | None = None) -> int:
    """Total degree (axis=None) or degree in one variable; -1 for zero."""
    if not a:
        return -1
    if axis is None:
        return max(i + j for (i, j) in a)
    return max(k[axis] for k in a)


def x_restrict(a: Xpoly, axis: int) -> Upoly:
    """Restriction to an axis: axis=0 gives ``a(x, 0)`` as a upoly in x;
    axis=1 gives ``a(0, y)``."""
    out: dict[int, Fraction] = {}
    for (i, j), v in a.items():
        if axis == 0 and j == 0:
            out[i] = out.get(i, Fraction(0)) + v
        elif axis == 1 and i == 0:
            out[j] = out.get(j, Fraction(0)) + v
    if not out:
        return []
    coeffs = [Fraction(0)] * (max(out) + 1)
    for d, v in out.items():
        coeffs[d] = v
    return unormalize(coeffs)


def x_shift_divide(a: Xpoly, axis: int) -> Xpoly:
    """Exact division by x (axis=0) or y (axis=1); requires divisibility."""
    out: Xpoly = {}
    for (i, j), v in a.items():
        if axis == 0:
            if i == 0:
                raise ValueError("not divisible by x")
            out[(i - 1, j)] = v
        else:
            if j == 0:
                raise ValueError("not divisible by y")
            out[(i, j - 1)] = v
    return out


def x_to_ycoeffs(a: Xpoly) -> list[Upoly]:
    """Write ``a`` as a polynomial in y with upoly-in-x coefficients."""
    dy = xdeg(a, 1)
    if dy < 0:
        return []
    rows: list[dict[int, Fraction]] = [dict() for _ in range(dy + 1)]
    for (i, j), v in a.items():
        rows[j][i] = v
    out: list[Upoly] = []
    for row in rows:
        if row:
            coeffs = [Fraction(0)] * (max(row) + 1)
            for d, v in row.items():
                coeffs[d] = v
            out.append(unormalize(coeffs))
        else:
            out.append([])
    return out


def x_from_ycoeffs(rows: list[Upoly]) -> Xpoly:
    out: Xpoly = {}
    for j, row in enumerate(rows):
        for i, v in enumerate(row):
            if v != 0:
                out[(i, j)] = v
    return out


def xswap(a: Xpoly) -> Xpoly:
    return {(j, i): v for (i, j), v in a.items()}


# -- bivariate gcd via primitive pseudo-remainder Euclid ----------------------

def _y_content(rows: list[Upoly]) -> Upoly:
    g: Upoly = []
    for row in rows:
        g = ugcd(g, row)
        if udeg(g) == 0:
            return [Fraction(1)]
    return g if g else []


def _y_primitive(rows: list[Upoly]) -> tuple[Upoly, list[Upoly]]:
    cont = _y_content(rows)
    if not cont or udeg(cont) == 0:
        return ([Fraction(1)], [list(r) for r in rows])
    out = []
    for row in rows:
        if row:
            q, rem = udivmod(row, cont)
            assert not rem
            out.append(q)
        else:
            out.append([])
    return cont, out


def _y_pseudo_rem(f: list[Upoly], g: list[Upoly]) -> list[Upoly]:
    """Pseudo-remainder of f by g as polynomials in y over Q[x]."""
    df, dg = len(f) - 1, len(g) - 1
    lead_g = g[-1]
    rem = [list(r) for r in f]
    while len(rem) - 1 >= dg and any(rem[-1]):
        shift = len(rem) - 1 - dg
        lead_r = rem[-1]
        rem = [umul(r, lead_g) for r in rem]
        for k in range(dg + 1):
            rem[shift + k] = usub(rem[shift + k], umul(lead_r, g[k]))
        while rem and not rem[-1]:
            rem.pop()
    return rem


def xgcd(a: Xpoly, b: Xpoly) -> Xpoly:
    """gcd over Q[x, y], normalised so the leading coefficient (in the
    graded-lex leading term) is 1.  gcd(0, b) = b."""
    a, b = xnormal(a), xnormal(b)
    if not a:
        return _xmonic(b)
    if not b:
        return _xmonic(a)
    # ensure both have positive y-degree handling: treat as polys in y over Q[x]
    fa, fb = x_to_ycoeffs(a), x_to_ycoeffs(b)
    if len(fa) == 1 and len(fb) == 1:
        return _xmonic(x_from_ycoeffs([ugcd(fa[0], fb[0])]))
    if len(fa) == 1:
        cont_b = _y_content(fb)
        return _xmonic(x_from_ycoeffs([ugcd(fa[0], cont_b)]))
    if len(fb) == 1:
        cont_a = _y_content(fa)
        return _xmonic(x_from_ycoeffs([ugcd(fb[0], cont_a)]))
    cont_a, prim_a = _y_primitive(fa)
    cont_b, prim_b = _y_primitive(fb)
    cont_gcd = ugcd(cont_a, cont_b)
    f, g = prim_a, prim_b
    if len(f) < len(g):
        f, g = g, f
    while True:
        r = _y_pseudo_rem(f, g)
        if not any(any(row) for row in r):
            break
        _, r = _y_primitive(r)
        f, g = g, r
        if len(g) == 1:
            break
    if len(g) == 1 and udeg(g[0]) == 0:
        prim_gcd: list[Upoly] = [[Fraction(1)]]
    else:
        _, prim = _y_primitive(g)
        prim_gcd = prim
    result = xmul(x_from_ycoeffs(prim_gcd), x_from_ycoeffs([cont_gcd]))
    return _xmonic(result)


def _xmonic(a: Xpoly) -> Xpoly:
    if not a:
        return {}
    lead_key = max(a, key=lambda k: (k[0] + k[1], k[0]))
    return xscale(a, Fraction(1) / a[lead_key])


# -- resultants ----------------------------------------------------------------

def _sylvester_det_at(fa: list[Upoly], fb: list[Upoly], x0: Fraction) -> Fraction:
    """Determinant of the Sylvester matrix (in y) of two bivariate
    polynomials, with the x-variable specialised to ``x0``.

    Rows are rescaled to integers and the determinant is taken by
    fraction-free Bareiss elimination (exact integer arithmetic avoids the
    coefficient blow-up of rational pivoting)."""
    m, n = len(fa) - 1, len(fb) - 1
    size = m + n
    if size == 0:
        return Fraction(1)
    a_vals = [ueval(c, x0) for c in fa]
    b_vals = [ueval(c, x0) for c in fb]
    rows_q: list[list[Fraction]] = []
    for row in range(n):
        line = [Fraction(0)] * size
        for k, v in enumerate(reversed(a_vals)):
            line[row + k] = v
        rows_q.append(line)
    for row in range(m):
        line = [Fraction(0)] * size
        for k, v in enumerate(reversed(b_vals)):
            line[row + k] = v
        rows_q.append(line)
    scale = Fraction(1)
    mat: list[list[int]] = []
    for line in rows_q:
        den = 1
        for v in line:
            if v:
                den = den * v.denominator // gcd(den, v.denominator)
        scale *= den
        mat.append([int(v * den) for v in line])
    det_sign = 1
    prev = 1
    for col in range(size):
        pivot = None
        for r in range(col, size):
            if mat[r][col]:
                pivot = r
                break
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            mat[col], mat[pivot] = mat[pivot], mat[col]
            det_sign = -det_sign
        pv = mat[col][col]
        for r in range(col + 1, size):
            row_r = mat[r]
            head = row_r[col]
            row_c = mat[col]
            for k in range(col + 1, size):
                row_r[k] = (pv * row_r[k] - head * row_c[k]) // prev
            row_r[col] = 0
        prev = pv
    return Fraction(det_sign * mat[size - 1][size - 1], 1) / scale


def _lagrange_interpolate(points: list[tuple[Fraction, Fraction]]) -> Upoly:
    acc: Upoly = []
    for i, (xi, yi) in enumerate(points):
        if yi == 0:
            continue
        num: Upoly = [Fraction(1)]
        den = Fraction(1)
        for j, (xj, _) in enumerate(points):
            if j == i:
                continue
            num = umul(num, [-xj, Fraction(1)])
            den *= xi - xj
        acc = uadd(acc, uscale(num, yi / den))
    return acc


def resultant_y(a: Xpoly, b: Xpoly) -> Upoly:
    """``Res_y(a, b)`` as an exact polynomial in x, by evaluation and
    Lagrange interpolation of the Sylvester determinant."""
    a, b = xnormal(a), xnormal(b)
    if not a or not b:
        return []
    fa, fb = x_to_ycoeffs(a), x_to_ycoeffs(b)
    if len(fa) == 1:
        # Res_y(a(x), b) = a(x)^{deg_y b}
        out: Upoly = [Fraction(1)]
        for _ in range(len(fb) - 1):
            out = umul(out, fa[0])
        return out
    if len(fb) == 1:
        out = [Fraction(1)]
        for _ in range(len(fa) - 1):
            out = umul(out, fb[0])
        return out
    row_bound = (len(fa) - 1) * max(xdeg(b, 0), 0) + (len(fb) - 1) * max(xdeg(a, 0), 0)
    bezout_bound = xdeg(a) * xdeg(b)
    deg_bound = min(row_bound, bezout_bound)
    samples = deg_bound + 1
    xs: list[Fraction] = [Fraction(0)]
    k = 1
    while len(xs) < samples:
        xs.append(Fraction(k))
        if len(xs) < samples:
            xs.append(Fraction(-k))
        k += 1
    points = [(x0, _sylvester_det_at(fa, fb, x0)) for x0 in xs]
    out = _lagrange_interpolate(points)
    if deg_bound == bezout_bound and bezout_bound < row_bound:
        # the sharper bound counts affine intersections; confirm it held
        probe = Fraction(deg_bound + 1)
        if ueval(out, probe) != _sylvester_det_at(fa, fb, probe):
            raise IllConditioned("resultant interpolation bound violated")
    return out


def resultant_x(a: Xpoly, b: Xpoly) -> Upoly:
    """``Res_x(a, b)`` as an exact polynomial in y."""
    return resultant_y(xswap(a), xswap(b))


def resultant_univariate(p: Sequence[Fraction], q: Sequence[Fraction]) -> Fraction:
    """Resultant of two univariate polynomials (Sylvester determinant)."""
    fa = [[c] if c != 0 else [] for c in p]
    fb = [[c] if c != 0 else [] for c in q]
    if not fa or not fb:
        return Fraction(0)
    return _sylvester_det_at(fa, fb, Fraction(0))
