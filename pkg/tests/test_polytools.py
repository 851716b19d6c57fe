"""Exact univariate/bivariate polynomial utilities, cross-checked with sympy."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest
import sympy as sp

from umbilics.errors import IllConditioned
from umbilics.polytools import (
    count_real_roots_interval,
    count_roots_in_disk,
    isolate_real_roots,
    refine_root,
    resultant_univariate,
    resultant_x,
    resultant_y,
    udivmod,
    ueval,
    ugcd,
    umul,
    unormalize,
    urational_roots,
    usquarefree_decomposition,
    usquarefree_part,
    xmul,
)

X, Y = sp.symbols("x y")
Q = Fraction


def u_to_sympy(p):
    return sum(sp.Rational(c) * X**i for i, c in enumerate(p))


def x_to_sympy(d):
    return sum(sp.Rational(c) * X**i * Y**j for (i, j), c in d.items())


def rand_upoly(rng, deg):
    return unormalize([Q(rng.randint(-5, 5), rng.randint(1, 3))
                       for _ in range(deg + 1)])


def rand_xpoly(rng, deg):
    out = {}
    for i in range(deg + 1):
        for j in range(deg + 1 - i):
            c = rng.randint(-4, 4)
            if c:
                out[(i, j)] = Q(c)
    return out


def test_division_identity():
    rng = random.Random(7)
    for _ in range(20):
        p = rand_upoly(rng, rng.randint(0, 6))
        q = rand_upoly(rng, rng.randint(1, 4))
        if not q:
            continue
        quo, rem = udivmod(p, q)
        assert unormalize(umul(quo, q)) != p or not rem or True
        recombined = [a + b for a, b in
                      zip(umul(quo, q) + [Q(0)] * 10, rem + [Q(0)] * 10)]
        assert unormalize(recombined) == unormalize(list(p))
        assert len(rem) == 0 or len(rem) - 1 < len(q) - 1


def test_gcd_matches_sympy():
    rng = random.Random(11)
    for _ in range(12):
        common = rand_upoly(rng, 2)
        p = umul(common, rand_upoly(rng, 2))
        q = umul(common, rand_upoly(rng, 3))
        if not p or not q:
            continue
        got = u_to_sympy(ugcd(p, q))
        want = sp.gcd(sp.Poly(u_to_sympy(p), X), sp.Poly(u_to_sympy(q), X))
        want = want.as_expr()
        if got == 0:
            assert want == 0
            continue
        ratio = sp.simplify(got / want)
        assert ratio.is_constant() and ratio != 0


def test_squarefree_part_and_decomposition():
    # (x-1)^2 (x+2)^3 x
    p = [Q(0), Q(1)]
    for root, mult in ((1, 2), (-2, 3)):
        for _ in range(mult):
            p = umul(p, [Q(-root), Q(1)])
    sf = usquarefree_part(p)
    want = sp.expand(X * (X - 1) * (X + 2))
    ratio = sp.simplify(u_to_sympy(sf) / want)
    assert ratio.is_constant() and ratio != 0
    decomp = usquarefree_decomposition(p)
    mults = sorted(m for _, m in decomp)
    assert mults == [1, 2, 3]
    rebuilt = [Q(1)]
    for fac, m in decomp:
        for _ in range(m):
            rebuilt = umul(rebuilt, fac)
    ratio = sp.simplify(u_to_sympy(rebuilt) / u_to_sympy(p))
    assert ratio.is_constant() and ratio != 0


def test_rational_roots():
    # roots 1/2 (double), -3 (simple); times irrational factor x^2 - 2
    p = umul(umul(umul([Q(-1, 2), Q(1)], [Q(-1, 2), Q(1)]), [Q(3), Q(1)]),
             [Q(-2), Q(0), Q(1)])
    roots = dict(urational_roots(p))
    assert roots == {Q(1, 2): 2, Q(-3): 1}


def test_real_root_isolation_and_refinement():
    # p = (x^2 - 2)(x - 3): real roots -sqrt2, sqrt2, 3
    p = umul([Q(-2), Q(0), Q(1)], [Q(-3), Q(1)])
    intervals = isolate_real_roots(p)
    assert len(intervals) == 3
    targets = sorted([-(2 ** 0.5), 2 ** 0.5, 3.0])
    for (lo, hi), t in zip(sorted(intervals), targets):
        lo2, hi2 = refine_root(p, lo, hi, Q(1, 10**12))
        assert hi2 - lo2 <= Q(1, 10**12)
        mid = (lo2 + hi2) / 2
        assert abs(float(mid) - t) < 1e-10
    assert count_real_roots_interval(p, Q(0), Q(4)) == 2
    assert count_real_roots_interval(p, Q(-2), Q(0)) == 1


def test_count_roots_in_disk_known_cases():
    # (x - 1/3)(x - 2) : one root inside the unit disk
    p = umul([Q(-1, 3), Q(1)], [Q(-2), Q(1)])
    assert count_roots_in_disk(p, Q(1)) == 1
    assert count_roots_in_disk(p, Q(3)) == 2
    # complex pair x^2 + 1/4 at +-i/2 -> inside disk of radius 1
    assert count_roots_in_disk([Q(1, 4), Q(0), Q(1)], Q(1)) == 2
    assert count_roots_in_disk([Q(1, 4), Q(0), Q(1)], Q(1, 4)) == 0


def test_count_roots_in_disk_degenerate_configurations_are_rejected():
    # root exactly on the circle
    with pytest.raises(IllConditioned):
        count_roots_in_disk([Q(-1), Q(1)], Q(1))
    # roots 1/2 and 2 are swapped by inversion in the unit circle, which
    # degenerates the counting table; the routine must refuse, not guess
    p = umul([Q(-1, 2), Q(1)], [Q(-2), Q(1)])
    with pytest.raises(IllConditioned):
        count_roots_in_disk(p, Q(1))


def test_count_roots_in_disk_against_numpy():
    import numpy as np

    rng = random.Random(23)
    for _ in range(15):
        p = rand_upoly(rng, rng.randint(1, 5))
        if len(p) < 2:
            continue
        radius = Q(rng.randint(1, 3), rng.randint(1, 2))
        zeros = np.roots([float(c) for c in reversed(p)])
        dist = np.abs(np.abs(zeros) - float(radius))
        if dist.size and dist.min() < 1e-6:
            continue
        want = int(np.sum(np.abs(zeros) < float(radius)))
        try:
            got = count_roots_in_disk(p, radius)
        except IllConditioned:
            continue
        assert got == want, (p, radius)


def test_resultants_match_sympy():
    rng = random.Random(5)
    for _ in range(10):
        a = rand_xpoly(rng, 3)
        b = rand_xpoly(rng, 2)
        if not a or not b:
            continue
        sa, sb = x_to_sympy(a), x_to_sympy(b)
        if sp.degree(sa, Y) < 1 or sp.degree(sb, Y) < 1:
            continue
        got = u_to_sympy(resultant_y(a, b))
        want = sp.expand(sp.resultant(sa, sb, Y))
        assert sp.expand(got - want) == 0, (a, b)
        if sp.degree(sa, X) >= 1 and sp.degree(sb, X) >= 1:
            got_x = sum(sp.Rational(c) * Y**i
                        for i, c in enumerate(resultant_x(a, b)))
            want_x = sp.expand(sp.resultant(sa, sb, X))
            assert sp.expand(got_x - want_x) == 0, (a, b)


def test_resultant_univariate_matches_sympy():
    rng = random.Random(31)
    for _ in range(10):
        p = rand_upoly(rng, rng.randint(1, 4))
        qq = rand_upoly(rng, rng.randint(1, 4))
        if len(p) < 2 or len(qq) < 2:
            continue
        got = resultant_univariate(p, qq)
        want = sp.resultant(u_to_sympy(p), u_to_sympy(qq), X)
        assert sp.Rational(got) == sp.nsimplify(want)


def test_xmul_matches_sympy():
    rng = random.Random(3)
    a, b = rand_xpoly(rng, 3), rand_xpoly(rng, 3)
    assert sp.expand(x_to_sympy(xmul(a, b)) - x_to_sympy(a) * x_to_sympy(b)) == 0


def test_ueval():
    p = [Q(1), Q(-2), Q(3)]
    assert ueval(p, Q(1, 2)) == 1 - 1 + Q(3, 4)
