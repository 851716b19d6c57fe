"""Graph surfaces: fundamental forms, curvature-line equation, causal types.

The sympy oracle below rebuilds everything from the embedding: metric
coefficients from the ambient inner product, and the unnormalised second
form from scalar triple products (which are signature-independent up to the
chosen co-orientation).
"""

from __future__ import annotations

from fractions import Fraction

import pytest
import sympy as sp

from conftest import jp, patch
from umbilics.errors import NoNonzeroMetricCoefficient, SpecError
from umbilics.jets import JetPoly
from umbilics.surfaces import (
    BdeGerm,
    FundamentalForms,
    causal_type_at_origin,
    detect_umbilic,
    fundamental_forms,
    monge_patch,
    principal_bde,
    special_curves,
    unit_branch_pair,
)

X, Y = sp.symbols("x y")
Q = Fraction


def jet_to_sympy(f: JetPoly):
    return sp.expand(sum(sp.Rational(c) * X**i * Y**j
                         for (i, j), c in f.coeff_dict().items()))


def truncate(expr, order: int):
    poly = sp.Poly(sp.expand(expr), X, Y)
    return sp.expand(sum(c * X**i * Y**j for (i, j), c in poly.terms()
                         if i + j <= order))


def oracle_forms(ambient: str, axis: str, f_expr):
    """E, F, G from the ambient inner product; lbar, mbar, nbar as the
    scalar triple products det[second derivative; r_u; r_v]."""
    if axis == "z":
        r = sp.Matrix([X, Y, f_expr])
    else:
        r = sp.Matrix([X, f_expr, Y])
    sig = sp.diag(1, 1, 1) if ambient == "euclidean" else sp.diag(1, 1, -1)
    ru, rv = r.diff(X), r.diff(Y)
    inner = lambda a, b: (a.T * sig * b)[0, 0]
    E, F, G = inner(ru, ru), inner(ru, rv), inner(rv, rv)
    second = []
    for ab in (r.diff(X, 2), r.diff(X, 1, Y, 1), r.diff(Y, 2)):
        second.append(sp.Matrix([ab.T, ru.T, rv.T]).det())
    return (sp.expand(E), sp.expand(F), sp.expand(G),
            *[sp.expand(s) for s in second])


SAMPLE_F = (X**2 / 2 + 3 * Y**2 / 2 + X**3 - X * Y**2 + Y**4 / 4,
            X * Y + X**3 / 3 + Y**3)

CHARTS = [("euclidean", "z"), ("minkowski", "z"), ("minkowski", "y")]


@pytest.mark.parametrize("ambient,axis", CHARTS)
@pytest.mark.parametrize("f_expr", SAMPLE_F)
def test_forms_match_embedding_oracle(ambient, axis, f_expr):
    poly = sp.Poly(f_expr, X, Y)
    coeffs = {m: Q(int(sp.numer(c)), int(sp.denom(c)))
              for m, c in poly.terms()}
    p = monge_patch(ambient, axis, coeffs, order=6)
    forms = fundamental_forms(p)
    want = oracle_forms(ambient, axis, f_expr)
    got = (forms.E, forms.F, forms.G, forms.lbar, forms.mbar, forms.nbar)
    for g, w in zip(got, want):
        assert jet_to_sympy(g) == truncate(w, g.order), (ambient, axis)


@pytest.mark.parametrize("ambient,axis", CHARTS)
def test_equation_coefficients_satisfy_metric_relation(ambient, axis):
    p = patch(ambient, axis,
              {(2, 0): Q(1, 2), (1, 1): 1, (0, 2): Q(-1, 3),
               (3, 0): 1, (2, 1): -2, (0, 3): Q(1, 5)}, order=6)
    forms = fundamental_forms(p)
    w = principal_bde(forms)
    # a = F n - G m, b = E n - G l, c = E m - F l, hence E a - F b + G c = 0
    assert w.a == forms.F * forms.nbar - forms.G * forms.mbar
    assert w.b == forms.E * forms.nbar - forms.G * forms.lbar
    assert w.c == forms.E * forms.mbar - forms.F * forms.lbar
    zero = forms.E * w.a - forms.F * w.b + forms.G * w.c
    assert zero.is_zero()


def test_special_curves_are_metric_degeneracy_and_discriminant():
    p = patch("minkowski", "z", {(2, 0): 1, (1, 1): 2, (0, 3): 1}, order=6)
    forms = fundamental_forms(p)
    w = principal_bde(p)
    ld, disc_a, disc_b = special_curves(p)
    assert ld == forms.F * forms.F - forms.E * forms.G
    assert disc_a == w.b * w.b - w.a * w.c * 4
    assert disc_a == disc_b


def test_causal_types_at_origin():
    assert causal_type_at_origin(
        patch("minkowski", "z", {(2, 0): 1})) == "spacelike"
    assert causal_type_at_origin(
        patch("minkowski", "y", {(2, 0): 1})) == "timelike"
    light = patch("minkowski", "z",
                  {(1, 0): Q(3, 5), (0, 1): Q(4, 5), (3, 0): Q(1, 3)})
    assert causal_type_at_origin(light) == "lightlike"
    assert causal_type_at_origin(patch("euclidean", "z", {(2, 0): 1})) == "spacelike"


def test_detect_umbilic():
    # rotationally symmetric 2-jet: every direction principal
    flag, causal = detect_umbilic(
        patch("euclidean", "z", {(2, 0): Q(1, 2), (0, 2): Q(1, 2), (3, 0): 1}))
    assert flag and causal == "spacelike"
    flag, _ = detect_umbilic(patch("euclidean", "z", {(2, 0): 1, (0, 2): -1}))
    assert not flag


def test_euclidean_y_graph_rejected():
    with pytest.raises(SpecError):
        patch("euclidean", "y", {(2, 0): 1})


def test_patch_validation():
    with pytest.raises(SpecError):
        patch("euclidean", "z", {(0, 0): 1})  # not through the origin
    with pytest.raises(SpecError):
        patch("galilean", "z", {(2, 0): 1})
    with pytest.raises(SpecError):
        patch("euclidean", "w", {(2, 0): 1})
    with pytest.raises(SpecError):
        monge_patch("euclidean", "z", {(8, 0): 1}, order=5)


def test_unit_branch_pair_selection():
    p = patch("euclidean", "z", {(2, 0): Q(1, 2), (0, 2): Q(1, 2), (3, 0): 1})
    forms = fundamental_forms(p)
    w = principal_bde(forms)
    assert unit_branch_pair(w, forms) == (w.b, w.c)

    # synthetic forms exercising the fallback chain
    order = 4
    z = JetPoly({}, order)
    one = JetPoly({(0, 0): 1}, order)
    x = JetPoly({(1, 0): 1}, order)
    wg = BdeGerm(x, x, x)
    f2 = FundamentalForms(z, one, one, x, x, x)
    assert unit_branch_pair(wg, f2) == (wg.a, wg.c)
    f3 = FundamentalForms(z, z, one, x, x, x)
    assert unit_branch_pair(wg, f3) == (wg.a, wg.b)
    f4 = FundamentalForms(z, z, z, x, x, x)
    with pytest.raises(NoNonzeroMetricCoefficient):
        unit_branch_pair(wg, f4)


def test_bde_mirrored_swaps_variable_roles():
    w = BdeGerm(jp({(1, 0): 1}), jp({(0, 1): 2}), jp({(2, 1): 3}))
    m = w.mirrored()
    assert m.a.coeff_dict() == {(1, 2): Q(3)}
    assert m.b.coeff_dict() == {(1, 0): Q(2)}
    assert m.c.coeff_dict() == {(0, 1): Q(1)}
    # mirroring twice restores the equation
    mm = m.mirrored()
    assert (mm.a, mm.b, mm.c) == (w.a, w.b, w.c)


def test_lightlike_ladder_forms_are_degenerate_at_origin_only_in_metric():
    light = patch("minkowski", "z",
                  {(1, 0): Q(3, 5), (0, 1): Q(4, 5), (3, 0): Q(1, 3),
                   (0, 3): Q(1, 3)})
    forms = fundamental_forms(light)
    E0, F0, G0 = forms.metric_at_origin()
    assert F0 * F0 - E0 * G0 == 0
    assert (E0, G0) != (0, 0)
