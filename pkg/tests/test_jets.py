"""Truncated bivariate polynomial arithmetic over exact rationals."""

from __future__ import annotations

from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from umbilics.errors import NonOriginPreserving
from umbilics.jets import (
    DEFAULT_ORDER,
    JetPoly,
    jet,
    jet_const,
    jet_x,
    jet_y,
)

X, Y = sp.symbols("x y")


def to_sympy(f: JetPoly):
    return sp.expand(sum(sp.Rational(c) * X**i * Y**j
                         for (i, j), c in f.coeff_dict().items()))


def from_sympy(expr, order: int) -> JetPoly:
    poly = sp.Poly(sp.expand(expr), X, Y)
    coeffs = {}
    for (i, j), c in poly.terms():
        if i + j <= order:
            coeffs[(i, j)] = Fraction(int(sp.numer(c)), int(sp.denom(c)))
    return JetPoly(coeffs, order)


def test_constructor_truncates_and_drops_zeros():
    f = JetPoly({(0, 0): 1, (5, 5): 7, (1, 0): 0}, order=4)
    assert f.coeff_dict() == {(0, 0): Fraction(1)}
    assert f.order == 4


def test_arithmetic_matches_sympy():
    f = jet({(1, 0): 2, (0, 1): Fraction(-1, 3), (2, 1): 5}, order=6)
    g = jet({(0, 0): 1, (1, 1): Fraction(7, 2), (3, 0): -2}, order=6)
    fs, gs = to_sympy(f), to_sympy(g)
    assert to_sympy(f + g) == sp.expand(fs + gs)
    assert to_sympy(f - g) == sp.expand(fs - gs)
    assert to_sympy(-f) == sp.expand(-fs)
    prod = f * g
    truncated = sum(t for t in sp.expand(fs * gs).as_ordered_terms()
                    if sp.Poly(t, X, Y).total_degree() <= 6)
    assert to_sympy(prod) == sp.expand(truncated)
    assert to_sympy(f * 3 + g * Fraction(1, 2)) == sp.expand(3 * fs + gs / 2)


def test_power_and_scalar_division():
    f = jet({(1, 0): 1, (0, 1): 1}, order=5)
    assert to_sympy(f**3) == sp.expand((X + Y) ** 3)
    assert (f / 2).coefficient(1, 0) == Fraction(1, 2)
    with pytest.raises(ZeroDivisionError):
        f / 0


def test_derive_both_variables():
    f = jet({(3, 2): Fraction(5, 4), (0, 4): 1}, order=6)
    fx, fy = f.derive("u"), f.derive("v")
    assert to_sympy(fx) == sp.diff(to_sympy(f), X)
    assert to_sympy(fy) == sp.diff(to_sympy(f), Y)
    # both naming schemes address the same variables
    assert f.derive("x") == fx and f.derive("y") == fy


def test_derive_lowers_order_by_one():
    f = jet({(3, 0): 1}, order=3)
    assert f.derive("u").order == 2


def test_compose_matches_sympy_substitution():
    order = 6
    f = jet({(2, 0): 1, (1, 1): -3, (0, 3): Fraction(1, 2)}, order)
    u = jet({(1, 0): 1, (0, 1): 2, (2, 0): -1}, order)
    v = jet({(0, 1): 1, (1, 1): Fraction(3, 5)}, order)
    got = f.compose(u, v)
    expected = to_sympy(f).subs({X: to_sympy(u), Y: to_sympy(v)},
                                simultaneous=True)
    assert got == from_sympy(expected, order)


def test_compose_requires_origin_preserving_arguments():
    f = jet_x() * jet_y()
    bad = jet({(0, 0): 1, (1, 0): 1})
    with pytest.raises(NonOriginPreserving):
        f.compose(bad, jet_y())
    with pytest.raises(NonOriginPreserving):
        f.compose(jet_x(), bad)


def test_valuation_jet_homogeneous_part():
    f = jet({(2, 0): 1, (1, 2): 4, (0, 5): -1}, order=6)
    assert f.valuation() == 2
    assert jet_const(0).valuation() is None
    assert f.jet(2).coeff_dict() == {(2, 0): Fraction(1)}
    assert f.homogeneous_part(3).coeff_dict() == {(1, 2): Fraction(4)}
    assert f.homogeneous_part(4).is_zero()


def test_unit_inverse_and_unit_power():
    u = jet({(0, 0): 2, (1, 0): 1, (0, 2): -3}, order=5)
    one = u * u.unit_inverse()
    assert one == jet_const(1, 5)
    v = jet({(0, 0): 1, (1, 0): 1, (0, 2): -3}, order=5)
    half = v.unit_power(Fraction(1, 2))
    assert half * half == v
    with pytest.raises(ZeroDivisionError):
        jet_x().unit_inverse()
    with pytest.raises(ValueError):
        u.unit_power(Fraction(1, 2))


def test_eval_exact_and_float():
    f = jet({(0, 0): 1, (2, 1): Fraction(3, 7)}, order=4)
    assert f.eval(Fraction(1, 2), 2) == 1 + Fraction(3, 7) * Fraction(1, 4) * 2
    assert f.eval_float(0.5, 2.0) == pytest.approx(1 + (3 / 7) * 0.25 * 2)


def test_hashable_and_equality():
    a = jet({(1, 0): 1}, order=4)
    b = jet({(1, 0): 1}, order=4)
    c = jet({(1, 0): 1}, order=5)
    assert a == b and hash(a) == hash(b)
    assert a != c
    assert len({a, b, c}) == 2
    with pytest.raises(Exception):
        a.order = 9  # frozen


small_fraction = st.fractions(min_value=-3, max_value=3, max_denominator=4)
coeff_maps = st.dictionaries(
    st.tuples(st.integers(0, 3), st.integers(0, 3)), small_fraction, max_size=5
)


@settings(max_examples=60, deadline=None)
@given(coeff_maps, coeff_maps, coeff_maps)
def test_ring_laws_hold(fa, fb, fc):
    order = 6
    f, g, h = (JetPoly(m, order) for m in (fa, fb, fc))
    assert f * (g + h) == f * g + f * h
    assert f * g == g * f
    assert (f + g) + h == f + (g + h)
    assert f + JetPoly({}, order) == f


@settings(max_examples=40, deadline=None)
@given(coeff_maps, coeff_maps)
def test_truncation_is_a_ring_morphism(fa, fb):
    f, g = JetPoly(fa, 6), JetPoly(fb, 6)
    k = 3
    assert (f * g).jet(k) == (f.jet(k) * g.jet(k)).jet(k)
    assert (f + g).jet(k) == f.jet(k) + g.jet(k)


def test_default_order_constant():
    assert jet_x().order == DEFAULT_ORDER
