"""Local intersection multiplicity, Milnor numbers, and germ classification."""

from __future__ import annotations

from fractions import Fraction

import pytest

from conftest import jp, run_local_algebra_random_checks
from umbilics.jets import jet_x, jet_y
from umbilics.localalg import (
    INFINITE,
    classify_singularity,
    intersection_multiplicity,
    milnor_number,
    quotient_dimension,
)

Q = Fraction


def test_monomial_pairs():
    for a in range(1, 6):
        for b in range(1, 6):
            f = jp({(a, 0): 1}, order=10)
            g = jp({(0, b): 1}, order=10)
            m = intersection_multiplicity(f, g)
            assert m.is_finite and int(m) == a * b


def test_transverse_lines_and_tangential_pairs():
    assert int(intersection_multiplicity(jet_x(), jet_y())) == 1
    # y - x^2 and y + x^2 meet with multiplicity 2 at the origin
    f = jp({(0, 1): 1, (2, 0): -1})
    g = jp({(0, 1): 1, (2, 0): 1})
    assert int(intersection_multiplicity(f, g)) == 2
    # cusp against its tangent line
    cusp = jp({(0, 2): 1, (3, 0): -1})
    assert int(intersection_multiplicity(cusp, jp({(0, 1): 1}))) == 3


def test_infinite_when_sharing_a_component():
    f = jp({(1, 0): 1}) * jp({(0, 1): 1, (2, 0): 1})
    g = jp({(1, 0): 1}) * jp({(1, 1): 1, (0, 1): 1})
    m = intersection_multiplicity(f, g)
    assert not m.is_finite
    assert m.value == INFINITE


def test_nonvanishing_argument_is_rejected():
    from umbilics.errors import NotAtOrigin

    f = jp({(0, 0): 2, (1, 0): 1})
    with pytest.raises(NotAtOrigin):
        intersection_multiplicity(f, jet_y())


def test_milnor_numbers_of_standard_germs():
    cases = [
        # A_k germs x^2 + y^(k+1)
        *[(jp({(2, 0): 1, (0, k + 1): 1}, order=10), k) for k in range(1, 6)],
        # D_k germs x^2 y + y^(k-1)
        *[(jp({(2, 1): 1, (0, k - 1): 1}, order=10), k) for k in range(4, 8)],
        (jp({(3, 0): 1, (0, 4): 1}, order=10), 6),   # E6
        (jp({(3, 0): 1, (1, 3): 1}, order=10), 7),   # E7
        (jp({(3, 0): 1, (0, 5): 1}, order=10), 8),   # E8
        (jp({(2, 1): 1, (0, 4): -1}, order=10), 5),  # x^2 y - y^4
    ]
    for f, mu in cases:
        got = milnor_number(f)
        assert got.is_finite and int(got) == mu, (f, mu)


def test_milnor_infinite_for_nonisolated():
    f = jp({(2, 0): 1}, order=8)  # x^2: critical locus is the whole y-axis
    assert not milnor_number(f).is_finite


def test_quotient_dimension_monomial_ideal():
    # ideal (x^2, y^3): quotient basis 1, x, y, xy, y^2, xy^2
    gens = [{(2, 0): Q(1)}, {(0, 3): Q(1)}]
    assert quotient_dimension(gens, 6) == 6


def test_classify_singularity_normal_forms():
    assert str(classify_singularity(jp({(2, 0): 1, (0, 2): 1}))) == "A1+"
    assert str(classify_singularity(jp({(2, 0): 1, (0, 2): -1}))) == "A1-"
    assert str(classify_singularity(jp({(2, 0): 1, (0, 3): 1}))) == "A2"
    assert str(classify_singularity(jp({(2, 0): 1, (0, 4): 1}))) == "A3+"
    assert str(classify_singularity(jp({(2, 0): 1, (0, 4): -1}))) == "A3-"
    assert str(classify_singularity(jp({(2, 1): 1, (0, 3): -1}))) == "D4-"
    assert str(classify_singularity(jp({(2, 1): 1, (0, 3): 1}))) == "D4+"
    assert str(classify_singularity(jp({(2, 1): 1, (0, 4): 1}))) == "D5"
    assert str(classify_singularity(jp({(2, 1): 1, (0, 5): 1}))) == "D6+"
    assert str(classify_singularity(jp({(2, 1): 1, (0, 5): -1}))) == "D6-"
    assert str(classify_singularity(jp({(3, 0): 1, (0, 4): 1}))) == "E6"
    assert str(classify_singularity(jp({(3, 0): 1, (1, 3): 1}))) == "E7"
    assert str(classify_singularity(jp({(3, 0): 1, (0, 5): 1}, order=8))) == "E8"


def test_classify_handles_regular_and_degenerate():
    assert classify_singularity(jp({(1, 0): 1})).regular
    smooth_min = classify_singularity(jp({(2, 0): 1, (0, 2): 1, (3, 0): 1}))
    assert smooth_min.A and smooth_min.index == 1
    x4y4 = classify_singularity(jp({(4, 0): 1, (0, 4): 1}, order=9))
    assert x4y4.nonsimple or x4y4.degenerate


def test_classification_is_coordinate_invariant():
    # E7 germ after a linear shear must classify identically
    f = jp({(3, 0): 1, (1, 3): 1}, order=9)
    sheared = f.compose(jp({(1, 0): 1, (0, 1): 1}, 9), jp({(0, 1): 1}, 9))
    assert str(classify_singularity(sheared)) == "E7"
    mu = milnor_number(sheared)
    assert mu.is_finite and int(mu) == 7


def test_randomized_invariance_properties():
    assert run_local_algebra_random_checks(60, seed=99) == 60


def test_multiplicity_result_int_raises_when_infinite():
    f = jp({(1, 0): 1})
    m = intersection_multiplicity(f, f)
    with pytest.raises(Exception):
        int(m)
