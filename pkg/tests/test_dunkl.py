"""Dunkl operators: commutation, reflection covariance, thresholds, and
the bracket monomials they annihilate."""

from fractions import Fraction
import math

import pytest
from hypothesis import given, strategies as st

from dunklmono.dunkl import (Multiplicity, apply_T, apply_dirac, bracket,
                             m_value, reflect, threshold)
from dunklmono.poly import Poly, SpinorPoly

multiplicities = st.builds(
    Multiplicity,
    *(st.fractions(min_value=-4, max_value=4, max_denominator=2)
      for _ in range(3)))
monos = st.tuples(st.integers(0, 5), st.integers(0, 5), st.integers(0, 5))
coeffs = st.fractions(min_value=-9, max_value=9, max_denominator=4)
polys = st.dictionaries(monos, coeffs, max_size=4).map(Poly)


def test_threshold():
    assert threshold(Fraction(-1, 2)) == 1
    assert threshold(Fraction(-3, 2)) == 3
    assert threshold(Fraction(1, 2)) == math.inf
    assert threshold(Fraction(-1)) == math.inf
    assert threshold(Fraction(0)) == math.inf


def test_multiplicity_parse_round_trip():
    m = Multiplicity.parse("-1/2,-3/2,1")
    assert m.k == (Fraction(-1, 2), Fraction(-3, 2), Fraction(1))
    assert Multiplicity.parse(str(m)) == m
    assert m.t_json() == [1, 3, "inf"]
    with pytest.raises(ValueError):
        Multiplicity.parse("1,2")


def test_eigenvalue_on_monomials():
    # T_i multiplies x_i^m by m for even m and by m + 2k_i for odd m.
    k = Multiplicity(Fraction(1, 2), 0, 0)
    for m, expected in ((0, 0), (1, 2), (2, 2), (3, 4), (4, 4)):
        assert m_value(1, m, k) == expected
        f = apply_T(1, Poly.monomial(m, 0, 0), k)
        if expected:
            assert f == Poly.monomial(m - 1, 0, 0, Fraction(expected))
        else:
            assert f.is_zero()


@given(polys, multiplicities)
def test_dunkl_operators_commute(f, k):
    for i, j in ((1, 2), (1, 3), (2, 3)):
        assert apply_T(i, apply_T(j, f, k), k) == \
            apply_T(j, apply_T(i, f, k), k)


@given(polys, multiplicities)
def test_dunkl_anticommutes_with_its_reflection(f, k):
    for axis in (1, 2, 3):
        assert apply_T(axis, reflect(axis, f), k) == \
            -reflect(axis, apply_T(axis, f, k))


@given(polys, multiplicities)
def test_dunkl_is_linear_and_lowers_degree(f, k):
    g = apply_T(1, f, k)
    top = max((m[0] for m in f.terms), default=0)
    assert all(m[0] < max(top, 1) for m in g.terms)
    assert apply_T(1, f + f, k) == g + g


def test_bracket_kills_the_threshold_power():
    # With 2k_i an odd negative integer, T_i annihilates x_i^{t_i}.
    k = Multiplicity(Fraction(-3, 2), 0, 0)
    assert apply_T(1, Poly.monomial(3, 0, 0), k).is_zero()
    assert not apply_T(1, Poly.monomial(5, 0, 0), k).is_zero()


@given(st.integers(0, 4), st.integers(0, 3), multiplicities)
def test_bracket_is_an_iterated_dunkl_image_of_the_top_power(i, extra, k):
    # [x_a]^j_i is exactly T_a^{j-i} applied to x_a^j.
    j = i + extra
    from dunklmono.dunkl import apply_T_power
    assert bracket(1, i, j, k) == \
        apply_T_power(1, Poly.monomial(j, 0, 0), k, extra)
    assert bracket(2, i, i, k) == Poly.monomial(0, i, 0)


def test_dirac_squares_to_the_laplacian_like_scalar_operator():
    # D^2 acts diagonally: both spinor components see the same scalar
    # second-order operator.
    k = Multiplicity(Fraction(1, 2), Fraction(1, 3), Fraction(2))
    f = SpinorPoly(up=Poly.monomial(2, 1, 1), down=Poly.monomial(0, 2, 2))
    g = apply_dirac(apply_dirac(f, k), k)
    h_up = apply_dirac(apply_dirac(SpinorPoly(up=f.up), k), k)
    h_down = apply_dirac(apply_dirac(SpinorPoly(down=f.down), k), k)
    assert g == h_up + h_down
    assert h_up.down.is_zero() and h_down.up.is_zero()
