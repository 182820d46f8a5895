"""Arithmetic in Q(i): field laws, the square-root-of-minus-one branch,
and parsing."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from dunklmono.exact import (GaussRational, I, ONE, ZERO,
                             half_power_of_minus_one, parse_rational)

rationals = st.fractions(
    min_value=Fraction(-20), max_value=Fraction(20), max_denominator=12)
gaussians = st.builds(GaussRational, rationals, rationals)


def test_imaginary_unit_squares_to_minus_one():
    assert I * I == GaussRational(-1)


def test_chosen_branch_of_the_half_power():
    # (-1)^(1/2) is +i, and the powers cycle with period four.
    assert half_power_of_minus_one(1) == I
    assert half_power_of_minus_one(2) == GaussRational(-1)
    assert half_power_of_minus_one(3) == -I
    assert half_power_of_minus_one(4) == ONE
    for h in range(-8, 9):
        assert half_power_of_minus_one(h) == I ** (h % 4)


@given(gaussians, gaussians, gaussians)
def test_ring_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + ZERO == a
    assert a * ONE == a
    assert a - a == ZERO


@given(gaussians)
def test_multiplicative_inverse(a):
    if a:
        assert a * a.inverse() == ONE
    else:
        with pytest.raises(ZeroDivisionError):
            a.inverse()


@given(gaussians)
def test_norm_and_conjugate(a):
    assert a * a.conjugate() == GaussRational(a.norm())
    assert a.conjugate().conjugate() == a


@given(gaussians, st.integers(min_value=0, max_value=8))
def test_integer_powers(a, e):
    expected = ONE
    for _ in range(e):
        expected = expected * a
    assert a ** e == expected


def test_parse_rational():
    assert parse_rational("-3/2") == Fraction(-3, 2)
    assert parse_rational("5") == Fraction(5)
    assert parse_rational(" 1/3 ") == Fraction(1, 3)
    with pytest.raises(ValueError):
        parse_rational("x")


@given(rationals)
def test_parse_rational_round_trip(q):
    assert parse_rational(str(q)) == q


@given(gaussians, rationals)
def test_mixed_scalar_arithmetic(a, q):
    assert a * q == a * GaussRational(q)
    assert q * a == GaussRational(q) * a
    assert a + q == a + GaussRational(q)
