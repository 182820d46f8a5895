"""Sparse polynomials, spinor values, and the graded coordinate system."""

from hypothesis import given, strategies as st

from dunklmono.exact import I2, SIGMA1, SIGMA2, SIGMA3
from dunklmono.poly import (Poly, SpinorPoly, MatPoly, monomials_of_degree,
                            enumerate_basis, coordinates, reconstruct)

coeffs = st.fractions(min_value=-9, max_value=9, max_denominator=6)
monos = st.tuples(st.integers(0, 4), st.integers(0, 4), st.integers(0, 4))
polys = st.dictionaries(monos, coeffs, max_size=5).map(Poly)


@given(polys, polys, polys)
def test_polynomial_ring_laws(f, g, h):
    assert f + g == g + f
    assert f * g == g * f
    assert f * (g + h) == f * g + f * h
    assert (f * g) * h == f * (g * h)


@given(polys)
def test_reflection_is_an_involution(f):
    for axis in (1, 2, 3):
        assert f.reflect((axis,)).reflect((axis,)) == f


def test_variables_and_monomials():
    x1, x2 = Poly.variable(1), Poly.variable(2)
    assert x1 * x1 * x2 == Poly.monomial(2, 1, 0)
    assert Poly.constant(0).is_zero()


def test_monomials_of_degree():
    assert monomials_of_degree(2, (1, 2)) == [(0, 2, 0), (1, 1, 0), (2, 0, 0)]
    assert len(monomials_of_degree(3, (1, 2, 3))) == 10


def test_two_variable_slice_ordering():
    # Degree-n monomials in x1, x2 are listed with increasing x1 exponent.
    basis = enumerate_basis(3, (1, 2))
    ups = [m for slot, m in basis.slots if slot == "up"]
    assert ups == [(0, 3, 0), (1, 2, 0), (2, 1, 0), (3, 0, 0)]


@given(st.integers(0, 4))
def test_coordinates_round_trip(n):
    basis = enumerate_basis(n, (1, 2, 3))
    for idx in range(len(basis)):
        f = basis.element(idx)
        vec = coordinates(f, basis)
        assert [bool(v) for v in vec] == [i == idx for i in range(len(vec))]
        assert reconstruct(vec, basis) == f


def test_pauli_matrices():
    for sigma in (SIGMA1, SIGMA2, SIGMA3):
        assert sigma * sigma == I2
    assert SIGMA1 * SIGMA2 == SIGMA2 * SIGMA1 * (-1)


def test_matpoly_columns():
    p = MatPoly.tensor(SIGMA3, Poly.variable(1))
    up, down = p.column(0).up, p.column(1).down
    assert up == Poly.variable(1)
    assert down == -Poly.variable(1)
