"""The bidiagonal-times-antidiagonal factorization of the partial Dirac
matrix and the rank of its inner block."""

from fractions import Fraction

from dunklmono.dunkl import Multiplicity
from dunklmono.linalg import rank
from dunklmono.monogenics import dirac_matrix
from dunklmono.structured import (build_An, build_Nn, rank_Nn_expected,
                                  dirac_x3_matrix_factored)

GENERIC = Multiplicity(1, 1, 1)
DEGENERATE = Multiplicity(Fraction(-1, 2), Fraction(-3, 2), 1)


def test_factorization_entry_for_entry():
    for k in (GENERIC, DEGENERATE):
        for n in range(1, 9):
            assert dirac_x3_matrix_factored(n, k) == \
                dirac_matrix(n, k, axes=(1, 2), omit=3)


def test_rank_in_both_branches():
    # t = (1, 3): rank drops by one exactly for max(t1,t2) <= n < t1+t2.
    for n in range(1, 13):
        expected = rank_Nn_expected(n, DEGENERATE)
        assert expected == (n - 1 if 3 <= n < 4 else n)
        assert rank(build_Nn(n, DEGENERATE)) == expected
    for n in range(1, 13):
        assert rank(build_Nn(n, GENERIC)) == n == \
            rank_Nn_expected(n, GENERIC)


def test_antidiagonal_outer_factors_are_invertible():
    for n in range(1, 7):
        A = build_An(n)
        assert A.nrows == A.ncols == n
        assert rank(A) == n
