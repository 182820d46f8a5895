"""The kernel spaces of the Dirac operator and the dimension formula."""

from fractions import Fraction

from dunklmono.dunkl import Multiplicity, apply_dirac
from dunklmono.monogenics import compute_Mn, dim_formula_status, dirac_matrix
from dunklmono.linalg import rank

GENERIC = Multiplicity(1, 1, 1)
DEGENERATE = Multiplicity(Fraction(-1, 2), Fraction(-3, 2), Fraction(-1, 2))


def test_every_basis_vector_is_annihilated():
    for k in (GENERIC, DEGENERATE):
        for n in range(0, 5):
            space = compute_Mn(n, k)
            for f in space.basis:
                assert f.is_homogeneous(n)
                assert apply_dirac(f, k).is_zero()


def test_dimension_formula_in_the_generic_regime():
    for n in range(0, 9):
        status = dim_formula_status(n, GENERIC)
        assert status["case"] == "I"
        assert compute_Mn(n, GENERIC).dim == 2 * (n + 1) == status["predicted"]


def test_case_labels_follow_the_thresholds():
    # t = (1, 3, 1): the case walks I -> II -> gap -> IV as n grows.
    cases = [dim_formula_status(n, DEGENERATE)["case"] for n in range(9)]
    assert cases[0] == "I"
    assert cases[2] == "III(x1,x3)"
    assert cases[3] is None  # the gap point
    assert all(c == "IV" for c in cases[5:])
    # Wherever the hypothesis holds the predicted dimension is exact.
    for n in range(9):
        status = dim_formula_status(n, DEGENERATE)
        if status["applies"]:
            assert compute_Mn(n, DEGENERATE).dim == status["predicted"]


def test_gap_points_make_no_dimension_claim():
    status = dim_formula_status(3, DEGENERATE)
    assert not status["applies"]
    assert status["predicted"] is None
    # The space still exists; its dimension simply is not 2(n+1) here.
    assert compute_Mn(3, DEGENERATE).dim != 2 * (3 + 1)


def test_dimension_is_the_corank_of_the_dirac_matrix():
    for n in range(1, 5):
        M = dirac_matrix(n, GENERIC)
        assert compute_Mn(n, GENERIC).dim == M.ncols - rank(M)


def test_partial_dirac_matrix_shape():
    # Omitting one axis restricts to two-variable slices: the matrix of
    # D(x3) maps degree-n spinors in x1, x2 to degree n-1.
    M = dirac_matrix(4, GENERIC, axes=(1, 2), omit=3)
    assert M.ncols == 2 * 5 and M.nrows == 2 * 4
