"""Exact linear algebra: rank, reduced echelon form, nullspace."""

from hypothesis import given, strategies as st

from dunklmono.exact import GaussRational, ZERO
from dunklmono.linalg import ExactMatrix, nullspace, rank, rref

entries = st.fractions(min_value=-6, max_value=6, max_denominator=4)


def small_matrices(max_dim=4):
    return st.integers(1, max_dim).flatmap(
        lambda n: st.integers(1, max_dim).flatmap(
            lambda m: st.lists(
                st.lists(entries, min_size=m, max_size=m),
                min_size=n, max_size=n).map(
                    lambda rows: ExactMatrix(
                        [[GaussRational(e) for e in row] for row in rows],
                        ncols=m))))


@given(small_matrices())
def test_rank_nullity(M):
    kernel = nullspace(M)
    assert rank(M) + len(kernel) == M.ncols
    for vec in kernel:
        assert all(v == ZERO for v in M.apply(vec))


@given(small_matrices())
def test_rref_is_idempotent_and_rank_revealing(M):
    R, pivots = rref(M)
    R2, pivots2 = rref(R)
    assert R2 == R and pivots2 == pivots
    nonzero_rows = sum(1 for row in R.rows if any(row))
    assert nonzero_rows == len(pivots) == rank(M)


@given(small_matrices(3), small_matrices(3))
def test_rank_of_product_is_bounded(A, B):
    if A.ncols != B.nrows:
        return
    assert rank(A * B) <= min(rank(A), rank(B))


def test_block_and_trace():
    I2 = ExactMatrix.identity(2)
    D = ExactMatrix.block_diag(I2, I2.scale(3))
    assert D.trace() == GaussRational(8)
    assert rank(D) == 4
