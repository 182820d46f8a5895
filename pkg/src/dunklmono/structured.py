"""The bidiagonal blocks A_n and N_n, the rank prediction for N_n, and
the factored matrix of the partial Dirac operator D(x3) and its powers
on two-variable spinor polynomials.

Indices inside this module are 1-based to mirror the block entry
formulas; the boundary to the rest of the package is plain ExactMatrix.
"""

from __future__ import annotations

from .exact import GaussRational, ZERO, half_power_of_minus_one
from .dunkl import Multiplicity, m_value
from .linalg import ExactMatrix


def build_An(n: int) -> ExactMatrix:
    """n x n diagonal matrix with (i,i)-entry (-1)^(n-i), 1-based."""
    if n < 0:
        raise ValueError("n must be non-negative")
    rows = [[ZERO] * n for _ in range(n)]
    for i in range(1, n + 1):
        rows[i - 1][i - 1] = half_power_of_minus_one(2 * (n - i))
    return ExactMatrix(rows, ncols=n)


def build_Nn(n: int, k: Multiplicity) -> ExactMatrix:
    """n x (n+1) matrix with (i,i)-entry (-1)^(n-i+1/2) m_2^(n+1-i) and
    (i,i+1)-entry (-1)^(n-i) m_1^(i), 1-based."""
    if n < 1:
        raise ValueError("n must be at least 1")
    rows = [[ZERO] * (n + 1) for _ in range(n)]
    for i in range(1, n + 1):
        rows[i - 1][i - 1] = half_power_of_minus_one(2 * (n - i) + 1) \
            * GaussRational(m_value(2, n + 1 - i, k))
        rows[i - 1][i] = half_power_of_minus_one(2 * (n - i)) \
            * GaussRational(m_value(1, i, k))
    return ExactMatrix(rows, ncols=n + 1)


def rank_Nn_expected(n: int, k: Multiplicity) -> int:
    """Predicted rank of N_n: n-1 when max{t1,t2} <= n < t1+t2, else n."""
    if n < 1:
        raise ValueError("n must be at least 1")
    t1, t2 = k.t_axis(1), k.t_axis(2)
    if max(t1, t2) <= n < t1 + t2:
        return n - 1
    return n


def _swap_blocks(P: ExactMatrix) -> ExactMatrix:
    """[[0, P], [P, 0]]."""
    zero_tl = ExactMatrix.zero(P.nrows, P.ncols)
    return ExactMatrix.block([[zero_tl, P], [P, zero_tl]])


def _ia_block(size_i: int, size_a: int) -> ExactMatrix:
    """diag(I_{size_i}, A_{size_a})."""
    return ExactMatrix.block_diag(ExactMatrix.identity(size_i), build_An(size_a))


def dirac_x3_matrix_factored(n: int, k: Multiplicity) -> ExactMatrix:
    """Matrix of D(x3) from degree n to n-1 in the alpha bases, assembled
    as the triple product diag(I_n, A_n) [[0,N_n],[N_n,0]] diag(I_{n+1}, A_{n+1})."""
    if n < 1:
        raise ValueError("n must be at least 1")
    N = build_Nn(n, k)
    return _ia_block(n, n) * _swap_blocks(N) * _ia_block(n + 1, n + 1)


def dirac_x3_power_matrix(n: int, k: Multiplicity, power: int) -> ExactMatrix:
    """Matrix of D(x3)^power from degree n to n-power in the alpha bases,
    assembled from the per-degree factorizations.

    For odd power this collapses to
    diag(I, A_{n-power+1}) [[0,P],[P,0]] diag(I, A_{n+1})
    with P = N_{n-power+1} ... N_n, since consecutive A factors cancel."""
    if not 1 <= power <= n:
        raise ValueError("power must satisfy 1 <= power <= n")
    product = dirac_x3_matrix_factored(n, k)
    for m in range(n - 1, n - power, -1):
        product = dirac_x3_matrix_factored(m, k) * product
    return product


def nn_chain_product(n: int, k: Multiplicity, power: int) -> ExactMatrix:
    """P = N_{n-power+1} N_{n-power+2} ... N_n."""
    if not 1 <= power <= n:
        raise ValueError("power must satisfy 1 <= power <= n")
    P = build_Nn(n - power + 1, k)
    for m in range(n - power + 2, n + 1):
        P = P * build_Nn(m, k)
    return P
