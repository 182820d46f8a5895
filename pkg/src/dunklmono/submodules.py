"""The submodule lattice of the degree-n monogenics: spaces cut out by
lower bounds (exponent >= t_axis) or upper bounds (exponent < t_axis) on
a coordinate exponent, their intersections, the direct-sum decomposition
M = M(x_axis) (+) N(x_axis), and the explicit lift maps from
two-variable slices.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .exact import ZERO, half_power_of_minus_one, SIGMA
from .dunkl import Multiplicity, apply_dirac, apply_dirac_power, bracket
from .linalg import ExactMatrix, nullspace, rank, rref
from .monogenics import ALL_AXES, MonogenicSpace, dirac_matrix, compute_Mn
from .poly import SpinorPoly, enumerate_basis


@dataclass(frozen=True)
class SubmoduleFilter:
    """A support constraint on one axis: 'high' keeps exponent >= t_axis,
    'low' keeps exponent <= min(n, t_axis - 1)."""
    axis: int
    mode: str  # 'high' or 'low'

    def __post_init__(self):
        if self.axis not in (1, 2, 3):
            raise ValueError(f"axis must be 1, 2 or 3, got {self.axis}")
        if self.mode not in ("high", "low"):
            raise ValueError(f"mode must be 'high' or 'low', got {self.mode}")

    def allows(self, mono, t) -> bool:
        e = mono[self.axis - 1]
        threshold = t[self.axis - 1]
        if self.mode == "high":
            return threshold is not math.inf and e >= threshold
        return threshold is math.inf or e < threshold


def compute_submodule(n: int, k: Multiplicity, filters, name=None) -> MonogenicSpace:
    """Intersection of the degree-n Dirac kernel with the monomial
    support constraints, via one joint nullspace computation."""
    filters = tuple(filters)
    axes_seen = [f.axis for f in filters]
    if len(set(axes_seen)) != len(axes_seen):
        raise ValueError("conflicting filters on one axis")
    ambient = enumerate_basis(n, ALL_AXES)
    t = k.t
    constraint_rows = []
    for idx, (_, mono) in enumerate(ambient.slots):
        if not all(f.allows(mono, t) for f in filters):
            row = [ZERO] * len(ambient)
            row[idx] = half_power_of_minus_one(0)
            constraint_rows.append(row)
    D = dirac_matrix(n, k)
    stacked = ExactMatrix(list(D.rows) + constraint_rows, ncols=len(ambient))
    vectors = nullspace(stacked)
    if name is None:
        name = "M" + "".join(f"({'' if f.mode == 'high' else 'N'}x{f.axis})"
                             for f in filters)
    return MonogenicSpace(n, k, ambient, vectors, name=name)


def submodule_M(n: int, k: Multiplicity, *axes) -> MonogenicSpace:
    """M_n(x_i) for one axis, or the intersection over several axes."""
    return compute_submodule(
        n, k, [SubmoduleFilter(a, "high") for a in axes],
        name="M(" + ",".join(f"x{a}" for a in axes) + ")")


def submodule_N(n: int, k: Multiplicity, axis: int) -> MonogenicSpace:
    """N_n(x_axis): monogenics with axis-exponent below the threshold."""
    return compute_submodule(n, k, [SubmoduleFilter(axis, "low")],
                             name=f"N(x{axis})")


def expected_dim_M(n: int, k: Multiplicity, *axes):
    """Predicted dim of the intersection of M_n(x_i) over the axes:
    0 below the threshold sum, else 2(n - sum + 1)."""
    total = sum(k.t_axis(a) for a in axes)
    if n < total:
        return 0
    return 2 * (n - int(total) + 1)


def complement_axes(axis: int):
    return tuple(a for a in ALL_AXES if a != axis)


def dirac_power_nullity(n: int, k: Multiplicity, axis: int, power: int) -> int:
    """Nullity of D(x_axis)^power on the two-variable slab complementary
    to the axis, in degree n."""
    axes = complement_axes(axis)
    domain = enumerate_basis(n, axes)
    if power > n:
        return len(domain)
    M = None
    for step in range(power):
        deg = n - step
        D = dirac_matrix(deg, k, axes=axes, omit=axis)
        M = D if M is None else D * M
    return len(domain) - rank(M)


def expected_dim_N(n: int, k: Multiplicity, axis: int) -> int:
    """Predicted dim of N_n(x_axis): 2(n+1) below the threshold, else the
    nullity of D(x_axis)^t_axis on the complementary slab."""
    t = k.t_axis(axis)
    if n < t:
        return 2 * (n + 1)
    return dirac_power_nullity(n, k, axis, int(t))


def verify_decomposition(n: int, k: Multiplicity, axis: int) -> dict:
    """Certificate that M_n = M_n(x_axis) (+) N_n(x_axis)."""
    whole = compute_Mn(n, k)
    high = submodule_M(n, k, axis)
    low = submodule_N(n, k, axis)
    stacked = ExactMatrix(list(high.vectors) + list(low.vectors),
                          ncols=len(whole.ambient))
    stacked_rank = rank(stacked)
    dims_add = high.dim + low.dim == whole.dim
    independent = stacked_rank == high.dim + low.dim
    return {
        "n": n,
        "axis": axis,
        "dim_M": whole.dim,
        "dim_M_axis": high.dim,
        "dim_N_axis": low.dim,
        "direct_sum": bool(dims_add and independent),
    }


def lift_from_slice(axis: int, n: int, k: Multiplicity, seed: SpinorPoly,
                    lower) -> SpinorPoly:
    """The explicit lift of a two-variable spinor polynomial into the
    monogenics, as an alternating bracket sum.

    With lower = t_axis the seed has degree n - t_axis and the image lies
    in M_n(x_axis).  With lower = 0 the image lies in N_n(x_axis); when
    n >= t_axis the seed must be annihilated by D(x_axis)^t_axis and the
    sum is truncated at t_axis - 1.
    """
    t = k.t_axis(axis)
    lower = int(lower)
    if lower not in (0,) and (t is math.inf or lower != t):
        raise ValueError("lower must be 0 or the axis threshold")
    if axis in seed.up.support_axes() or axis in seed.down.support_axes():
        raise ValueError(f"seed must not involve x{axis}")
    if lower == 0 and t is not math.inf and n >= t:
        top = int(t) - 1
        upper = int(t) - 1
        if not apply_dirac_power(seed, k, int(t), omit=axis).is_zero():
            raise ValueError(
                f"seed is not annihilated by D(x{axis})^{int(t)}")
    else:
        top = n
        upper = n
    result = SpinorPoly()
    sigma = SIGMA[axis]
    for i in range(lower, top + 1):
        sign = half_power_of_minus_one(2 * math.ceil(i / 2))
        coeff_poly = bracket(axis, i, upper, k)
        derived = apply_dirac_power(seed, k, i - lower, omit=axis)
        term = (sigma ** i) * derived.times_poly(coeff_poly).scale(sign)
        result = result + term
    return result


def nullity_via_structured(n: int, k: Multiplicity, axis: int) -> int:
    """dim M_n via the axis decomposition: 2(n - t + 1) plus the nullity
    of the t-th power of the partial Dirac operator (when t is finite)."""
    t = k.t_axis(axis)
    if n < t:
        return 2 * (n + 1)
    return 2 * (n - int(t) + 1) + dirac_power_nullity(n, k, axis, int(t))


def quotient_data(ambient_space: MonogenicSpace, sub_space: MonogenicSpace):
    """Deterministic complement coordinates for ambient/sub.

    The submodule's vectors are re-expressed in the coordinates of the
    ambient space's basis, reduced to echelon form; the quotient is
    carried by the ambient basis vectors at the non-pivot indices.
    Returns (sub_in_ambient_rref, pivot_cols, free_cols)."""
    coords = [in_span_coordinates(ambient_space, v)
              for v in sub_space.vectors]
    S = ExactMatrix(coords, ncols=ambient_space.dim)
    R, pivots = rref(S)
    if len(pivots) != sub_space.dim:
        raise ValueError("submodule vectors are not independent in the ambient space")
    free = [c for c in range(ambient_space.dim) if c not in set(pivots)]
    return R, pivots, free


def solve_in_span(basis_vectors, vector):
    """Exact coefficients c with sum c_i * basis_vectors[i] = vector.

    Raises ValueError if the vector is outside the span.  The basis
    vectors must be linearly independent."""
    basis_vectors = list(basis_vectors)
    m = len(basis_vectors)
    if m == 0:
        if any(vector):
            raise ValueError("vector does not lie in the subspace")
        return []
    ncols = len(vector)
    # Augmented system: columns are the basis vectors, last column the target.
    aug = ExactMatrix(
        [[basis_vectors[j][i] for j in range(m)] + [vector[i]]
         for i in range(ncols)],
        ncols=m + 1)
    R, pivots = rref(aug)
    if m in pivots:
        raise ValueError("vector does not lie in the subspace")
    coeffs = [ZERO] * m
    for row_idx, p in enumerate(pivots):
        coeffs[p] = R.rows[row_idx][m]
    return coeffs


def in_span_coordinates(space: MonogenicSpace, vector):
    """Coordinates of an ambient coordinate vector in the space's basis."""
    return solve_in_span(space.vectors, vector)
