"""The degree-n kernel of the Dirac operator and the dimension formula.

compute_Mn finds an exact echelon-normalized kernel basis by brute
force.  dim_formula_status evaluates the hypothesis "n < max{t} or
n+1 >= t1+t2+t3" for dim = 2(n+1), reports which of the sub-cases
(I)-(IV) applies, and flags the gap regime where no prediction is made.
"""

from __future__ import annotations

from .dunkl import Multiplicity, apply_dirac
from .linalg import ExactMatrix, matrix_of_operator, nullspace
from .poly import GradedBasis, SpinorPoly, enumerate_basis, reconstruct

ALL_AXES = (1, 2, 3)


class MonogenicSpace:
    """An exact subspace of the degree-n spinor polynomials, carried as
    echelon-normalized coordinate vectors over a fixed graded basis."""

    __slots__ = ("n", "k", "ambient", "vectors", "basis", "dim", "name")

    def __init__(self, n, k, ambient: GradedBasis, vectors, name="M"):
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "ambient", ambient)
        object.__setattr__(self, "vectors", tuple(tuple(v) for v in vectors))
        object.__setattr__(self, "basis",
                           tuple(reconstruct(v, ambient) for v in vectors))
        object.__setattr__(self, "dim", len(vectors))
        object.__setattr__(self, "name", name)

    def __setattr__(self, name, value):
        raise AttributeError("MonogenicSpace is immutable")


def dirac_matrix(n: int, k: Multiplicity, axes=ALL_AXES, omit=None) -> ExactMatrix:
    """Matrix of the (possibly partial) Dirac operator from degree n to
    degree n-1 spinor polynomials on the given variables."""
    domain = enumerate_basis(n, axes)
    if n == 0:
        return ExactMatrix.zero(0, len(domain))
    codomain = enumerate_basis(n - 1, axes)
    return matrix_of_operator(
        lambda f: apply_dirac(f, k, omit=omit), domain, codomain)


def compute_Mn(n: int, k: Multiplicity) -> MonogenicSpace:
    """Exact kernel basis of the Dirac operator in degree n."""
    if n < 0:
        raise ValueError("n must be non-negative")
    ambient = enumerate_basis(n, ALL_AXES)
    kernel = nullspace(dirac_matrix(n, k))
    return MonogenicSpace(n, k, ambient, kernel)


def dim_formula_status(n: int, k: Multiplicity) -> dict:
    """Whether the dimension formula 2(n+1) applies at (n, k), and which
    sub-case of the case list holds.

    Cases: (I) n < min{t}; (II) one threshold at most n, below the other
    two; (III) a pair-sum at most n, below the remaining threshold;
    (IV) n >= t1+t2+t3.  The hypothesis can hold with no sub-case
    applying (when t1+t2+t3 = n+1 but none of (I)-(IV) fires); then the
    case field is None.
    """
    t1, t2, t3 = k.t
    applies = n < max(t1, t2, t3) or n + 1 >= t1 + t2 + t3
    case = None
    if n < min(t1, t2, t3):
        case = "I"
    elif t2 <= n < min(t1, t3):
        case = "II(x2)"
    elif t3 <= n < min(t1, t2):
        case = "II(x3)"
    elif t1 <= n < min(t2, t3):
        case = "II(x1)"
    elif t1 + t3 <= n < t2:
        case = "III(x1,x3)"
    elif t1 + t2 <= n < t3:
        case = "III(x1,x2)"
    elif t2 + t3 <= n < t1:
        case = "III(x2,x3)"
    elif n >= t1 + t2 + t3:
        case = "IV"
    return {
        "n": n,
        "t": k.t_json(),
        "applies": applies,
        "predicted": 2 * (n + 1) if applies else None,
        "case": case,
    }
