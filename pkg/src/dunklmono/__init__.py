"""Exact construction and verification of spaces of Dunkl monogenics
for the reflection group Z2 x Z2 x Z2, their module structure over the
Bannai-Ito algebra, and the classification of the irreducible factors.

Everything is computed over the Gaussian rationals; every claim the
package makes is backed by a machine-checkable certificate.
"""

from .exact import (GaussRational, Mat2, half_power_of_minus_one,
                    parse_rational)
from .dunkl import Multiplicity, apply_T, apply_dirac, bracket, reflect
from .poly import Poly, SpinorPoly, MatPoly, enumerate_basis
from .monogenics import (MonogenicSpace, compute_Mn, dim_formula_status,
                         dirac_matrix)
from .submodules import (submodule_M, submodule_N, expected_dim_M,
                         expected_dim_N, verify_decomposition)
from .bi_action import (apply_XYZ, central_scalars, matrices_on,
                        ModuleMatrices, verify_bi_relations, TwistElement,
                        twist, scalar_of, Subquotient)
from .irreps import (IrrepSpec, build_irrep, is_irreducible_by_criterion,
                     is_irreducible_burnside, identify)
from .structured import build_An, build_Nn, rank_Nn_expected, \
    dirac_x3_matrix_factored
from .ladders import (CASE_IDS, build_ladder, verify_ladder,
                      column_split_certificate, smallest_admissible_n)
from .classify import classify

__all__ = [
    "GaussRational", "Mat2", "half_power_of_minus_one", "parse_rational",
    "Multiplicity", "apply_T", "apply_dirac", "bracket", "reflect",
    "Poly", "SpinorPoly", "MatPoly", "enumerate_basis",
    "MonogenicSpace", "compute_Mn", "dim_formula_status", "dirac_matrix",
    "submodule_M", "submodule_N", "expected_dim_M", "expected_dim_N",
    "verify_decomposition",
    "apply_XYZ", "central_scalars", "matrices_on", "ModuleMatrices",
    "verify_bi_relations", "TwistElement", "twist", "scalar_of",
    "Subquotient",
    "IrrepSpec", "build_irrep", "is_irreducible_by_criterion",
    "is_irreducible_burnside", "identify",
    "build_An", "build_Nn", "rank_Nn_expected", "dirac_x3_matrix_factored",
    "CASE_IDS", "build_ladder", "verify_ladder", "column_split_certificate",
    "smallest_admissible_n",
    "classify",
]
