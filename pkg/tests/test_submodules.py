"""Submodule lattice of the degree-n monogenics: the high/low pieces
along each axis, their expected dimensions, and the direct sums."""

from fractions import Fraction

from dunklmono.dunkl import Multiplicity
from dunklmono.monogenics import ALL_AXES, compute_Mn
from dunklmono.submodules import (expected_dim_M, expected_dim_N,
                                  nullity_via_structured, submodule_M,
                                  submodule_N, verify_decomposition)

K_GRID = (
    Multiplicity(Fraction(-3, 2), 1, 1),
    Multiplicity(Fraction(-1, 2), Fraction(-3, 2), Fraction(-1, 2)),
    Multiplicity(Fraction(-1, 2), Fraction(-1, 2), Fraction(-3, 2)),
    Multiplicity(Fraction(-3, 2), Fraction(-3, 2), Fraction(-1, 2)),
)


def test_expected_dimensions_match_computed():
    for k in K_GRID:
        for n in range(0, 6):
            for axis in ALL_AXES:
                assert submodule_M(n, k, axis).dim == \
                    expected_dim_M(n, k, axis)
                assert submodule_N(n, k, axis).dim == \
                    expected_dim_N(n, k, axis)


def test_high_low_direct_sum():
    for k in K_GRID:
        for n in range(0, 6):
            for axis in ALL_AXES:
                cert = verify_decomposition(n, k, axis)
                assert cert["direct_sum"], (k, n, axis, cert)


def test_submodules_nest():
    k = K_GRID[1]
    for n in range(0, 6):
        whole = compute_Mn(n, k).dim
        for axes in ((1, 2), (1, 3), (2, 3), (1, 2, 3)):
            meet = submodule_M(n, k, *axes).dim
            assert meet == expected_dim_M(n, k, *axes)
            assert meet <= min(submodule_M(n, k, a).dim for a in axes)
            assert meet <= whole


def test_decomposition_recovers_the_total_dimension():
    for k in K_GRID:
        for n in range(0, 6):
            whole = compute_Mn(n, k).dim
            for axis in ALL_AXES:
                assert nullity_via_structured(n, k, axis) == whole


def test_generic_multiplicity_degenerates_nothing():
    # With all thresholds infinite the high piece is zero and the low
    # piece is everything, on every axis.
    k = Multiplicity(1, 1, 1)
    for n in range(0, 5):
        whole = compute_Mn(n, k).dim
        for axis in ALL_AXES:
            assert submodule_M(n, k, axis).dim == 0
            assert submodule_N(n, k, axis).dim == whole
