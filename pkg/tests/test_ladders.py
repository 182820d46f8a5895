"""Ladder bases: annihilation, coefficient-matrix independence, the two
transfer recurrences, and the column splits."""

from fractions import Fraction

import pytest

from dunklmono.dunkl import Multiplicity
from dunklmono.ladders import (CASE_IDS, CASES, build_ladder,
                               column_split_certificate,
                               smallest_admissible_n, verify_ladder)

K_GENERIC = Multiplicity(1, 1, 1)
K_131 = Multiplicity(Fraction(-1, 2), Fraction(-3, 2), Fraction(-1, 2))
K_151 = Multiplicity(Fraction(-1, 2), Fraction(-5, 2), Fraction(-1, 2))
K_111 = Multiplicity(Fraction(-1, 2), Fraction(-1, 2), Fraction(-1, 2))


def test_case_inventory():
    assert len(CASE_IDS) == 12
    parities = {CASES[c].parity for c in CASE_IDS}
    assert parities == {0, 1}
    for case_id in CASE_IDS:
        assert CASES[case_id].parity == (1 if case_id.endswith("odd") else 0)


def test_inadmissible_degrees_are_rejected():
    with pytest.raises(ValueError):
        build_ladder("lt-t1t3-odd", 2, K_GENERIC)  # wrong parity
    with pytest.raises(ValueError):
        build_ladder("ge-t1t3-odd", 1, K_131)  # below the regime


def test_low_regime_ladders():
    for case_id in ("lt-t1t3-odd", "lt-t1t3-even"):
        for n in smallest_admissible_n(case_id, K_GENERIC, count=2):
            cert = verify_ladder(build_ladder(case_id, n, K_GENERIC))
            assert cert["all_ok"], cert


def test_middle_regime_ladders():
    for case_id in ("t1-to-t1t2-odd", "t1-to-t1t2-even",
                    "t3-to-t2t3-odd", "t3-to-t2t3-even"):
        for k in (K_131, K_151):
            for n in smallest_admissible_n(case_id, k, count=1):
                cert = verify_ladder(build_ladder(case_id, n, k))
                assert cert["all_ok"], cert


def test_high_regime_ladders():
    for case_id in ("ge-t1t3-odd", "ge-t1t3-even", "ge-t1t2-odd",
                    "ge-t1t2-even", "ge-t2t3-odd", "ge-t2t3-even"):
        for k in (K_131, K_111):
            for n in smallest_admissible_n(case_id, k, count=1):
                cert = verify_ladder(build_ladder(case_id, n, k))
                assert cert["all_ok"], cert


def test_ladder_lengths():
    # The ladder has top+1 rungs where top is the window width.
    ladder = build_ladder("lt-t1t3-odd", 3, K_GENERIC)
    assert len(ladder.elements) == 4
    assert len(ladder.thetas) == len(ladder.theta_stars) == \
        len(ladder.phis) == 4


def test_column_splits_name_the_right_subquotients():
    # Middle regime at t = (1, 5, 1) with t1+t3 <= n < t2: the columns
    # split between a meet of two submodules and quotient pieces.
    for case_id, n in (("t1-to-t1t2-odd", 3), ("t3-to-t2t3-odd", 3),
                       ("t1-to-t1t2-even", 2), ("t3-to-t2t3-even", 2)):
        split = column_split_certificate(build_ladder(case_id, n, K_151))
        assert split is not None and split["all_ok"], split
        assert len(split["splits"]) >= 2


def test_column_splits_high_regime():
    # t = (1, 3, 1) and n at least the threshold sum.
    for case_id, n in (("ge-t1t3-even", 6), ("ge-t1t2-even", 6),
                       ("ge-t2t3-even", 6), ("ge-t1t3-odd", 5)):
        split = column_split_certificate(build_ladder(case_id, n, K_131))
        assert split is not None and split["all_ok"], split


def test_no_lemma_no_claim():
    # Below the sum of thresholds no column-split lemma applies to the
    # high-regime hypotheses; the certificate declines to claim one.
    ladder = build_ladder("lt-t1t3-even", 0, K_131)
    split = column_split_certificate(ladder)
    if split is not None:
        assert split["all_ok"]
