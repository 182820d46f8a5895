"""End-to-end classification of the degree-n monogenics into copies of
the finite irreducible modules."""

from fractions import Fraction

from dunklmono.classify import classify
from dunklmono.dunkl import Multiplicity


def _assert_clean(report):
    assert report["all_ok"], report
    for factor in report["factors"]:
        assert factor["dim_ok"] and factor["relations_ok"]
        assert factor["scalars_ok"] and factor["spec_scalars_ok"]
        assert factor["traces_ok"]
        for verdicts in factor["irreducibility"].values():
            if "burnside" in verdicts:
                assert verdicts["agree"]


def test_fully_generic_point_is_a_double_irreducible():
    report = classify(2, Multiplicity(1, 1, 1))
    assert report["case"] == "I"
    assert len(report["factors"]) == 1
    factor = report["factors"][0]
    assert len(factor["copies"]) == 2
    assert factor["copies"][0] == factor["copies"][1]
    _assert_clean(report)


def test_one_threshold_case():
    report = classify(2, Multiplicity(Fraction(-1, 2), 1, 1))
    assert report["case"] == "II(x1)"
    assert len(report["factors"]) == 2
    _assert_clean(report)


def test_two_threshold_case():
    report = classify(2, Multiplicity(Fraction(-1, 2), 2, Fraction(-1, 2)))
    assert report["case"] == "III(x1,x3)"
    _assert_clean(report)


def test_all_thresholds_case():
    k = Multiplicity(Fraction(-1, 2), Fraction(-3, 2), Fraction(-1, 2))
    report = classify(5, k)
    assert report["case"] == "IV"
    # One factor per composition slot: the triple meet, three walls,
    # and the three mixed middles (as encoded in the factor table).
    assert len(report["factors"]) >= 4
    _assert_clean(report)
    # Factor dimensions add up to the whole space.
    assert sum(f["dim"] for f in report["factors"] if "/" not in f["name"]) \
        <= report["dim"]


def test_gap_point_reports_without_claiming():
    k = Multiplicity(Fraction(-1, 2), Fraction(-3, 2), Fraction(-1, 2))
    report = classify(3, k)
    assert report["case"] is None
    assert report["factors"] == []
    assert "note" in report
    assert report["all_ok"]


def test_even_degree_all_thresholds():
    k = Multiplicity(Fraction(-1, 2), Fraction(-3, 2), Fraction(-1, 2))
    report = classify(6, k)
    assert report["case"] == "IV"
    _assert_clean(report)
