"""The two families of finite irreducible modules, the irreducibility
criterion against the Burnside oracle, and round-trip identification."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from dunklmono.bi_action import TwistElement, verify_bi_relations
from dunklmono.irreps import (IrrepSpec, build_irrep, identify,
                              is_irreducible_burnside,
                              is_irreducible_by_criterion)

params = st.fractions(min_value=-2, max_value=2, max_denominator=2)
twists = st.sampled_from(TwistElement.all_elements())
even_specs = st.builds(IrrepSpec, st.just("E"), st.sampled_from((1, 3)),
                       params, params, params, twists)
odd_specs = st.builds(IrrepSpec, st.just("O"), st.sampled_from((0, 2, 4)),
                      params, params, params, twists)
specs = st.one_of(even_specs, odd_specs)


def test_family_parity_is_enforced():
    with pytest.raises(ValueError):
        IrrepSpec("E", 2, 0, 0, 0)
    with pytest.raises(ValueError):
        IrrepSpec("O", 3, 0, 0, 0)
    with pytest.raises(ValueError):
        IrrepSpec("Q", 1, 0, 0, 0)


@given(specs)
@settings(max_examples=60, deadline=None)
def test_built_modules_satisfy_the_relations(spec):
    M = build_irrep(spec)
    cert = verify_bi_relations(M, n=None, k=None)
    assert cert["relations_ok"]
    assert M.dim == spec.dim


@given(specs)
@settings(max_examples=60, deadline=None)
def test_central_scalars_match_the_closed_form(spec):
    M = build_irrep(spec)
    cert = verify_bi_relations(M, n=None, k=None)
    measured = tuple(cert["scalars"][name]["measured"]
                     for name in ("kappa", "lambda", "mu"))
    predicted = tuple(str(v) for v in spec.central_scalars())
    assert measured == predicted


def test_trace_shapes():
    e = IrrepSpec("E", 3, Fraction(1), Fraction(1, 2), Fraction(2))
    o = IrrepSpec("O", 2, Fraction(1), Fraction(1, 2), Fraction(2))
    Me, Mo = build_irrep(e), build_irrep(o)
    assert Me.X.trace() == Me.Y.trace() == Me.Z.trace() == Fraction(-2)
    assert (Mo.X.trace(), Mo.Y.trace(), Mo.Z.trace()) == \
        (Fraction(1), Fraction(1, 2), Fraction(2))


@given(specs)
@settings(max_examples=40, deadline=None)
def test_criterion_agrees_with_burnside(spec):
    assert is_irreducible_burnside(build_irrep(spec)) == \
        is_irreducible_by_criterion(spec)


def test_known_reducible_point():
    # a+b+c hits the forbidden set for E_1.
    spec = IrrepSpec("E", 1, 0, 0, 0)
    assert not is_irreducible_by_criterion(spec)
    assert not is_irreducible_burnside(build_irrep(spec))


@given(specs)
@settings(max_examples=30, deadline=None)
def test_identify_round_trip(spec):
    M = build_irrep(spec)
    if not is_irreducible_by_criterion(spec):
        return
    recovered = identify(M)
    N = build_irrep(recovered)
    cert_m = verify_bi_relations(M, n=None, k=None)
    cert_n = verify_bi_relations(N, n=None, k=None)
    assert recovered.dim == spec.dim
    assert cert_m["scalars"] == cert_n["scalars"]
    assert (M.X.trace(), M.Y.trace(), M.Z.trace()) == \
        (N.X.trace(), N.Y.trace(), N.Z.trace())


def test_burnside_cap():
    spec = IrrepSpec("O", 10, 0, 0, 0)
    with pytest.raises(ValueError):
        is_irreducible_burnside(build_irrep(spec))
