"""The three generators on the monogenics: structure relations, central
scalars, and the sign-and-permutation twist group."""

from fractions import Fraction
import itertools

import pytest

from dunklmono.bi_action import (ModuleMatrices, TwistElement,
                                 central_scalars, matrices_on, scalar_of,
                                 twist, verify_bi_relations)
from dunklmono.dunkl import Multiplicity, apply_dirac
from dunklmono.bi_action import apply_XYZ
from dunklmono.monogenics import compute_Mn

K_TRIPLES = (
    Multiplicity(1, 1, 1),
    Multiplicity(Fraction(1, 2), Fraction(1, 2), Fraction(1, 2)),
    Multiplicity(Fraction(-1, 2), Fraction(-3, 2), Fraction(-1, 2)),
    Multiplicity(2, Fraction(1, 3), 5),
)


def test_generators_preserve_the_kernel():
    for k in K_TRIPLES[:2]:
        for n in range(0, 4):
            for f in compute_Mn(n, k).basis:
                for which in "XYZ":
                    g = apply_XYZ(which, f, k)
                    assert g.is_homogeneous(n)
                    assert apply_dirac(g, k).is_zero()


def test_structure_relations_and_scalars():
    for k in K_TRIPLES:
        for n in range(0, 5):
            M = matrices_on(compute_Mn(n, k))
            cert = verify_bi_relations(M, n, k)
            assert cert["all_ok"], (str(k), n, cert)


def test_central_scalar_values():
    # kappa at (n, k) is 2(k1 k2 + (-1)^n (k1+k2+k3+n+1) k3), cyclically.
    k = Multiplicity(Fraction(1, 2), Fraction(1, 3), Fraction(2))
    k1, k2, k3 = k.k
    for n in (2, 3):
        sign = (-1) ** n
        s = k1 + k2 + k3 + n + 1
        kappa, lam, mu = central_scalars(n, k)
        assert kappa == 2 * (k1 * k2 + sign * s * k3)
        assert lam == 2 * (k2 * k3 + sign * s * k1)
        assert mu == 2 * (k3 * k1 + sign * s * k2)


def test_scalar_of_detects_non_scalars():
    M = matrices_on(compute_Mn(2, K_TRIPLES[0]))
    assert scalar_of(M.X) is None
    for C in M.centrals():
        assert scalar_of(C) is not None


# -- the twist group -----------------------------------------------------

def test_twist_group_order():
    elements = TwistElement.all_elements()
    assert len(elements) == 24
    assert len({g.label() for g in elements}) == 24


def test_twist_group_laws():
    elements = TwistElement.all_elements()
    identity = TwistElement.identity()
    for g in elements:
        assert g.compose(identity) == g == identity.compose(g)
        assert g.compose(g.inverse()) == identity
    for g, h in itertools.product(elements[:8], elements[:8]):
        assert g.compose(h) in elements


def test_twist_label_round_trip():
    for g in TwistElement.all_elements():
        assert TwistElement.parse(g.label()) == g
    assert TwistElement.parse("(-1,1);(1 2)").signs == (-1, 1)
    with pytest.raises(ValueError):
        TwistElement.parse("(2,1)")


def test_twisting_is_a_group_action_on_modules():
    k = K_TRIPLES[1]
    M = matrices_on(compute_Mn(2, k))
    elements = TwistElement.all_elements()
    for g1 in elements[:6]:
        for g2 in elements[:6]:
            lhs = twist(twist(M, g1), g2)
            rhs = twist(M, g1.compose(g2))
            assert lhs.X == rhs.X and lhs.Y == rhs.Y and lhs.Z == rhs.Z


def test_twisting_preserves_the_relations():
    k = K_TRIPLES[2]
    n = 2
    M = matrices_on(compute_Mn(n, k))
    for g in TwistElement.all_elements():
        cert = verify_bi_relations(twist(M, g), n=None, k=None)
        assert cert["relations_ok"], g.label()
