"""Dunkl operators for the reflection group Z2^3, bracket monomials,
and the Dirac operator built from them.

The Dunkl operator attached to axis i acts on a monomial x_i^m (times
anything free of x_i) by multiplication with m_i^(m) = m + (1-(-1)^m) k_i
and lowering the x_i exponent by one.  The thresholds t_i = -2k_i (when
2k_i is an odd negative integer, infinity otherwise) control where this
scalar vanishes and the submodule lattice degenerates.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .exact import GaussRational, SIGMA, parse_rational
from .poly import Poly, SpinorPoly

INFINITY = math.inf


class Multiplicity:
    """The multiplicity triple (k1, k2, k3) with derived thresholds."""

    __slots__ = ("k", "t")

    def __init__(self, k1, k2, k3):
        k = tuple(Fraction(x) for x in (k1, k2, k3))
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "t", tuple(threshold(x) for x in k))

    def __setattr__(self, name, value):
        raise AttributeError("Multiplicity is immutable")

    @staticmethod
    def parse(text: str) -> "Multiplicity":
        parts = text.split(",")
        if len(parts) != 3:
            raise ValueError(f"expected three comma-separated rationals, got {text!r}")
        return Multiplicity(*(parse_rational(p) for p in parts))

    def k_axis(self, axis: int) -> Fraction:
        return self.k[axis - 1]

    def t_axis(self, axis: int):
        return self.t[axis - 1]

    def t_json(self):
        """Thresholds in a JSON-safe form: ints, with infinity as 'inf'."""
        return [t if t is not INFINITY else "inf" for t in self.t]

    def __eq__(self, other):
        if isinstance(other, Multiplicity):
            return self.k == other.k
        return NotImplemented

    def __hash__(self):
        return hash(self.k)

    def __str__(self):
        return ",".join(str(x) for x in self.k)

    __repr__ = __str__


def threshold(k: Fraction):
    """t = -2k when 2k is an odd negative integer, else infinity."""
    doubled = 2 * Fraction(k)
    if doubled.denominator == 1 and doubled.numerator < 0 and doubled.numerator % 2:
        return int(-doubled)
    return INFINITY


def m_value(axis: int, n: int, k: Multiplicity) -> Fraction:
    """m_axis^(n) = n + (1 - (-1)^n) k_axis."""
    if n < 0:
        raise ValueError("degree must be non-negative")
    return Fraction(n) if n % 2 == 0 else n + 2 * k.k_axis(axis)


def apply_T(axis: int, f: Poly, k: Multiplicity) -> Poly:
    """The Dunkl operator T_axis, term by term via the monomial rule."""
    terms = {}
    for mono, coeff in f.terms.items():
        m = mono[axis - 1]
        if m == 0:
            continue
        scalar = m_value(axis, m, k)
        if not scalar:
            continue
        lowered = list(mono)
        lowered[axis - 1] = m - 1
        lowered = tuple(lowered)
        add = coeff * scalar
        if lowered in terms:
            terms[lowered] = terms[lowered] + add
        else:
            terms[lowered] = add
    return Poly(terms)


def apply_T_power(axis: int, f: Poly, k: Multiplicity, power: int) -> Poly:
    for _ in range(power):
        f = apply_T(axis, f, k)
    return f


def bracket(axis: int, i: int, j: int, k: Multiplicity) -> Poly:
    """[x_axis]^j_i = (prod_{h=i+1}^{j} m_axis^(h)) x_axis^i."""
    if not 0 <= i <= j:
        raise ValueError(f"bracket requires 0 <= i <= j, got i={i}, j={j}")
    scalar = Fraction(1)
    for h in range(i + 1, j + 1):
        scalar *= m_value(axis, h, k)
        if not scalar:
            break
    expo = [0, 0, 0]
    expo[axis - 1] = i
    return Poly.monomial(*expo, coeff=GaussRational(scalar))


def apply_dirac(f: SpinorPoly, k: Multiplicity, omit=None) -> SpinorPoly:
    """The Dirac operator sum_axis sigma_axis (x) T_axis, optionally with
    one axis omitted (the partial operator D(x_omit))."""
    result = SpinorPoly()
    for axis in (1, 2, 3):
        if axis == omit:
            continue
        term = SpinorPoly(apply_T(axis, f.up, k), apply_T(axis, f.down, k))
        result = result + (SIGMA[axis] * term)
    return result


def apply_dirac_power(f: SpinorPoly, k: Multiplicity, power: int, omit=None) -> SpinorPoly:
    for _ in range(power):
        f = apply_dirac(f, k, omit=omit)
    return f


def reflect(axis: int, f):
    """The coordinate reflection R_axis on Poly or SpinorPoly."""
    return f.reflect((axis,))
