"""Explicit ladder bases for the monogenics and their submodules.

Each regime of the threshold configuration admits a finite ladder
p_0, ..., p_top of Mat2-valued polynomials, built from a double sum of
bracket monomials with quarter-turn prefactors and Pauli coefficients.
One generator raises the ladder ((G1 - theta_i) p_i = p_{i+1}) and a
second lowers it ((G2 - theta*_i) p_i = phi_i p_{i-1}), so the columns
of the p_i sweep out explicit module bases.  The twelve cases differ
only in tabulated data: which axes carry the brackets, the summation
window, the sign exponents, the Pauli coefficient table, the generator
pair and the scalar sequences theta, theta*, phi.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .exact import (GaussRational, Mat2, ZERO, ZERO2, I2,
                    SIGMA1, SIGMA2, SIGMA3, half_power_of_minus_one)
from .dunkl import Multiplicity, apply_dirac, bracket
from .poly import MatPoly, SpinorPoly, monomials_of_degree
from .bi_action import apply_XYZ
from .linalg import ExactMatrix, rank

HALF = Fraction(1, 2)
MINUS_ROOT = half_power_of_minus_one(3)   # (-1)^(3/2) = -i
PLUS_ROOT = half_power_of_minus_one(1)    # (-1)^(1/2) = +i


def _sign(i: int) -> int:
    return 1 if i % 2 == 0 else -1


@dataclass(frozen=True)
class LadderCase:
    """Tabulated data for one ladder regime."""
    case_id: str
    parity: int           # required parity of n
    regime: str           # human-readable admissibility condition
    axes: tuple           # (window axis, rung axis, remainder axis)
    from_zero: bool       # window starts at 0 instead of the axis threshold
    capped: bool          # window cap is n - t(remainder) instead of n
    sh: int               # prefactor (-1)^(sh*h/2)
    sj: int               # prefactor (-1)^(sj*j/2)
    powered: Mat2         # A in the coefficient A^j B for odd h, odd i
    trailing: Mat2        # B in the coefficient A^j B
    mixed: dict           # {(h%2, i%2): (required j%2, Mat2)}
    generators: tuple     # (raising, lowering) in {'X','Y','Z'}
    theta: object         # callables (i, n, (k1,k2,k3)) -> Fraction
    theta_star: object
    phi: object

    def window(self, n: int, k: Multiplicity):
        """(low, high) of the bracket window j = low..high in degree n."""
        aj, _, ar = self.axes
        low = 0 if self.from_zero else int(k.t_axis(aj))
        high = n - int(k.t_axis(ar)) if self.capped else n
        return low, high

    def top_index(self, n: int, k: Multiplicity) -> int:
        low, high = self.window(n, k)
        return high - low

    def admissible(self, n: int, k: Multiplicity) -> bool:
        if n < 0 or n % 2 != self.parity:
            return False
        t1, t2, t3 = k.t
        if self.case_id.startswith("lt-t1t3"):
            return n < min(t1, t3)
        if self.case_id.startswith("t1-to-t1t2"):
            return t1 <= n < t1 + t2
        if self.case_id.startswith("t3-to-t2t3"):
            return t3 <= n < t2 + t3
        if self.case_id.startswith("ge-t1t3"):
            return t1 + t3 <= n
        if self.case_id.startswith("ge-t1t2"):
            return t1 + t2 <= n
        return t2 + t3 <= n

    def coefficient(self, h: int, i: int, j: int) -> Mat2:
        hp, ip = h % 2, i % 2
        if hp == 1 and ip == 1:
            return self.powered ** j * self.trailing
        if hp == 0 and ip == 0:
            return self.powered ** j
        entry = self.mixed.get((hp, ip))
        if entry is not None and entry[0] == j % 2:
            return entry[1]
        return ZERO2


def _binom(m: int, r: int) -> int:
    """Binomial coefficient with the subset convention: zero whenever
    the top argument drops below the bottom one (including below zero)."""
    if m < 0 or m < r:
        return 0
    return math.comb(m, r)


def _build_element(case: LadderCase, n: int, k: Multiplicity, i: int) -> MatPoly:
    aj, ah, ar = case.axes
    low, high = case.window(n, k)
    remainder_cap = n - low
    total = MatPoly()
    for h in range(i + 1):
        sign_h = half_power_of_minus_one(case.sh * h)
        for j in range(low, high - h + 1):
            coeff_mat = case.coefficient(h, i, j)
            if coeff_mat.is_zero():
                continue
            count = _binom((high - i - j) // 2 + (i - h) // 2, (i - h) // 2)
            if count == 0:
                continue
            scalar = sign_h * half_power_of_minus_one(case.sj * j) * count
            poly = (bracket(aj, j, high, k)
                    * bracket(ah, h, i, k)
                    * bracket(ar, n - h - j, remainder_cap, k))
            term = MatPoly.tensor(coeff_mat, poly).scale(scalar)
            total = total + term
    return total


class Ladder:
    """A fully built ladder: the elements and their scalar sequences."""

    __slots__ = ("case", "n", "k", "elements", "thetas", "theta_stars", "phis")

    def __init__(self, case: LadderCase, n: int, k: Multiplicity):
        if not case.admissible(n, k):
            raise ValueError(
                f"case {case.case_id} requires n {'even' if case.parity == 0 else 'odd'}"
                f" with {case.regime}; (n={n}, t={k.t_json()}) fails")
        top = case.top_index(n, k)
        kk = k.k
        object.__setattr__(self, "case", case)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "elements", tuple(
            _build_element(case, n, k, i) for i in range(top + 1)))
        object.__setattr__(self, "thetas", tuple(
            case.theta(i, n, kk) for i in range(top + 1)))
        object.__setattr__(self, "theta_stars", tuple(
            case.theta_star(i, n, kk) for i in range(top + 1)))
        object.__setattr__(self, "phis", tuple(
            case.phi(i, n, kk) for i in range(top + 1)))

    def __setattr__(self, name, value):
        raise AttributeError("Ladder is immutable")

    @property
    def top(self) -> int:
        return len(self.elements) - 1

    def columns(self, col: int, lo: int = 0, hi: int = None):
        """The spinor polynomials p_i . e_col for i = lo..hi."""
        if hi is None:
            hi = self.top
        return [self.elements[i].column(col) for i in range(lo, hi + 1)]


def _apply_generator(which: str, p: MatPoly, k: Multiplicity) -> MatPoly:
    return MatPoly.from_columns(apply_XYZ(which, p.column(0), k),
                                apply_XYZ(which, p.column(1), k))


def _mat2_row_vectors(elements, n: int):
    """Each element contributes its two rows as coordinate vectors; the
    elements are Mat2-independent iff these rows are independent over
    the scalars."""
    monos = monomials_of_degree(n, (1, 2, 3))
    index = {m: c for c, m in enumerate(monos)}
    width = len(monos)
    rows = []
    for p in elements:
        for r in (0, 1):
            vec = [ZERO] * (2 * width)
            for c in (0, 1):
                for mono, coeff in p.rows[r][c].terms.items():
                    vec[c * width + index[mono]] = coeff
            rows.append(vec)
    return rows, 2 * width


def verify_ladder(ladder: Ladder) -> dict:
    """Certificate for one built ladder: every column is monogenic, the
    elements are Mat2-independent, and both transfer recurrences hold
    including their endpoint relations."""
    case, n, k = ladder.case, ladder.n, ladder.k
    elements = ladder.elements
    monogenic = all(
        apply_dirac(p.column(c), k).is_zero()
        for p in elements for c in (0, 1))
    nonzero = all(not p.is_zero() for p in elements)

    rows, width = _mat2_row_vectors(elements, n)
    independent = rank(ExactMatrix(rows, ncols=width)) == len(rows)

    g_raise, g_lower = case.generators
    raising_ok = True
    for i, p in enumerate(elements):
        moved = _apply_generator(g_raise, p, k) - p.scale(
            GaussRational(ladder.thetas[i]))
        expect = elements[i + 1] if i < ladder.top else MatPoly()
        raising_ok = raising_ok and moved == expect
    lowering_ok = True
    for i, p in enumerate(elements):
        moved = _apply_generator(g_lower, p, k) - p.scale(
            GaussRational(ladder.theta_stars[i]))
        expect = elements[i - 1].scale(GaussRational(ladder.phis[i])) \
            if i > 0 else MatPoly()
        lowering_ok = lowering_ok and moved == expect

    ok = monogenic and nonzero and independent and raising_ok and lowering_ok
    return {
        "case": case.case_id,
        "n": n,
        "k": str(k),
        "t": k.t_json(),
        "count": len(elements),
        "generators": list(case.generators),
        "monogenic": bool(monogenic),
        "nonzero": bool(nonzero),
        "mat2_independent": bool(independent),
        "raising_ok": bool(raising_ok),
        "lowering_ok": bool(lowering_ok),
        "all_ok": bool(ok),
    }


# -- the twelve tabulated cases -------------------------------------------

def _make_cases():
    cases = []

    def add(case_id, parity, regime, axes, from_zero, capped, sh, sj,
            powered, trailing, mixed, generators, theta, theta_star, phi):
        cases.append(LadderCase(
            case_id=case_id, parity=parity, regime=regime, axes=axes,
            from_zero=from_zero, capped=capped, sh=sh, sj=sj,
            powered=powered, trailing=trailing, mixed=mixed,
            generators=generators, theta=theta, theta_star=theta_star,
            phi=phi))

    # n below both outer thresholds ------------------------------------
    add("lt-t1t3-odd", 1, "n < min(t1, t3)", (1, 2, 3), True, False, 1, 1,
        SIGMA2, SIGMA1,
        {(1, 0): (1, SIGMA3.__rmul__(MINUS_ROOT)), (0, 1): (0, -I2)},
        ("X", "Y"),
        lambda i, n, k: _sign(i) * (k[1] + k[2] + i + HALF),
        lambda i, n, k: -_sign(i) * (k[0] + k[2] + n - i + HALF),
        lambda i, n, k: Fraction(i * (n - i + 1)) if i % 2 == 0
        else (i + 2 * k[1]) * (n - i + 2 * k[0] + 1))

    add("lt-t1t3-even", 0, "n < min(t1, t3)", (1, 2, 3), True, False, -1, 1,
        SIGMA2, SIGMA1,
        {(1, 0): (0, SIGMA1), (0, 1): (1, -SIGMA2)},
        ("X", "Y"),
        lambda i, n, k: _sign(i) * (k[1] + k[2] + i + HALF),
        lambda i, n, k: _sign(i) * (k[0] + k[2] + n - i + HALF),
        lambda i, n, k: Fraction(i) * (i - n - 2 * k[0] - 1) if i % 2 == 0
        else (i + 2 * k[1]) * (i - n - 1))

    # n past the first threshold, below the pair sum -------------------
    add("t1-to-t1t2-odd", 1, "t1 <= n < t1 + t2", (1, 3, 2), False, False,
        -1, -1,
        SIGMA3, SIGMA1,
        {(1, 0): (1, SIGMA2.__rmul__(PLUS_ROOT)), (0, 1): (0, -I2)},
        ("X", "Z"),
        lambda i, n, k: _sign(i) * (k[1] + k[2] + i + HALF),
        lambda i, n, k: -_sign(i) * (n + k[0] + k[1] - i + HALF),
        lambda i, n, k: Fraction(i * (n - i + 1)) if i % 2 == 0
        else (i + 2 * k[2]) * (n - i + 2 * k[0] + 1))

    add("t1-to-t1t2-even", 0, "t1 <= n < t1 + t2", (1, 3, 2), False, False,
        1, -1,
        SIGMA3, SIGMA1,
        {(1, 0): (0, SIGMA1), (0, 1): (1, -SIGMA3)},
        ("X", "Z"),
        lambda i, n, k: _sign(i) * (k[1] + k[2] + i + HALF),
        lambda i, n, k: _sign(i) * (n + k[0] + k[1] - i + HALF),
        lambda i, n, k: Fraction(i) * (i - n - 2 * k[0] - 1) if i % 2 == 0
        else (i + 2 * k[2]) * (i - n - 1))

    add("t3-to-t2t3-odd", 1, "t3 <= n < t2 + t3", (3, 1, 2), False, False,
        1, 1,
        SIGMA1, SIGMA3,
        {(1, 0): (1, SIGMA2.__rmul__(MINUS_ROOT)), (0, 1): (0, -I2)},
        ("Z", "X"),
        lambda i, n, k: _sign(i) * (k[0] + k[1] + i + HALF),
        lambda i, n, k: -_sign(i) * (k[1] + k[2] + n - i + HALF),
        lambda i, n, k: Fraction(i * (n - i + 1)) if i % 2 == 0
        else (i + 2 * k[0]) * (n - i + 2 * k[2] + 1))

    add("t3-to-t2t3-even", 0, "t3 <= n < t2 + t3", (3, 1, 2), False, False,
        -1, 1,
        SIGMA1, SIGMA3,
        {(1, 0): (0, SIGMA3), (0, 1): (1, -SIGMA1)},
        ("Z", "X"),
        lambda i, n, k: _sign(i) * (k[0] + k[1] + i + HALF),
        lambda i, n, k: _sign(i) * (n + k[1] + k[2] - i + HALF),
        lambda i, n, k: Fraction(i) * (i - n - 2 * k[2] - 1) if i % 2 == 0
        else (i + 2 * k[0]) * (i - n - 1))

    # n at or past a pair sum -------------------------------------------
    add("ge-t1t3-odd", 1, "n >= t1 + t3", (1, 2, 3), False, True, 1, 1,
        SIGMA2, SIGMA1,
        {(0, 1): (1, SIGMA2), (1, 0): (0, -SIGMA1)},
        ("X", "Y"),
        lambda i, n, k: _sign(i) * (k[2] - k[1] - i - HALF),
        lambda i, n, k: -_sign(i) * (k[0] + k[2] + n - i + HALF),
        lambda i, n, k: Fraction(i) * (i - 2 * k[0] - 2 * k[2] - n - 1)
        if i % 2 == 0 else (i + 2 * k[1]) * (i - 2 * k[2] - n - 1))

    add("ge-t1t3-even", 0, "n >= t1 + t3", (1, 2, 3), False, True, -1, 1,
        SIGMA2, SIGMA1,
        {(1, 0): (1, SIGMA3.__rmul__(PLUS_ROOT)), (0, 1): (0, I2)},
        ("X", "Y"),
        lambda i, n, k: _sign(i) * (k[2] - k[1] - i - HALF),
        lambda i, n, k: _sign(i) * (k[0] + k[2] + n - i + HALF),
        lambda i, n, k: Fraction(i) * (2 * k[2] + n - i + 1) if i % 2 == 0
        else (i + 2 * k[1]) * (2 * k[0] + 2 * k[2] + n - i + 1))

    add("ge-t1t2-odd", 1, "n >= t1 + t2", (2, 3, 1), False, True, 1, 1,
        SIGMA3, SIGMA2,
        {(0, 1): (1, SIGMA3), (1, 0): (0, -SIGMA2)},
        ("Y", "Z"),
        lambda i, n, k: _sign(i) * (k[0] - k[2] - i - HALF),
        lambda i, n, k: -_sign(i) * (k[1] + k[0] + n - i + HALF),
        lambda i, n, k: Fraction(i) * (i - 2 * k[1] - 2 * k[0] - n - 1)
        if i % 2 == 0 else (i + 2 * k[2]) * (i - 2 * k[0] - n - 1))

    add("ge-t1t2-even", 0, "n >= t1 + t2", (2, 3, 1), False, True, -1, 1,
        SIGMA3, SIGMA2,
        {(1, 0): (1, SIGMA1.__rmul__(PLUS_ROOT)), (0, 1): (0, I2)},
        ("Y", "Z"),
        lambda i, n, k: _sign(i) * (k[0] - k[2] - i - HALF),
        lambda i, n, k: _sign(i) * (k[0] + k[1] + n - i + HALF),
        lambda i, n, k: Fraction(i) * (2 * k[0] + n - i + 1) if i % 2 == 0
        else (i + 2 * k[2]) * (2 * k[1] + 2 * k[0] + n - i + 1))

    add("ge-t2t3-odd", 1, "n >= t2 + t3", (3, 1, 2), False, True, 1, 1,
        SIGMA1, SIGMA3,
        {(0, 1): (1, SIGMA1), (1, 0): (0, -SIGMA3)},
        ("Z", "X"),
        lambda i, n, k: _sign(i) * (k[1] - k[0] - i - HALF),
        lambda i, n, k: -_sign(i) * (k[2] + k[1] + n - i + HALF),
        lambda i, n, k: Fraction(i) * (i - 2 * k[2] - 2 * k[1] - n - 1)
        if i % 2 == 0 else (i + 2 * k[0]) * (i - 2 * k[1] - n - 1))

    add("ge-t2t3-even", 0, "n >= t2 + t3", (3, 1, 2), False, True, -1, 1,
        SIGMA1, SIGMA3,
        {(1, 0): (1, SIGMA2.__rmul__(PLUS_ROOT)), (0, 1): (0, I2)},
        ("Z", "X"),
        lambda i, n, k: _sign(i) * (k[1] - k[0] - i - HALF),
        lambda i, n, k: _sign(i) * (k[1] + k[2] + n - i + HALF),
        lambda i, n, k: Fraction(i) * (2 * k[1] + n - i + 1) if i % 2 == 0
        else (i + 2 * k[0]) * (2 * k[1] + 2 * k[2] + n - i + 1))

    return {c.case_id: c for c in cases}


CASES = _make_cases()
CASE_IDS = tuple(CASES)


def build_ladder(case_id: str, n: int, k: Multiplicity) -> Ladder:
    if case_id not in CASES:
        raise ValueError(
            f"unknown ladder case {case_id!r}; choose from {', '.join(CASE_IDS)}")
    return Ladder(CASES[case_id], n, k)


def admissible_cases(n: int, k: Multiplicity):
    """The case ids whose hypotheses hold at (n, k)."""
    return [cid for cid, case in CASES.items() if case.admissible(n, k)]


def column_split_certificate(ladder: Ladder):
    """Check the column-range bases the ladder provides.

    Where the stronger hypothesis of the matching basis statement holds
    at (n, k), the designated column ranges of the two ladder columns
    must be bases of the named space or subquotient: the right count,
    inside the space, and independent (modulo the denominator).
    Returns None when no basis statement applies at (n, k).
    """
    from .bi_action import Subquotient
    from .monogenics import compute_Mn
    from .submodules import submodule_M

    n, k, cid = ladder.n, ladder.k, ladder.case.case_id
    t1, t2, t3 = k.t
    splits = []
    if cid.startswith("lt-t1t3"):
        if n < min(t1, t2, t3):
            splits.append(("M", None, None, 0, n))
        elif t2 <= n < min(t1, t3):
            splits.append(("M(x2)", (2,), None, int(t2), n))
            splits.append(("M/M(x2)", None, (2,), 0, int(t2) - 1))
    elif cid.startswith("t1-to-t1t2"):
        if t1 + t3 <= n < t2:
            splits.append(("M(x1)nM(x3)", (1, 3), None, int(t3), n - int(t1)))
            splits.append(("M(x1)/M(x1)nM(x3)", (1,), (1, 3), 0, int(t3) - 1))
            splits.append(("M/M(x3)", None, (3,), 0, int(t3) - 1))
    elif cid.startswith("t3-to-t2t3"):
        if t1 + t3 <= n < t2:
            splits.append(("M(x1)nM(x3)", (1, 3), None, int(t1), n - int(t3)))
            splits.append(("M(x3)/M(x1)nM(x3)", (3,), (1, 3), 0, int(t1) - 1))
            splits.append(("M/M(x1)", None, (1,), 0, int(t1) - 1))
    elif cid.startswith("ge-t1t3"):
        if n >= t1 + t2 + t3:
            splits.append(("M(x1)nM(x2)nM(x3)", (1, 2, 3), None,
                           int(t2), n - int(t1) - int(t3)))
            splits.append(("M/M(x2)", None, (2,), 0, int(t2) - 1))
    elif cid.startswith("ge-t1t2"):
        if n >= t1 + t2 + t3:
            splits.append(("M(x1)nM(x2)nM(x3)", (1, 2, 3), None,
                           int(t3), n - int(t1) - int(t2)))
            splits.append(("M/M(x3)", None, (3,), 0, int(t3) - 1))
    elif cid.startswith("ge-t2t3"):
        if n >= t1 + t2 + t3:
            splits.append(("M(x1)nM(x2)nM(x3)", (1, 2, 3), None,
                           int(t1), n - int(t2) - int(t3)))
            splits.append(("M/M(x1)", None, (1,), 0, int(t1) - 1))
    if not splits:
        return None

    spaces = {None: compute_Mn(n, k)}

    def space(axes):
        if axes not in spaces:
            spaces[axes] = submodule_M(n, k, *axes)
        return spaces[axes]

    reports = []
    for name, num_axes, den_axes, lo, hi in splits:
        numerator = space(num_axes) if num_axes else spaces[None]
        denominator = space(den_axes) if den_axes else None
        sq = Subquotient(numerator, denominator, name=name)
        entry = {"target": name, "columns": [lo, hi], "dim": sq.dim}
        try:
            vectors = [sq.reduce_spinor(f)
                       for c in (0, 1) for f in ladder.columns(c, lo, hi)]
        except ValueError as exc:
            entry.update({"ok": False, "error": str(exc)})
            reports.append(entry)
            continue
        count_ok = len(vectors) == sq.dim
        independent = (sq.dim == 0 and not vectors) or (
            vectors and rank(ExactMatrix(vectors, ncols=sq.dim)) == len(vectors))
        entry.update({"count": len(vectors),
                      "count_ok": bool(count_ok),
                      "independent": bool(independent),
                      "ok": bool(count_ok and independent)})
        reports.append(entry)
    return {"case": cid, "n": n, "k": str(k),
            "splits": reports,
            "all_ok": all(r["ok"] for r in reports)}


def smallest_admissible_n(case_id: str, k: Multiplicity, count: int = 2,
                          limit: int = 60):
    """The first `count` degrees at which the case applies."""
    case = CASES[case_id]
    found = []
    for n in range(limit + 1):
        if case.admissible(n, k):
            found.append(n)
            if len(found) == count:
                break
    return found
