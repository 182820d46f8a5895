"""End-to-end classification of the degree-n monogenics as a module.

For each threshold regime the module has a known chain of submodules
whose factors are direct sums of copies of the finite irreducible
modules E_d / O_d, possibly twisted.  classify() computes every factor
exactly, builds the matrices of X, Y, Z on it, and checks it against
the predicted copies: dimension, central scalar action, trace data,
and (where an explicit ladder basis is available) an actual splitting
into copies with identical matrices and matching module invariants.
"""

from __future__ import annotations

from fractions import Fraction

from .exact import GaussRational
from .dunkl import Multiplicity
from .linalg import ExactMatrix, rank
from .monogenics import compute_Mn, dim_formula_status
from .submodules import submodule_M, solve_in_span
from .bi_action import (Subquotient, TwistElement, apply_XYZ,
                        central_scalars, matrices_on, scalar_of,
                        verify_bi_relations)
from .irreps import (IrrepSpec, build_irrep, is_irreducible_by_criterion,
                     is_irreducible_burnside, BURNSIDE_DIM_CAP)
from .ladders import build_ladder

_IRREP_CACHE = {}


def _built(spec: IrrepSpec):
    if spec not in _IRREP_CACHE:
        _IRREP_CACHE[spec] = build_irrep(spec)
    return _IRREP_CACHE[spec]


def _trace_profile(X, Y, Z):
    return (X.trace(), Y.trace(), Z.trace(),
            (X * Y).trace(), (X * X).trace(), (Y * Y).trace())


def _spec_profile(spec: IrrepSpec):
    M = _built(spec)
    return _trace_profile(M.X, M.Y, M.Z)


def _spec_invariants(spec: IrrepSpec):
    M = _built(spec)
    kap, lam, mu = (scalar_of(C) for C in M.centrals())
    return _trace_profile(M.X, M.Y, M.Z) + (kap, lam, mu)


class Factor:
    """One subquotient factor and its predicted decomposition."""

    def __init__(self, name, numerator, denominator, copies,
                 alternate=None, alternate_condition=None,
                 irreducible_condition=None, ladder=None):
        self.name = name
        self.numerator = numerator          # MonogenicSpace
        self.denominator = denominator      # MonogenicSpace or None
        self.copies = copies                # list of IrrepSpec, one per copy
        self.alternate = alternate          # isomorphic relabeling, or None
        self.alternate_condition = alternate_condition  # bool or None
        self.irreducible_condition = irreducible_condition  # bool or None
        self.ladder = ladder                # (case_id, lo, hi) or None


def _copy_matrices(sq: Subquotient, spinors, k):
    """Matrices of X, Y, Z on the span of the given spinors inside the
    subquotient.  Raises ValueError when the span is not closed."""
    basis = [sq.reduce_spinor(f) for f in spinors]
    if rank(ExactMatrix(basis, ncols=sq.dim)) != len(basis):
        raise ValueError("copy vectors are dependent in the subquotient")
    mats = []
    for which in ("X", "Y", "Z"):
        cols = [solve_in_span(basis, sq.reduce_spinor(apply_XYZ(which, f, k)))
                for f in spinors]
        mats.append(ExactMatrix.from_columns(cols, nrows=len(basis)))
    return tuple(mats)


def _verify_ladder_split(factor: Factor, sq: Subquotient, n, k):
    """Split the factor into its two ladder-column copies and compare
    their matrices and invariants with the predicted single copy."""
    case_id, lo, hi = factor.ladder
    spec = factor.copies[0]
    ladder = build_ladder(case_id, n, k)
    report = {"case": case_id, "columns": [lo, hi]}
    try:
        copy_mats = [_copy_matrices(sq, ladder.columns(c, lo, hi), k)
                     for c in (0, 1)]
    except ValueError as exc:
        report.update({"split_ok": False, "error": str(exc)})
        return report
    copies_match = copy_mats[0] == copy_mats[1]
    X, Y, Z = copy_mats[0]
    kap, lam, mu = (scalar_of(C) for C in (X * Y + Y * X - Z,
                                           Y * Z + Z * Y - X,
                                           Z * X + X * Z - Y))
    measured = _trace_profile(X, Y, Z) + (kap, lam, mu)
    invariants_ok = measured == _spec_invariants(spec)
    # Each copy must fill half the factor.
    sizes_ok = 2 * X.nrows == sq.dim
    report.update({
        "split_ok": bool(copies_match and invariants_ok and sizes_ok),
        "copies_match": bool(copies_match),
        "copy_invariants_ok": bool(invariants_ok),
        "sizes_ok": bool(sizes_ok),
    })
    return report


def _verify_factor(factor: Factor, n: int, k: Multiplicity) -> dict:
    sq = Subquotient(factor.numerator, factor.denominator, name=factor.name)
    mats = matrices_on(sq, k)
    expected_dim = sum(spec.dim for spec in factor.copies)
    dim_ok = sq.dim == expected_dim

    relations = verify_bi_relations(mats, n, k)
    kappa, lam, mu = central_scalars(n, k)
    scalars_ok = relations["all_ok"]
    # Every predicted copy must carry the same central scalars as the
    # degree-n monogenics themselves.
    spec_scalars_ok = all(
        spec.central_scalars() == (kappa, lam, mu)
        for spec in factor.copies)

    measured = _trace_profile(mats.X, mats.Y, mats.Z)
    predicted = [sum(vals) for vals in zip(
        *(_spec_profile(spec) for spec in factor.copies))] \
        if factor.copies else [0] * 6
    traces_ok = all(m == p for m, p in zip(measured, predicted))

    distinct = []
    for spec in factor.copies:
        if spec not in distinct:
            distinct.append(spec)
    irreducible = {}
    criterion_ok = True
    for spec in distinct:
        crit = is_irreducible_by_criterion(spec)
        entry = {"criterion": bool(crit)}
        if spec.dim <= BURNSIDE_DIM_CAP:
            burnside = is_irreducible_burnside(_built(spec))
            entry["burnside"] = bool(burnside)
            entry["agree"] = bool(burnside == crit)
            criterion_ok = criterion_ok and burnside == crit
        if factor.irreducible_condition:
            entry["claimed"] = True
            criterion_ok = criterion_ok and crit
        irreducible[spec.label()] = entry

    alternate_report = None
    if factor.alternate is not None:
        alternate_report = {
            "label": factor.alternate.label(),
            "condition_holds": bool(factor.alternate_condition),
        }
        if factor.alternate_condition:
            same = _spec_invariants(factor.alternate) == \
                _spec_invariants(factor.copies[0])
            alternate_report["invariants_match"] = bool(same)

    ladder_report = None
    if factor.ladder is not None:
        ladder_report = _verify_ladder_split(factor, sq, n, k)

    ok = (dim_ok and scalars_ok and spec_scalars_ok and traces_ok
          and criterion_ok
          and (ladder_report is None or ladder_report["split_ok"])
          and (alternate_report is None
               or not factor.alternate_condition
               or alternate_report.get("invariants_match", False)))
    return {
        "name": factor.name,
        "copies": [spec.label() for spec in factor.copies],
        "dim": sq.dim,
        "expected_dim": expected_dim,
        "dim_ok": bool(dim_ok),
        "relations_ok": bool(relations["relations_ok"]),
        "scalars_ok": bool(scalars_ok),
        "spec_scalars_ok": bool(spec_scalars_ok),
        "traces_ok": bool(traces_ok),
        "irreducibility": irreducible,
        "alternate": alternate_report,
        "ladder_split": ladder_report,
        "ok": bool(ok),
    }


# -- the factor tables ----------------------------------------------------

def _tw(text: str) -> TwistElement:
    return TwistElement.parse(text)


def _factor_table(n: int, k: Multiplicity, case: str, spaces: dict):
    k1, k2, k3 = k.k
    t1, t2, t3 = k.t
    S = k1 + k2 + k3
    h = Fraction(n + 1, 2)
    odd = n % 2 == 1
    whole = spaces["M"]

    def E(d, a, b, c, tw=None):
        return IrrepSpec("E", int(d), a, b, c,
                         twist=_tw(tw) if tw else TwistElement.identity())

    def O(d, a, b, c, tw=None):
        return IrrepSpec("O", int(d), a, b, c,
                         twist=_tw(tw) if tw else TwistElement.identity())

    factors = []
    if case == "I":
        if odd:
            primary = E(n, k2 + k3 + h, -k1 - k3 - h, k1 + k2 + h)
            alt = E(n, k2 + k3 + h, k1 + k3 + h, k1 + k2 + h)
            ladder = ("lt-t1t3-odd", 0, n)
        else:
            primary = O(n, k2 + k3 + h, -k1 - k3 - h, -k1 - k2 - h, "(1,-1)")
            alt = O(n, k2 + k3 + h, k1 + k3 + h, k1 + k2 + h)
            ladder = ("lt-t1t3-even", 0, n)
        nonneg = min(k1, k2, k3) >= 0
        factors.append(Factor("M", whole, None, [primary] * 2,
                              alternate=alt, alternate_condition=nonneg,
                              irreducible_condition=nonneg, ladder=ladder))

    elif case == "II(x2)":
        cond = k1 >= 0 and k3 >= 0
        sub = spaces["M(x2)"]
        par = "odd" if odd else "even"
        if odd:
            f1 = O(n - t2, k3 + h, -S - h, -k1 - h, "(-1,-1)")
            a1 = O(n - t2, -k3 - h, S + h, -k1 - h)
            f2 = O(t2 - 1, k3, -S - n - 1, k1)
            a2 = None
        else:
            f1 = E(n - t2, k3 + h, -S - h, -k1 - h, "(-1,1)")
            a1 = E(n - t2, k3 + h, S + h, k1 + h, "(-1,1)")
            f2 = O(t2 - 1, k3, -S - n - 1, -k1, "(1,-1)")
            a2 = O(t2 - 1, k3, S + n + 1, k1)
        factors.append(Factor(
            "M(x2)", sub, None, [f1] * 2, alternate=a1,
            alternate_condition=cond, irreducible_condition=cond,
            ladder=(f"lt-t1t3-{par}", int(t2), n)))
        factors.append(Factor(
            "M/M(x2)", whole, sub, [f2] * 2, alternate=a2,
            alternate_condition=cond if a2 else None,
            irreducible_condition=cond,
            ladder=(f"lt-t1t3-{par}", 0, int(t2) - 1)))

    elif case == "II(x3)":
        cond = k1 >= 0 and k2 >= 0
        sub = spaces["M(x3)"]
        if odd:
            f1 = O(n - t3, k1 + h, -S - h, -k2 - h, "(-1,-1);(1 3 2)")
            a1 = O(n - t3, -k2 - h, -k1 - h, S + h)
            f2 = O(t3 - 1, k1, -S - n - 1, k2, "(1 3 2)")
            a2 = O(t3 - 1, k2, k1, -S - n - 1)
        else:
            f1 = E(n - t3, k1 + h, -S - h, -k2 - h, "(-1,1);(1 3 2)")
            a1 = E(n - t3, k2 + h, k1 + h, S + h, "(-1,-1)")
            f2 = O(t3 - 1, k1, -S - n - 1, -k2, "(1,-1);(1 3 2)")
            a2 = O(t3 - 1, k2, k1, S + n + 1)
        factors.append(Factor("M(x3)", sub, None, [f1] * 2, alternate=a1,
                              alternate_condition=cond,
                              irreducible_condition=cond))
        factors.append(Factor("M/M(x3)", whole, sub, [f2] * 2, alternate=a2,
                              alternate_condition=cond,
                              irreducible_condition=cond))

    elif case == "II(x1)":
        cond = k2 >= 0 and k3 >= 0
        sub = spaces["M(x1)"]
        if odd:
            f1 = O(n - t1, k2 + h, -S - h, -k3 - h, "(-1,-1);(1 2 3)")
            a1 = O(n - t1, S + h, -k3 - h, -k2 - h)
            f2 = O(t1 - 1, k2, -S - n - 1, k3, "(1 2 3)")
            a2 = O(t1 - 1, -S - n - 1, k3, k2)
        else:
            f1 = E(n - t1, k2 + h, -S - h, -k3 - h, "(-1,1);(1 2 3)")
            a1 = E(n - t1, S + h, k3 + h, k2 + h, "(1,-1)")
            f2 = O(t1 - 1, k2, -S - n - 1, -k3, "(1,-1);(1 2 3)")
            a2 = O(t1 - 1, S + n + 1, k3, k2)
        factors.append(Factor("M(x1)", sub, None, [f1] * 2, alternate=a1,
                              alternate_condition=cond,
                              irreducible_condition=cond))
        factors.append(Factor("M/M(x1)", whole, sub, [f2] * 2, alternate=a2,
                              alternate_condition=cond,
                              irreducible_condition=cond))

    elif case == "III(x1,x3)":
        cond = k2 >= 0
        m1, m3 = spaces["M(x1)"], spaces["M(x3)"]
        meet = spaces["M(x1,x3)"]
        par = "odd" if odd else "even"
        if odd:
            f1 = E(n - t1 - t3, k1 + k2 + h, -k2 - k3 - h, h, "(-1,-1);(2 3)")
            a1 = E(n - t1 - t3, k1 + k2 + h, h, k2 + k3 + h, "(-1,1)")
            f2 = O(t3 - 1, k2, -S - n - 1, k1, "(2 3)")
            a2 = O(t3 - 1, k2, k1, -S - n - 1)
            f3 = O(t1 - 1, k2, -S - n - 1, k3, "(1 2 3)")
            a3 = O(t1 - 1, -S - n - 1, k3, k2)
        else:
            f1 = O(n - t1 - t3, k1 + k2 + h, -k2 - k3 - h, -h, "(-1,1);(2 3)")
            a1 = O(n - t1 - t3, -k1 - k2 - h, h, -k2 - k3 - h)
            f2 = O(t3 - 1, k2, -S - n - 1, -k1, "(1,-1);(2 3)")
            a2 = O(t3 - 1, k2, k1, S + n + 1)
            f3 = O(t1 - 1, k2, -S - n - 1, -k3, "(1,-1);(1 2 3)")
            a3 = O(t1 - 1, S + n + 1, k3, k2)
        lad1 = (f"t1-to-t1t2-{par}", int(t3), n - int(t1))
        factors.append(Factor("M(x1)nM(x3)", meet, None, [f1] * 2,
                              alternate=a1, alternate_condition=cond,
                              irreducible_condition=cond, ladder=lad1))
        lad2 = (f"t1-to-t1t2-{par}", 0, int(t3) - 1)
        factors.append(Factor("M(x1)/M(x1)nM(x3)", m1, meet, [f2] * 2,
                              alternate=a2, alternate_condition=cond,
                              irreducible_condition=cond, ladder=lad2))
        factors.append(Factor("M/M(x3)", whole, m3, [f2] * 2,
                              alternate=a2, alternate_condition=cond,
                              irreducible_condition=cond, ladder=lad2))
        lad3 = (f"t3-to-t2t3-{par}", 0, int(t1) - 1)
        factors.append(Factor("M(x3)/M(x1)nM(x3)", m3, meet, [f3] * 2,
                              alternate=a3, alternate_condition=cond,
                              irreducible_condition=cond, ladder=lad3))
        factors.append(Factor("M/M(x1)", whole, m1, [f3] * 2,
                              alternate=a3, alternate_condition=cond,
                              irreducible_condition=cond, ladder=lad3))

    elif case == "III(x1,x2)":
        cond = k3 >= 0
        m1, m2 = spaces["M(x1)"], spaces["M(x2)"]
        meet = spaces["M(x1,x2)"]
        if odd:
            f1 = E(n - t1 - t2, k2 + k3 + h, -k1 - k3 - h, h, "(-1,-1);(1 2)")
            a1 = E(n - t1 - t2, k1 + k3 + h, k2 + k3 + h, h, "(-1,-1)")
            f2 = O(t1 - 1, k3, -S - n - 1, k2, "(1 2)")
            a2 = O(t1 - 1, -S - n - 1, k3, k2)
            f3 = O(t2 - 1, k3, -S - n - 1, k1)
            a3 = None
        else:
            f1 = O(n - t1 - t2, k2 + k3 + h, -k1 - k3 - h, -h, "(-1,1);(1 2)")
            a1 = O(n - t1 - t2, -k1 - k3 - h, -k2 - k3 - h, h)
            f2 = O(t1 - 1, k3, -S - n - 1, -k2, "(1,-1);(1 2)")
            a2 = O(t1 - 1, S + n + 1, k3, k2)
            f3 = O(t2 - 1, k3, -S - n - 1, -k1, "(1,-1)")
            a3 = O(t2 - 1, k3, S + n + 1, k1)
        factors.append(Factor("M(x1)nM(x2)", meet, None, [f1] * 2,
                              alternate=a1, alternate_condition=cond,
                              irreducible_condition=cond))
        factors.append(Factor("M(x2)/M(x1)nM(x2)", m2, meet, [f2] * 2,
                              alternate=a2,
                              alternate_condition=cond if a2 else None,
                              irreducible_condition=cond))
        factors.append(Factor("M/M(x1)", whole, m1, [f2] * 2,
                              alternate=a2,
                              alternate_condition=cond if a2 else None,
                              irreducible_condition=cond))
        factors.append(Factor("M(x1)/M(x1)nM(x2)", m1, meet, [f3] * 2,
                              alternate=a3,
                              alternate_condition=cond if a3 else None,
                              irreducible_condition=cond))
        factors.append(Factor("M/M(x2)", whole, m2, [f3] * 2,
                              alternate=a3,
                              alternate_condition=cond if a3 else None,
                              irreducible_condition=cond))

    elif case == "III(x2,x3)":
        cond = k1 >= 0
        m2, m3 = spaces["M(x2)"], spaces["M(x3)"]
        meet = spaces["M(x2,x3)"]
        if odd:
            f1 = E(n - t2 - t3, k1 + k3 + h, -k1 - k2 - h, h, "(-1,-1);(1 3)")
            a1 = E(n - t2 - t3, h, k1 + k2 + h, k1 + k3 + h, "(1,-1)")
            f2 = O(t2 - 1, k1, -S - n - 1, k3, "(1 3)")
            a2 = O(t2 - 1, k3, -S - n - 1, k1)
            f3 = O(t3 - 1, k1, -S - n - 1, k2, "(1 3 2)")
            a3 = O(t3 - 1, k2, k1, -S - n - 1)
        else:
            f1 = O(n - t2 - t3, k1 + k3 + h, -k1 - k2 - h, -h, "(-1,1);(1 3)")
            a1 = O(n - t2 - t3, h, -k1 - k2 - h, -k1 - k3 - h)
            f2 = O(t2 - 1, k1, -S - n - 1, -k3, "(1,-1);(1 3)")
            a2 = O(t2 - 1, k3, S + n + 1, k1)
            f3 = O(t3 - 1, k1, -S - n - 1, -k2, "(1,-1);(1 3 2)")
            a3 = O(t3 - 1, k2, k1, S + n + 1)
        factors.append(Factor("M(x2)nM(x3)", meet, None, [f1] * 2,
                              alternate=a1, alternate_condition=cond,
                              irreducible_condition=cond))
        factors.append(Factor("M(x3)/M(x2)nM(x3)", m3, meet, [f2] * 2,
                              alternate=a2, alternate_condition=cond,
                              irreducible_condition=cond))
        factors.append(Factor("M/M(x2)", whole, m2, [f2] * 2,
                              alternate=a2, alternate_condition=cond,
                              irreducible_condition=cond))
        factors.append(Factor("M(x2)/M(x2)nM(x3)", m2, meet, [f3] * 2,
                              alternate=a3, alternate_condition=cond,
                              irreducible_condition=cond))
        factors.append(Factor("M/M(x3)", whole, m3, [f3] * 2,
                              alternate=a3, alternate_condition=cond,
                              irreducible_condition=cond))

    elif case == "IV":
        m1, m2, m3 = spaces["M(x1)"], spaces["M(x2)"], spaces["M(x3)"]
        meet = spaces["M(x1,x2,x3)"]
        par = "odd" if odd else "even"
        if odd:
            f1 = O(n - t1 - t2 - t3, k1 + h, k2 + h, k3 + h)
            a1 = O(n - t1 - t2 - t3, k1 + h, -k2 - h, -k3 - h, "(1,-1)")
            f2 = O(t1 - 1, -S - n - 1, k3, k2)
            a2 = O(t1 - 1, -k2, -S - n - 1, -k3, "(-1,1);(1 2 3)")
            f3 = O(t2 - 1, k3, -S - n - 1, k1)
            a3 = O(t2 - 1, -k3, -S - n - 1, -k1, "(-1,1)")
            f4 = O(t3 - 1, k2, k1, -S - n - 1)
            a4 = O(t3 - 1, -k1, -S - n - 1, -k2, "(-1,1);(1 3 2)")
        else:
            f1 = E(n - t1 - t2 - t3, k1 + h, k2 + h, k3 + h)
            a1 = E(n - t1 - t2 - t3, k1 + h, -k2 - h, k3 + h)
            f2 = O(t1 - 1, S + n + 1, k3, k2)
            a2 = O(t1 - 1, -k2, -S - n - 1, k3, "(-1,-1);(1 2 3)")
            f3 = O(t2 - 1, k3, S + n + 1, k1)
            a3 = O(t2 - 1, -k3, -S - n - 1, k1, "(-1,-1)")
            f4 = O(t3 - 1, k2, k1, S + n + 1)
            a4 = O(t3 - 1, -k1, -S - n - 1, k2, "(-1,-1);(1 3 2)")
        factors.append(Factor(
            "M(x1)nM(x2)nM(x3)", meet, None, [f1] * 2,
            alternate=a1, alternate_condition=True,
            irreducible_condition=True,
            ladder=(f"ge-t1t3-{par}", int(t2), n - int(t1) - int(t3))))
        factors.append(Factor(
            "M/M(x1)", whole, m1, [f2] * 2,
            alternate=a2, alternate_condition=True,
            irreducible_condition=True,
            ladder=(f"ge-t2t3-{par}", 0, int(t1) - 1)))
        factors.append(Factor(
            "M/M(x2)", whole, m2, [f3] * 2,
            alternate=a3, alternate_condition=True,
            irreducible_condition=True,
            ladder=(f"ge-t1t3-{par}", 0, int(t2) - 1)))
        factors.append(Factor(
            "M/M(x3)", whole, m3, [f4] * 2,
            alternate=a4, alternate_condition=True,
            irreducible_condition=True,
            ladder=(f"ge-t1t2-{par}", 0, int(t3) - 1)))
        factors.append(Factor("M(x1)/M(x1)nM(x2)nM(x3)", m1, meet,
                              [f3, f3, f4, f4],
                              irreducible_condition=True))
        factors.append(Factor("M(x2)/M(x1)nM(x2)nM(x3)", m2, meet,
                              [f2, f2, f4, f4],
                              irreducible_condition=True))
        factors.append(Factor("M(x3)/M(x1)nM(x2)nM(x3)", m3, meet,
                              [f2, f2, f3, f3],
                              irreducible_condition=True))
    return factors


_CASE_SPACES = {
    "I": (),
    "II(x1)": ((1,),),
    "II(x2)": ((2,),),
    "II(x3)": ((3,),),
    "III(x1,x3)": ((1,), (3,), (1, 3)),
    "III(x1,x2)": ((1,), (2,), (1, 2)),
    "III(x2,x3)": ((2,), (3,), (2, 3)),
    "IV": ((1,), (2,), (3,), (1, 2, 3)),
}


def classify(n: int, k: Multiplicity) -> dict:
    """Full classification certificate for the degree-n monogenics."""
    status = dim_formula_status(n, k)
    whole = compute_Mn(n, k)
    result = {
        "n": n,
        "k": str(k),
        "t": k.t_json(),
        "dim": whole.dim,
        "dim_formula": status,
        "case": status["case"],
    }
    if status["case"] is None:
        result["factors"] = []
        result["note"] = ("no structural prediction applies at this point"
                          if not status["applies"]
                          else "dimension formula applies but no case fires")
        result["all_ok"] = (status["predicted"] == whole.dim
                            if status["applies"] else True)
        return result
    spaces = {"M": whole}
    for axes in _CASE_SPACES[status["case"]]:
        name = "M(" + ",".join(f"x{a}" for a in axes) + ")"
        spaces[name] = submodule_M(n, k, *axes)
    factors = _factor_table(n, k, status["case"], spaces)
    reports = [_verify_factor(f, n, k) for f in factors]
    result["factors"] = reports
    dim_ok = status["predicted"] is None or status["predicted"] == whole.dim
    result["all_ok"] = bool(dim_ok and all(r["ok"] for r in reports))
    return result
