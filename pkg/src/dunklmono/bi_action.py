"""The operators X, Y, Z on spinor polynomials, their matrices on
subspaces and subquotients, verification of the central-element
relations and scalar actions, and the twist group {+-1}^2 x| S3.

Each generator is a sum of an angular Dunkl term twisted by a Pauli
matrix and double reflection, a half term, and two weighted single
reflections.  The generators are indexed 1, 2, 3 for X, Y, Z.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import GaussRational, Mat2, SIGMA, ZERO, ONE, I as IMAG
from .dunkl import Multiplicity, apply_T
from .linalg import ExactMatrix
from .monogenics import MonogenicSpace
from .poly import Poly, SpinorPoly, coordinates
from .submodules import quotient_data, solve_in_span

GENERATOR_NAMES = ("X", "Y", "Z")


def _angular(j_axis: int, l_axis: int, f: SpinorPoly, k: Multiplicity) -> SpinorPoly:
    """x_l * T_j(f) - x_j * T_l(f), componentwise."""
    xl = Poly.variable(l_axis)
    xj = Poly.variable(j_axis)

    def comp(p: Poly) -> Poly:
        return xl * apply_T(j_axis, p, k) - xj * apply_T(l_axis, p, k)

    return SpinorPoly(comp(f.up), comp(f.down))


def apply_XYZ(which: str, f: SpinorPoly, k: Multiplicity) -> SpinorPoly:
    """Evaluate the generator X, Y or Z on a spinor polynomial.

    For generator index i with (j, l) the cyclic successors:
      G_i f = i * sigma_i (x_l T_j - x_j T_l) f|flip(j,l)
              + 1/2 f|flip(j,l) + k_j f|flip(l) + k_l f|flip(j).
    """
    i = GENERATOR_NAMES.index(which) + 1
    j = i % 3 + 1
    l = j % 3 + 1
    flipped = f.reflect((j, l))
    angular = SIGMA[i] * _angular(j, l, flipped, k)
    result = angular.scale(IMAG)
    result = result + flipped.scale(GaussRational(Fraction(1, 2)))
    result = result + f.reflect((l,)).scale(GaussRational(k.k_axis(j)))
    result = result + f.reflect((j,)).scale(GaussRational(k.k_axis(l)))
    return result


def central_scalars(n: int, k: Multiplicity):
    """The scalars by which {X,Y}-Z, {Y,Z}-X, {Z,X}-Y act in degree n:
    kappa, lambda, mu in that order."""
    k1, k2, k3 = k.k
    sign = 1 if n % 2 == 0 else -1
    common = sign * (k1 + k2 + k3 + n + 1)
    return (
        2 * (k1 * k2 + common * k3),
        2 * (k2 * k3 + common * k1),
        2 * (k3 * k1 + common * k2),
    )


class Subquotient:
    """A subspace of the degree-n spinor polynomials, or its quotient by
    a smaller subspace, with a deterministic representative basis.

    For a quotient the representatives are the numerator basis vectors
    at the non-pivot columns of the denominator's echelon form in
    numerator coordinates."""

    __slots__ = ("space", "denominator", "reps", "rep_spinors",
                 "_den_rref", "_den_pivots", "_free", "name")

    def __init__(self, space: MonogenicSpace, denominator=None, name=None):
        object.__setattr__(self, "space", space)
        object.__setattr__(self, "denominator", denominator)
        if denominator is None:
            free = list(range(space.dim))
            den_rref, pivots = None, []
        else:
            den_rref, pivots, free = quotient_data(space, denominator)
        object.__setattr__(self, "_den_rref", den_rref)
        object.__setattr__(self, "_den_pivots", pivots)
        object.__setattr__(self, "_free", free)
        object.__setattr__(self, "reps", [space.vectors[f] for f in free])
        object.__setattr__(self, "rep_spinors", [space.basis[f] for f in free])
        if name is None:
            name = space.name if denominator is None \
                else f"{space.name}/{denominator.name}"
        object.__setattr__(self, "name", name)

    def __setattr__(self, name, value):
        raise AttributeError("Subquotient is immutable")

    @property
    def dim(self) -> int:
        return len(self.reps)

    @property
    def n(self) -> int:
        return self.space.n

    @property
    def k(self) -> Multiplicity:
        return self.space.k

    def reduce_ambient(self, ambient_vector):
        """Coordinates of an ambient vector in the representative basis,
        modulo the denominator.  Raises ValueError when the vector is
        not in the numerator span (a closure failure)."""
        c = solve_in_span(self.space.vectors, ambient_vector)
        if self.denominator is not None:
            c = list(c)
            for row_idx, p in enumerate(self._den_pivots):
                coeff = c[p]
                if coeff.is_zero():
                    continue
                row = self._den_rref.rows[row_idx]
                c = [a - coeff * b for a, b in zip(c, row)]
        return [c[f] for f in self._free]

    def reduce_spinor(self, f: SpinorPoly):
        return self.reduce_ambient(coordinates(f, self.space.ambient))


@dataclass(frozen=True)
class ModuleMatrices:
    """X, Y, Z as exact square matrices on an ordered basis of a space,
    subquotient, or abstract module."""
    provenance: str
    n: object  # degree, or None for abstract modules
    k: object  # Multiplicity, or None
    X: ExactMatrix
    Y: ExactMatrix
    Z: ExactMatrix

    @property
    def dim(self) -> int:
        return self.X.nrows

    def generator(self, which: str) -> ExactMatrix:
        return getattr(self, which)

    def centrals(self):
        """The matrices {X,Y}-Z, {Y,Z}-X, {Z,X}-Y."""
        X, Y, Z = self.X, self.Y, self.Z
        return (X * Y + Y * X - Z, Y * Z + Z * Y - X, Z * X + X * Z - Y)


def matrices_on(target, k: Multiplicity = None) -> ModuleMatrices:
    """Exact matrices of X, Y, Z on a MonogenicSpace or Subquotient.

    Raises ValueError (closure failure) if a generator image leaves the
    space."""
    if isinstance(target, MonogenicSpace):
        target = Subquotient(target)
    if k is None:
        k = target.k
    mats = {}
    for which in GENERATOR_NAMES:
        cols = [target.reduce_spinor(apply_XYZ(which, f, k))
                for f in target.rep_spinors]
        mats[which] = ExactMatrix.from_columns(cols, nrows=target.dim)
    return ModuleMatrices(provenance=target.name, n=target.n, k=k,
                          X=mats["X"], Y=mats["Y"], Z=mats["Z"])


def scalar_of(M: ExactMatrix):
    """The scalar s with M = s*I, or None if M is not scalar."""
    if M.nrows != M.ncols:
        return None
    if M.nrows == 0:
        return ZERO
    s = M.rows[0][0]
    for i in range(M.nrows):
        for j in range(M.ncols):
            expected = s if i == j else ZERO
            if M.rows[i][j] != expected:
                return None
    return s


def verify_bi_relations(M: ModuleMatrices, n=None, k=None) -> dict:
    """Certificate that the three central combinations commute with the
    generators and (when the degree is known) act by the predicted
    scalars."""
    if n is None:
        n = M.n
    if k is None:
        k = M.k
    centrals = M.centrals()
    gens = [M.X, M.Y, M.Z]
    commute = all(
        (C * G - G * C).is_zero() for C in centrals for G in gens)
    measured = [scalar_of(C) for C in centrals]
    cert = {
        "provenance": M.provenance,
        "n": n,
        "relations_ok": bool(commute),
        "scalars": {},
        "all_ok": bool(commute),
    }
    names = ("kappa", "lambda", "mu")
    if n is not None and k is not None:
        predicted = central_scalars(n, k)
        for name, pred, meas in zip(names, predicted, measured):
            matches = meas is not None and meas == GaussRational(pred)
            cert["scalars"][name] = {
                "predicted": str(pred),
                "measured": str(meas) if meas is not None else None,
                "matches": bool(matches),
            }
            cert["all_ok"] = cert["all_ok"] and matches
    else:
        for name, meas in zip(names, measured):
            cert["scalars"][name] = {
                "measured": str(meas) if meas is not None else None,
                "scalar": meas is not None,
            }
            cert["all_ok"] = cert["all_ok"] and meas is not None
    return cert


# -- the twist group ----------------------------------------------------

def _perm_compose(p, q):
    """(p o q)(i) = p(q(i)); permutations as tuples (p(1), p(2), p(3))."""
    return tuple(p[q[i - 1] - 1] for i in (1, 2, 3))


def _perm_inverse(p):
    inv = [0, 0, 0]
    for i in (1, 2, 3):
        inv[p[i - 1] - 1] = i
    return tuple(inv)


IDENTITY_PERM = (1, 2, 3)
ALL_PERMS = ((1, 2, 3), (1, 3, 2), (2, 1, 3), (2, 3, 1), (3, 1, 2), (3, 2, 1))


@dataclass(frozen=True)
class TwistElement:
    """An element (s, pi) of {+-1}^2 x| S3.

    It acts on the generators by G_i -> v[pi(i)] * G_{pi(i)} where
    v = (s1, s2, s1*s2), and on the centrals (lambda, mu, kappa) =
    (C_1, C_2, C_3) by C_i -> v[pi(i)] * C_{pi(i)}."""
    signs: tuple  # (s1, s2), each +1 or -1
    perm: tuple = IDENTITY_PERM  # (pi(1), pi(2), pi(3))

    def __post_init__(self):
        if tuple(self.signs) not in ((1, 1), (1, -1), (-1, 1), (-1, -1)):
            raise ValueError(f"invalid sign pair {self.signs}")
        if tuple(sorted(self.perm)) != (1, 2, 3):
            raise ValueError(f"invalid permutation {self.perm}")

    @property
    def sign_vector(self):
        s1, s2 = self.signs
        return (s1, s2, s1 * s2)

    def generator_image(self, i: int):
        """(sign, index) with epsilon(G_i) = sign * G_index."""
        j = self.perm[i - 1]
        return self.sign_vector[j - 1], j

    def central_image(self, i: int):
        """(sign, index) for the centrals ordered (lambda, mu, kappa)."""
        j = self.perm[i - 1]
        return self.sign_vector[j - 1], j

    def compose(self, other: "TwistElement") -> "TwistElement":
        """The element whose automorphism is (self after other):
        epsilon_result = epsilon_self o epsilon_other."""
        perm = _perm_compose(self.perm, other.perm)
        vs, vo = self.sign_vector, other.sign_vector
        inv = _perm_inverse(self.perm)
        w = tuple(vs[j - 1] * vo[inv[j - 1] - 1] for j in (1, 2, 3))
        return TwistElement(signs=(w[0], w[1]), perm=perm)

    def inverse(self) -> "TwistElement":
        inv = _perm_inverse(self.perm)
        v = self.sign_vector
        w = tuple(v[self.perm[j - 1] - 1] for j in (1, 2, 3))
        return TwistElement(signs=(w[0], w[1]), perm=inv)

    @staticmethod
    def identity() -> "TwistElement":
        return TwistElement(signs=(1, 1))

    @staticmethod
    def all_elements():
        return [TwistElement(signs=s, perm=p)
                for s in ((1, 1), (1, -1), (-1, 1), (-1, -1))
                for p in ALL_PERMS]

    @staticmethod
    def parse(text: str) -> "TwistElement":
        """Parse '(s1,s2);(cycle)' e.g. '(-1,1);(1 2)'; either part may
        be omitted."""
        signs = (1, 1)
        perm = IDENTITY_PERM
        for part in text.split(";"):
            part = part.strip()
            if not part or part == "id":
                continue
            body = part.strip("()")
            if "," in body:
                s1, s2 = (int(x) for x in body.split(","))
                if s1 not in (1, -1) or s2 not in (1, -1):
                    raise ValueError(f"signs must be +-1, got {part!r}")
                signs = (s1, s2)
            elif body:
                points = [int(x) for x in body.split()]
                if len(set(points)) != len(points) or \
                        not set(points) <= {1, 2, 3}:
                    raise ValueError(f"bad cycle {part!r}")
                perm_map = {points[i]: points[(i + 1) % len(points)]
                            for i in range(len(points))}
                perm = tuple(perm_map.get(i, i) for i in (1, 2, 3))
        return TwistElement(signs=signs, perm=perm)

    def label(self) -> str:
        parts = []
        if self.signs != (1, 1):
            parts.append(f"({self.signs[0]},{self.signs[1]})")
        if self.perm != IDENTITY_PERM:
            cycle = _perm_to_cycle(self.perm)
            parts.append(cycle)
        return ";".join(parts) if parts else "id"


def _perm_to_cycle(perm) -> str:
    seen = set()
    cycles = []
    for start in (1, 2, 3):
        if start in seen:
            continue
        cycle = [start]
        seen.add(start)
        nxt = perm[start - 1]
        while nxt != start:
            cycle.append(nxt)
            seen.add(nxt)
            nxt = perm[nxt - 1]
        if len(cycle) > 1:
            cycles.append("(" + " ".join(str(c) for c in cycle) + ")")
    return "".join(cycles) if cycles else "()"


def twist(M: ModuleMatrices, g: TwistElement) -> ModuleMatrices:
    """The module M^g: generator G_i acts by epsilon_g(G_i)."""
    mats = {}
    originals = {1: M.X, 2: M.Y, 3: M.Z}
    for i, name in enumerate(GENERATOR_NAMES, start=1):
        sign, j = g.generator_image(i)
        mats[name] = originals[j].scale(sign)
    return ModuleMatrices(
        provenance=f"{M.provenance}^{g.label()}", n=M.n, k=M.k,
        X=mats["X"], Y=mats["Y"], Z=mats["Z"])


def twisted_central_scalars(scalars, g: TwistElement):
    """Central scalars (kappa, lambda, mu) of M^g given those of M."""
    lam, mu, kap = scalars[1], scalars[2], scalars[0]
    ordered = (lam, mu, kap)  # C_1, C_2, C_3
    out = []
    for i in (1, 2, 3):
        sign, j = g.central_image(i)
        out.append(sign * ordered[j - 1])
    # out is (lambda', mu', kappa'); return (kappa', lambda', mu')
    return (out[2], out[0], out[1])
