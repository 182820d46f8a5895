"""The two families of finite-dimensional irreducible modules: the
even-dimensional E_d(a,b,c) (d odd) and odd-dimensional O_d(a,b,c)
(d even), given by bidiagonal X and Y matrices; irreducibility
predicates, a brute-force Burnside irreducibility oracle, and
identification of a module from traces and central scalars.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt

from .exact import GaussRational, ZERO, ONE
from .bi_action import ModuleMatrices, TwistElement, twist, scalar_of, \
    twisted_central_scalars
from .linalg import ExactMatrix, rank, rref

BURNSIDE_DIM_CAP = 8


@dataclass(frozen=True)
class IrrepSpec:
    family: str  # 'E' or 'O'
    d: int
    a: Fraction
    b: Fraction
    c: Fraction
    twist: TwistElement = field(default_factory=TwistElement.identity)

    def __post_init__(self):
        if self.family not in ("E", "O"):
            raise ValueError(f"family must be 'E' or 'O', got {self.family!r}")
        if self.family == "E" and (self.d < 1 or self.d % 2 == 0):
            raise ValueError("family E requires odd d >= 1")
        if self.family == "O" and (self.d < 0 or self.d % 2):
            raise ValueError("family O requires even d >= 0")
        for name in ("a", "b", "c"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))

    @property
    def dim(self) -> int:
        return self.d + 1

    def central_scalars(self):
        """(kappa, lambda, mu) of the untwisted module, then twisted."""
        a, b, c, d = self.a, self.b, self.c, self.d
        if self.family == "E":
            quarter = Fraction((d + 1) ** 2, 4)
            plain = (c * c - a * a - b * b + quarter,
                     a * a - b * b - c * c + quarter,
                     b * b - c * c - a * a + quarter)
        else:
            plain = (2 * a * b - c * (d + 1),
                     2 * b * c - a * (d + 1),
                     2 * c * a - b * (d + 1))
        return twisted_central_scalars(plain, self.twist)

    def plain_traces(self):
        """Traces of X, Y, Z before twisting."""
        if self.family == "E":
            t = -Fraction(self.d + 1, 2)
            return (t, t, t)
        return (self.a, self.b, self.c)

    def label(self) -> str:
        base = f"{self.family}_{self.d}({self.a},{self.b},{self.c})"
        tw = self.twist.label()
        return base if tw == "id" else f"{base}^{tw}"


def _theta(a: Fraction, d: int, i: int) -> Fraction:
    return Fraction((-1) ** i * (2 * a - d + 2 * i), 2)


def _phi(spec: IrrepSpec, i: int) -> Fraction:
    a, b, c, d = spec.a, spec.b, spec.c, spec.d
    if spec.family == "E":
        if i % 2 == 0:
            return Fraction(i * (d - i + 1))
        return c * c - Fraction((2 * a + 2 * b - d + 2 * i - 1) ** 2, 4)
    if i % 2 == 0:
        return Fraction(i * (d + 1 - 2 * i - 2 * a - 2 * b - 2 * c), 2)
    return Fraction((i - d - 1) * (d + 1 - 2 * i - 2 * a - 2 * b + 2 * c), 2)


def build_irrep(spec: IrrepSpec) -> ModuleMatrices:
    """Exact matrices of X, Y, Z for the spec, with the twist applied
    last.  X is lower-bidiagonal with subdiagonal 1, Y upper-bidiagonal
    with superdiagonal phi, and Z = {X,Y} - kappa*I."""
    d = spec.d
    size = d + 1
    X_rows = [[ZERO] * size for _ in range(size)]
    Y_rows = [[ZERO] * size for _ in range(size)]
    for i in range(size):
        X_rows[i][i] = GaussRational(_theta(spec.a, d, i))
        Y_rows[i][i] = GaussRational(_theta(spec.b, d, i))
        if i >= 1:
            X_rows[i][i - 1] = ONE
            Y_rows[i - 1][i] = GaussRational(_phi(spec, i))
    X = ExactMatrix(X_rows, ncols=size)
    Y = ExactMatrix(Y_rows, ncols=size)
    a, b, c = spec.a, spec.b, spec.c
    if spec.family == "E":
        kappa = c * c - a * a - b * b + Fraction((d + 1) ** 2, 4)
    else:
        kappa = 2 * a * b - c * (d + 1)
    Z = (X * Y + Y * X) - ExactMatrix.identity(size).scale(GaussRational(kappa))
    plain = ModuleMatrices(provenance=spec.label(), n=None, k=None,
                           X=X, Y=Y, Z=Z)
    return twist(plain, spec.twist)


def is_irreducible_by_criterion(spec: IrrepSpec) -> bool:
    """The forbidden-set membership test.  Twisting by an algebra
    automorphism does not change irreducibility, so the twist is
    ignored."""
    a, b, c, d = spec.a, spec.b, spec.c, spec.d
    if spec.family == "E":
        forbidden = {Fraction(d - 1, 2) - i for i in range(0, d, 2)}
        probes = (a + b + c, -a + b + c, a - b + c, a + b - c)
    else:
        forbidden = {Fraction(d + 1, 2) - i for i in range(2, d + 1, 2)}
        probes = (a + b + c, a - b - c, -a + b - c, -a - b + c)
    return all(p not in forbidden for p in probes)


def _vectorize(M: ExactMatrix):
    return [e for row in M.rows for e in row]


def is_irreducible_burnside(M: ModuleMatrices, cap: int = BURNSIDE_DIM_CAP) -> bool:
    """True iff words in X and Y span the full matrix algebra.

    Generates words breadth-first up to length 2*dim^2, tracking the
    rank of the vectorized span; rank stabilization ends the search."""
    dim = M.dim
    if dim > cap:
        raise ValueError(f"dimension {dim} exceeds the Burnside cap {cap}")
    if dim == 0:
        return False
    full = dim * dim
    # Incrementally reduced spanning set: pivot column -> reduced row.
    reduced = {}

    def absorb_one(mat):
        row = _vectorize(mat)
        for col, basis_row in reduced.items():
            coeff = row[col]
            if coeff:
                row = [r - coeff * b if b else r
                       for r, b in zip(row, basis_row)]
        for col, value in enumerate(row):
            if value:
                inv = value.inverse()
                reduced[col] = [r * inv for r in row]
                return mat
        return None

    frontier = [m for m in (ExactMatrix.identity(dim),) if absorb_one(m)]
    while frontier and len(reduced) < full:
        frontier = [m for m in (W * G for W in frontier
                                for G in (M.X, M.Y)) if absorb_one(m)]
    return len(reduced) == full


def _rational_sqrt(q: Fraction):
    """Exact non-negative square root of a rational, or None."""
    if q < 0:
        return None
    num, den = q.numerator, q.denominator
    rn, rd = isqrt(num), isqrt(den)
    if rn * rn == num and rd * rd == den:
        return Fraction(rn, rd)
    return None


SIGN_TWISTS = (TwistElement(signs=(1, 1)), TwistElement(signs=(1, -1)),
               TwistElement(signs=(-1, 1)), TwistElement(signs=(-1, -1)))


def _module_invariants(M: ModuleMatrices):
    """Traces of X, Y, Z, XY and the central scalars, as exact values."""
    kappa, lam, mu = (scalar_of(C) for C in M.centrals())
    return {
        "trX": M.X.trace(), "trY": M.Y.trace(), "trZ": M.Z.trace(),
        "trXY": (M.X * M.Y).trace(),
        "kappa": kappa, "lambda": lam, "mu": mu,
    }


def identify(M: ModuleMatrices) -> IrrepSpec:
    """Recover an IrrepSpec whose build is isomorphic to the given
    irreducible module.

    Odd dimension: the O-family parameters are the traces of X, Y, Z.
    Even dimension: the squared parameters are forced by the pairwise
    sums of central scalars on a sign-twisted copy; the twist is the
    first sign pair for which the rebuilt module matches."""
    if not is_irreducible_burnside(M):
        raise ValueError("identify requires an irreducible module")
    dim = M.dim
    d = dim - 1
    inv = _module_invariants(M)
    if any(inv[key] is None for key in ("kappa", "lambda", "mu")):
        raise ValueError("central elements do not act as scalars")

    def matches(spec: IrrepSpec) -> bool:
        built = build_irrep(spec)
        return _module_invariants(built) == inv

    if dim % 2 == 1:
        for tr in ("trX", "trY", "trZ"):
            if not inv[tr].is_rational():
                raise ValueError("traces are not rational")
        spec = IrrepSpec(family="O", d=d, a=inv["trX"].re, b=inv["trY"].re,
                         c=inv["trZ"].re)
        if matches(spec):
            return spec
        raise ValueError("no O-family parameters reproduce the module")

    half = Fraction(dim, 2)
    for eps in SIGN_TWISTS:
        e1, e2 = eps.signs
        e3 = e1 * e2
        # Central scalars on the eps-twisted copy of M.
        kap = e3 * inv["kappa"]
        lam = e1 * inv["lambda"]
        mu = e2 * inv["mu"]
        if not (kap.is_rational() and lam.is_rational() and mu.is_rational()):
            continue
        trX = e1 * inv["trX"]
        trY = e2 * inv["trY"]
        if trX != GaussRational(-half) or trY != GaussRational(-half):
            continue
        params = []
        ok = True
        for total in (kap + mu, lam + kap, mu + lam):
            square = half * half - total.re / 2
            root = _rational_sqrt(square)
            if root is None:
                ok = False
                break
            params.append(root)
        if not ok:
            continue
        spec = IrrepSpec(family="E", d=d, a=params[0], b=params[1],
                         c=params[2], twist=eps)
        if matches(spec):
            return spec
    raise ValueError("no E-family parameters and sign twist reproduce the module")
