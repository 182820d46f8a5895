"""Sparse polynomials in x1, x2, x3 over Q(i), and their spinor-valued
(C^2 tensor) and matrix-valued (Mat2 tensor) extensions.

Monomials are exponent triples (a, b, c).  A graded basis of the spinor
space fixes a deterministic coordinate system: up slot before down slot,
and within a slot the monomials of degree n with increasing x1 exponent,
then increasing x2 exponent.  Restricted to two variables this is the
basis alpha_n = (up (x) x1^i x2^(n-i))_{i=0..n} followed by the down copies.
"""

from __future__ import annotations

from .exact import GaussRational, Mat2, ZERO, ONE

Monomial = tuple  # (a, b, c) exponents of x1, x2, x3


class Poly:
    """Sparse polynomial: map from exponent triple to nonzero coefficient."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for mono, coeff in terms.items():
                coeff = GaussRational.coerce(coeff)
                if not coeff.is_zero():
                    clean[mono] = coeff
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # -- constructors ---------------------------------------------------

    @staticmethod
    def constant(value) -> "Poly":
        return Poly({(0, 0, 0): GaussRational.coerce(value)})

    @staticmethod
    def monomial(a: int, b: int, c: int, coeff=1) -> "Poly":
        return Poly({(a, b, c): GaussRational.coerce(coeff)})

    @staticmethod
    def variable(axis: int) -> "Poly":
        expo = [0, 0, 0]
        expo[axis - 1] = 1
        return Poly({tuple(expo): ONE})

    # -- structure -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def coeff(self, mono) -> GaussRational:
        return self.terms.get(tuple(mono), ZERO)

    def degree(self):
        """Total degree, or -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def is_homogeneous(self, n=None) -> bool:
        degrees = {sum(m) for m in self.terms}
        if not degrees:
            return True
        if len(degrees) > 1:
            return False
        return n is None or degrees == {n}

    def support_axes(self):
        """The set of axes (1,2,3) appearing with positive exponent."""
        axes = set()
        for m in self.terms:
            for axis in (1, 2, 3):
                if m[axis - 1]:
                    axes.add(axis)
        return axes

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        terms = dict(self.terms)
        for mono, coeff in other.terms.items():
            terms[mono] = terms.get(mono, ZERO) + coeff
        return Poly(terms)

    def __neg__(self):
        return Poly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Poly):
            terms = {}
            for m1, c1 in self.terms.items():
                for m2, c2 in other.terms.items():
                    mono = (m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2])
                    terms[mono] = terms.get(mono, ZERO) + c1 * c2
            return Poly(terms)
        s = GaussRational.coerce(other)
        return Poly({m: c * s for m, c in self.terms.items()})

    def __rmul__(self, other):
        return self * other

    def reflect(self, axes) -> "Poly":
        """Negate the listed variables: x_axis -> -x_axis for axis in axes."""
        if not axes:
            return self
        terms = {}
        for mono, coeff in self.terms.items():
            parity = sum(mono[axis - 1] for axis in axes)
            terms[mono] = -coeff if parity % 2 else coeff
        return Poly(terms)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for mono in sorted(self.terms, key=lambda m: (m[0], m[1])):
            factors = [f"({self.terms[mono]})"]
            for axis, e in zip((1, 2, 3), mono):
                if e:
                    factors.append(f"x{axis}^{e}")
            parts.append("*".join(factors))
        return " + ".join(parts)

    __repr__ = __str__


P_ZERO = Poly()
P_ONE = Poly.constant(1)


class SpinorPoly:
    """An element of C^2 (x) R[x1,x2,x3]: an up and a down component."""

    __slots__ = ("up", "down")

    def __init__(self, up=None, down=None):
        object.__setattr__(self, "up", up if up is not None else P_ZERO)
        object.__setattr__(self, "down", down if down is not None else P_ZERO)

    def __setattr__(self, name, value):
        raise AttributeError("SpinorPoly is immutable")

    def is_zero(self) -> bool:
        return self.up.is_zero() and self.down.is_zero()

    def __add__(self, other):
        return SpinorPoly(self.up + other.up, self.down + other.down)

    def __neg__(self):
        return SpinorPoly(-self.up, -self.down)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, s) -> "SpinorPoly":
        return SpinorPoly(self.up * s, self.down * s)

    def __rmul__(self, other):
        if isinstance(other, Mat2):
            return SpinorPoly(
                self.up * other.a + self.down * other.b,
                self.up * other.c + self.down * other.d,
            )
        return self.scale(other)

    def times_poly(self, p: Poly) -> "SpinorPoly":
        return SpinorPoly(self.up * p, self.down * p)

    def reflect(self, axes) -> "SpinorPoly":
        return SpinorPoly(self.up.reflect(axes), self.down.reflect(axes))

    def is_homogeneous(self, n=None) -> bool:
        return self.up.is_homogeneous(n) and self.down.is_homogeneous(n)

    def __eq__(self, other):
        if isinstance(other, SpinorPoly):
            return self.up == other.up and self.down == other.down
        return NotImplemented

    def __str__(self):
        return f"{{up: {self.up}, down: {self.down}}}"

    __repr__ = __str__


class MatPoly:
    """A 2x2 grid of polynomials: an element of Mat2 (x) R[x1,x2,x3]."""

    __slots__ = ("rows",)

    def __init__(self, rows=None):
        if rows is None:
            rows = ((P_ZERO, P_ZERO), (P_ZERO, P_ZERO))
        rows = (tuple(rows[0]), tuple(rows[1]))
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("MatPoly is immutable")

    @staticmethod
    def tensor(mat: Mat2, p: Poly) -> "MatPoly":
        return MatPoly(((mat.a * p, mat.b * p), (mat.c * p, mat.d * p)))

    def is_zero(self) -> bool:
        return all(e.is_zero() for row in self.rows for e in row)

    def __add__(self, other):
        return MatPoly(tuple(
            tuple(a + b for a, b in zip(r1, r2))
            for r1, r2 in zip(self.rows, other.rows)
        ))

    def __neg__(self):
        return MatPoly(tuple(tuple(-e for e in row) for row in self.rows))

    def __sub__(self, other):
        return self + (-other)

    def scale(self, s) -> "MatPoly":
        return MatPoly(tuple(tuple(e * s for e in row) for row in self.rows))

    def __rmul__(self, other):
        if isinstance(other, Mat2):
            (a, b), (c, d) = self.rows
            return MatPoly((
                (other.a * a + other.b * c, other.a * b + other.b * d),
                (other.c * a + other.d * c, other.c * b + other.d * d),
            ))
        return self.scale(other)

    def column(self, j: int) -> SpinorPoly:
        """Column j (0 or 1) as a spinor polynomial."""
        return SpinorPoly(self.rows[0][j], self.rows[1][j])

    @staticmethod
    def from_columns(col0: SpinorPoly, col1: SpinorPoly) -> "MatPoly":
        return MatPoly(((col0.up, col1.up), (col0.down, col1.down)))

    def __eq__(self, other):
        if isinstance(other, MatPoly):
            return self.rows == other.rows
        return NotImplemented

    def __str__(self):
        return str([[str(e) for e in row] for row in self.rows])

    __repr__ = __str__


MP_ZERO = MatPoly()


def monomials_of_degree(n: int, axes):
    """All exponent triples of total degree n supported on the given axes,
    ordered by increasing x1 exponent, then increasing x2 exponent."""
    axes = sorted(axes)
    result = []
    a_range = range(n + 1) if 1 in axes else (0,)
    for a in a_range:
        b_range = range(n - a + 1) if 2 in axes else (0,)
        for b in b_range:
            c = n - a - b
            if c and 3 not in axes:
                continue
            result.append((a, b, c))
    return result


class GradedBasis:
    """Ordered coordinate system on the degree-n spinor polynomials
    supported on a subset of the variables."""

    __slots__ = ("n", "axes", "slots", "index")

    def __init__(self, n: int, axes):
        axes = tuple(sorted(set(axes)))
        if not axes or any(a not in (1, 2, 3) for a in axes):
            raise ValueError("variable subset must be a nonempty subset of {1,2,3}")
        monos = monomials_of_degree(n, axes)
        slots = [("up", m) for m in monos] + [("down", m) for m in monos]
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "axes", axes)
        object.__setattr__(self, "slots", tuple(slots))
        object.__setattr__(self, "index", {s: i for i, s in enumerate(slots)})

    def __setattr__(self, name, value):
        raise AttributeError("GradedBasis is immutable")

    def __len__(self):
        return len(self.slots)

    def element(self, i: int) -> SpinorPoly:
        slot, mono = self.slots[i]
        p = Poly({mono: ONE})
        return SpinorPoly(p, P_ZERO) if slot == "up" else SpinorPoly(P_ZERO, p)


def enumerate_basis(n: int, axes) -> GradedBasis:
    return GradedBasis(n, axes)


def coordinates(f: SpinorPoly, basis: GradedBasis):
    """Exact coordinate vector of a homogeneous spinor polynomial."""
    vec = [ZERO] * len(basis)
    for slot, poly in (("up", f.up), ("down", f.down)):
        for mono, coeff in poly.terms.items():
            key = (slot, mono)
            if key not in basis.index:
                raise ValueError(
                    f"term {slot}@{mono} lies outside the degree-{basis.n} "
                    f"basis on variables {basis.axes}")
            vec[basis.index[key]] = coeff
    return vec


def reconstruct(vec, basis: GradedBasis) -> SpinorPoly:
    """Inverse of coordinates."""
    up, down = {}, {}
    for coeff, (slot, mono) in zip(vec, basis.slots):
        coeff = GaussRational.coerce(coeff)
        if coeff.is_zero():
            continue
        (up if slot == "up" else down)[mono] = coeff
    return SpinorPoly(Poly(up), Poly(down))
