"""Exact dense linear algebra over Q(i).

Rank uses fraction-free (Bareiss) elimination after clearing row
denominators, which keeps intermediate entries as Gaussian integers.
Reduced row echelon form and nullspaces use exact Gauss-Jordan
elimination with the deterministic first-nonzero pivoting rule, so
identical inputs always produce identical outputs.
"""

from __future__ import annotations

from math import lcm

from .exact import GaussRational, ZERO, ONE
from .poly import coordinates


class ExactMatrix:
    """A dense matrix over Q(i) stored as a tuple of row tuples."""

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows, ncols=None):
        rows = tuple(tuple(GaussRational.coerce(e) for e in row) for row in rows)
        if rows:
            ncols = len(rows[0])
            if any(len(r) != ncols for r in rows):
                raise ValueError("ragged rows")
        elif ncols is None:
            ncols = 0
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "nrows", len(rows))
        object.__setattr__(self, "ncols", ncols)

    def __setattr__(self, name, value):
        raise AttributeError("ExactMatrix is immutable")

    # -- constructors ---------------------------------------------------

    @staticmethod
    def identity(n: int) -> "ExactMatrix":
        return ExactMatrix([[ONE if i == j else ZERO for j in range(n)]
                            for i in range(n)])

    @staticmethod
    def zero(nrows: int, ncols: int) -> "ExactMatrix":
        return ExactMatrix([[ZERO] * ncols for _ in range(nrows)], ncols=ncols)

    @staticmethod
    def from_columns(cols, nrows=None) -> "ExactMatrix":
        cols = [list(c) for c in cols]
        if cols:
            nrows = len(cols[0])
        elif nrows is None:
            nrows = 0
        return ExactMatrix([[cols[j][i] for j in range(len(cols))]
                            for i in range(nrows)], ncols=len(cols))

    @staticmethod
    def block_diag(*blocks) -> "ExactMatrix":
        nrows = sum(b.nrows for b in blocks)
        ncols = sum(b.ncols for b in blocks)
        rows = [[ZERO] * ncols for _ in range(nrows)]
        r0 = c0 = 0
        for b in blocks:
            for i in range(b.nrows):
                for j in range(b.ncols):
                    rows[r0 + i][c0 + j] = b.rows[i][j]
            r0 += b.nrows
            c0 += b.ncols
        return ExactMatrix(rows, ncols=ncols)

    @staticmethod
    def block(grid) -> "ExactMatrix":
        """Assemble from a 2D grid of ExactMatrix blocks."""
        rows = []
        for block_row in grid:
            height = block_row[0].nrows
            for i in range(height):
                row = []
                for blk in block_row:
                    row.extend(blk.rows[i])
                rows.append(row)
        ncols = sum(b.ncols for b in grid[0]) if grid else 0
        return ExactMatrix(rows, ncols=ncols)

    # -- basic ops ---------------------------------------------------------

    def entry(self, i: int, j: int) -> GaussRational:
        return self.rows[i][j]

    def __eq__(self, other):
        if isinstance(other, ExactMatrix):
            return (self.nrows, self.ncols) == (other.nrows, other.ncols) \
                and self.rows == other.rows
        return NotImplemented

    def __hash__(self):
        return hash(self.rows)

    def __add__(self, other):
        return ExactMatrix([[a + b for a, b in zip(r1, r2)]
                            for r1, r2 in zip(self.rows, other.rows)],
                           ncols=self.ncols)

    def __sub__(self, other):
        return ExactMatrix([[a - b for a, b in zip(r1, r2)]
                            for r1, r2 in zip(self.rows, other.rows)],
                           ncols=self.ncols)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, s) -> "ExactMatrix":
        s = GaussRational.coerce(s)
        return ExactMatrix([[e * s for e in row] for row in self.rows],
                           ncols=self.ncols)

    def __mul__(self, other):
        if isinstance(other, ExactMatrix):
            if self.ncols != other.nrows:
                raise ValueError("dimension mismatch in matrix product")
            cols = list(zip(*other.rows)) if other.rows else []
            return ExactMatrix(
                [[sum((a * b for a, b in zip(row, col) if a and b), ZERO)
                  for col in cols]
                 for row in self.rows],
                ncols=other.ncols)
        return self.scale(other)

    def apply(self, vec):
        if len(vec) != self.ncols:
            raise ValueError("dimension mismatch in matrix-vector product")
        return [sum((a * b for a, b in zip(row, vec)), ZERO) for row in self.rows]

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(list(zip(*self.rows)) if self.rows else [],
                           ncols=self.nrows)

    def trace(self) -> GaussRational:
        return sum((self.rows[i][i] for i in range(min(self.nrows, self.ncols))),
                   ZERO)

    def column(self, j: int):
        return [row[j] for row in self.rows]

    def is_zero(self) -> bool:
        return all(e.is_zero() for row in self.rows for e in row)

    def to_strings(self):
        return [[str(e) for e in row] for row in self.rows]

    def __str__(self):
        return "\n".join("[" + ", ".join(str(e) for e in row) + "]"
                         for row in self.rows)

    __repr__ = __str__


def rref(M: ExactMatrix):
    """Reduced row echelon form with first-nonzero pivoting.

    Returns (R, pivot_columns)."""
    rows = [list(r) for r in M.rows]
    nrows, ncols = M.nrows, M.ncols
    pivots = []
    r = 0
    for c in range(ncols):
        if r >= nrows:
            break
        pivot_row = next((i for i in range(r, nrows) if rows[i][c]), None)
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [e * inv for e in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c]:
                factor = rows[i][c]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return ExactMatrix(rows, ncols=ncols), pivots


def rank(M: ExactMatrix) -> int:
    """Exact rank via fraction-free Bareiss elimination."""
    if M.nrows == 0 or M.ncols == 0:
        return 0
    # Clear denominators row by row (does not change the rank); afterwards
    # every entry is a Gaussian integer represented as an (int, int) pair.
    rows = []
    for row in M.rows:
        denom = 1
        for e in row:
            denom = lcm(denom, e.re.denominator, e.im.denominator)
        rows.append([(int(e.re * denom), int(e.im * denom)) for e in row])
    nrows, ncols = M.nrows, M.ncols

    def gmul(x, y):
        return (x[0] * y[0] - x[1] * y[1], x[0] * y[1] + x[1] * y[0])

    def gsub(x, y):
        return (x[0] - y[0], x[1] - y[1])

    def gdiv(x, y):
        # Exact division in the Gaussian integers.
        n = y[0] * y[0] + y[1] * y[1]
        re = x[0] * y[0] + x[1] * y[1]
        im = x[1] * y[0] - x[0] * y[1]
        return (re // n, im // n)

    r = 0
    prev = (1, 0)
    for c in range(ncols):
        if r >= nrows:
            break
        pivot_row = next((i for i in range(r, nrows) if rows[i][c] != (0, 0)), None)
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        pivot = rows[r][c]
        for i in range(r + 1, nrows):
            head = rows[i][c]
            rows[i] = [gdiv(gsub(gmul(pivot, e), gmul(head, p)), prev)
                       for e, p in zip(rows[i], rows[r])]
        prev = pivot
        r += 1
    return r


def nullspace(M: ExactMatrix):
    """Echelon-normalized kernel basis.

    Each returned vector has coefficient 1 at its own free column and 0
    at every other free column; the result is deterministic."""
    R, pivots = rref(M)
    pivot_set = set(pivots)
    free = [c for c in range(M.ncols) if c not in pivot_set]
    basis = []
    for f in free:
        vec = [ZERO] * M.ncols
        vec[f] = ONE
        for row_idx, p in enumerate(pivots):
            vec[p] = -R.rows[row_idx][f]
        basis.append(vec)
    assert len(pivots) + len(basis) == M.ncols
    return basis


def matrix_of_operator(op, domain, codomain) -> ExactMatrix:
    """Matrix whose column j holds the codomain coordinates of
    op(domain basis element j)."""
    cols = []
    for j in range(len(domain)):
        image = op(domain.element(j))
        cols.append(coordinates(image, codomain))
    return ExactMatrix.from_columns(cols, nrows=len(codomain))
