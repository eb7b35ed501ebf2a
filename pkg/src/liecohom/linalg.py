"""Exact linear algebra over the rationals.

Scalars are :class:`fractions.Fraction`.  Matrices are immutable and carry
their shape explicitly so that empty (0 x n) matrices behave.  Ranks use
fraction-free (Bareiss) elimination on an integer rescaling of the rows;
echelon forms and kernels use Gauss-Jordan over Fractions, which fixes the
deterministic bases the rest of the package relies on.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

from .errors import DimensionMismatch, ValidationError

Scalar = Fraction
Vector = tuple  # tuple[Fraction, ...]


def scalar(x) -> Fraction:
    """Coerce ints, Fractions and strings like ``"-3/4"`` to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(x, (int, str)):
        return Fraction(x)
    raise TypeError(f"cannot use {type(x).__name__} as an exact scalar")


def vector(xs: Iterable) -> Vector:
    return tuple(scalar(x) for x in xs)


def zero_vector(n: int) -> Vector:
    return (Fraction(0),) * n


def unit_vector(n: int, i: int) -> Vector:
    return tuple(Fraction(int(j == i)) for j in range(n))


def is_zero_vector(v: Sequence) -> bool:
    return all(x == 0 for x in v)


def format_scalar(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


class Matrix:
    """Immutable dense matrix of Fractions."""

    __slots__ = ("nrows", "ncols", "rows", "_hash")

    def __init__(self, rows: Iterable[Iterable], ncols: int | None = None):
        rows = tuple(vector(r) for r in rows)
        if ncols is None:
            if not rows:
                raise ValueError("ncols is required for a matrix without rows")
            ncols = len(rows[0])
        for r in rows:
            if len(r) != ncols:
                raise DimensionMismatch(f"ragged matrix: row of length {len(r)}, expected {ncols}")
        self.nrows = len(rows)
        self.ncols = ncols
        self.rows = rows
        self._hash = None

    # constructors -----------------------------------------------------

    @classmethod
    def zeros(cls, m: int, n: int) -> "Matrix":
        return cls(((0,) * n for _ in range(m)), ncols=n)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls((unit_vector(n, i) for i in range(n)), ncols=n)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], nrows: int) -> "Matrix":
        columns = [vector(c) for c in columns]
        for c in columns:
            if len(c) != nrows:
                raise DimensionMismatch("column length differs from nrows")
        return cls((tuple(c[i] for c in columns) for i in range(nrows)), ncols=len(columns))

    @classmethod
    def diagonal(cls, entries: Sequence) -> "Matrix":
        n = len(entries)
        return cls(
            (tuple(entries[i] if i == j else 0 for j in range(n)) for i in range(n)), ncols=n
        )

    @classmethod
    def scalar_matrix(cls, n: int, c) -> "Matrix":
        return cls.diagonal([c] * n)

    # basic protocol ---------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self.rows)

    def columns(self) -> list[Vector]:
        return [self.column(j) for j in range(self.ncols)]

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.rows == other.rows

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nrows, self.ncols, self.rows))
        return self._hash

    def __repr__(self):
        body = "; ".join(" ".join(format_scalar(x) for x in r) for r in self.rows)
        return f"Matrix({self.nrows}x{self.ncols}: {body})"

    def tolist(self) -> list[list[Fraction]]:
        return [list(r) for r in self.rows]

    @property
    def T(self) -> "Matrix":
        return Matrix(zip(*self.rows), ncols=self.nrows) if self.nrows else Matrix.zeros(self.ncols, 0)

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.rows for x in r)

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def trace(self) -> Fraction:
        self._require_square()
        return sum((self.rows[i][i] for i in range(self.nrows)), Fraction(0))

    # arithmetic -------------------------------------------------------

    def __add__(self, other: "Matrix") -> "Matrix":
        self._require_shape(other)
        return Matrix(
            (tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)), self.ncols
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._require_shape(other)
        return Matrix(
            (tuple(a - b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)), self.ncols
        )

    def __neg__(self) -> "Matrix":
        return Matrix((tuple(-a for a in r) for r in self.rows), self.ncols)

    def scale(self, c) -> "Matrix":
        c = scalar(c)
        return Matrix((tuple(c * a for a in r) for r in self.rows), self.ncols)

    def __rmul__(self, c):
        return self.scale(c)

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if self.ncols != other.nrows:
                raise DimensionMismatch(f"cannot multiply {self.shape} by {other.shape}")
            cols = other.columns()
            return Matrix(
                (tuple(_dot(r, c) for c in cols) for r in self.rows), ncols=other.ncols
            )
        v = tuple(other)
        if len(v) != self.ncols:
            raise DimensionMismatch(f"cannot apply {self.shape} matrix to vector of length {len(v)}")
        return tuple(_dot(r, v) for r in self.rows)

    def __pow__(self, k: int) -> "Matrix":
        self._require_square()
        if k < 0:
            return self.inverse() ** (-k)
        out = Matrix.identity(self.nrows)
        base = self
        while k:
            if k & 1:
                out = out @ base
            base = base @ base
            k >>= 1
        return out

    def hstack(self, other: "Matrix") -> "Matrix":
        if self.nrows != other.nrows:
            raise DimensionMismatch("hstack needs equal row counts")
        return Matrix((r + s for r, s in zip(self.rows, other.rows)), self.ncols + other.ncols)

    def vstack(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.ncols:
            raise DimensionMismatch("vstack needs equal column counts")
        return Matrix(self.rows + other.rows, self.ncols)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "Matrix":
        return Matrix((tuple(self.rows[i][j] for j in cols) for i in rows), ncols=len(cols))

    # exact algorithms -------------------------------------------------

    def rank(self) -> int:
        return bareiss_rank(self.rows, self.ncols)

    def det(self) -> Fraction:
        self._require_square()
        return bareiss_det(self.rows)

    def rref(self) -> tuple["Matrix", tuple[int, ...]]:
        """Reduced row echelon form with zero rows dropped, and pivot columns."""
        rows, pivots = _rref(self.rows, self.ncols)
        return Matrix(rows, self.ncols), pivots

    def nullspace(self) -> list[Vector]:
        """Kernel basis: one vector per free column, that coordinate set to 1."""
        rows, pivots = _rref(self.rows, self.ncols)
        free = [j for j in range(self.ncols) if j not in pivots]
        basis = []
        for f in free:
            v = [Fraction(0)] * self.ncols
            v[f] = Fraction(1)
            for r, p in zip(rows, pivots):
                v[p] = -r[f]
            basis.append(tuple(v))
        return basis

    def inverse(self) -> "Matrix":
        self._require_square()
        n = self.nrows
        aug = [r + unit_vector(n, i) for i, r in enumerate(self.rows)]
        rows, pivots = _rref(aug, 2 * n)
        if pivots[:n] != tuple(range(n)) or len(pivots) < n:
            raise ValidationError("matrix is singular")
        return Matrix((r[n:] for r in rows[:n]), ncols=n)

    def is_invertible(self) -> bool:
        return self.is_square() and self.rank() == self.nrows

    def solve(self, b: Sequence) -> Vector | None:
        """A particular solution of ``self @ x = b`` (free variables zero), or None."""
        b = vector(b)
        if len(b) != self.nrows:
            raise DimensionMismatch("right-hand side has the wrong length")
        aug = [r + (bi,) for r, bi in zip(self.rows, b)]
        rows, pivots = _rref(aug, self.ncols + 1)
        if pivots and pivots[-1] == self.ncols:
            return None
        x = [Fraction(0)] * self.ncols
        for r, p in zip(rows, pivots):
            x[p] = r[-1]
        return tuple(x)

    def solve_matrix(self, B: "Matrix") -> "Matrix | None":
        """Solve ``self @ X = B`` column by column; None if any column fails."""
        cols = []
        for c in B.columns():
            x = self.solve(c)
            if x is None:
                return None
            cols.append(x)
        return Matrix.from_columns(cols, self.ncols)

    # helpers ----------------------------------------------------------

    def _require_square(self):
        if not self.is_square():
            raise DimensionMismatch(f"square matrix required, got {self.shape}")

    def _require_shape(self, other):
        if self.shape != other.shape:
            raise DimensionMismatch(f"shape mismatch {self.shape} vs {other.shape}")


def _dot(a, b) -> Fraction:
    s = Fraction(0)
    for x, y in zip(a, b):
        if x and y:
            s += x * y
    return s


def _integer_rows(rows) -> list[list[int]]:
    out = []
    for r in rows:
        d = 1
        for x in r:
            d = lcm(d, x.denominator)
        out.append([int(x * d) for x in r])
    return out


def bareiss_rank(rows: Sequence[Sequence[Fraction]], ncols: int) -> int:
    """Rank by fraction-free elimination.

    Each row is first scaled to integers (rank is unchanged), then the
    Bareiss update ``a[i][j] = (a[k][k]*a[i][j] - a[i][k]*a[k][j]) / prev``
    keeps every intermediate entry an integer minor.
    """
    a = _integer_rows(rows)
    m = len(a)
    rank = 0
    prev = 1
    for col in range(ncols):
        if rank == m:
            break
        piv = next((i for i in range(rank, m) if a[i][col] != 0), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        p = a[rank][col]
        for i in range(rank + 1, m):
            f = a[i][col]
            row_i = a[i]
            row_k = a[rank]
            for j in range(col + 1, ncols):
                row_i[j] = (p * row_i[j] - f * row_k[j]) // prev
            row_i[col] = 0
        prev = p
        rank += 1
    return rank


def bareiss_det(rows: Sequence[Sequence[Fraction]]) -> Fraction:
    n = len(rows)
    if n == 0:
        return Fraction(1)
    scale = Fraction(1)
    a = []
    for r in rows:
        d = 1
        for x in r:
            d = lcm(d, x.denominator)
        scale /= d
        a.append([int(x * d) for x in r])
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            piv = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if piv is None:
                return Fraction(0)
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1] * scale


def _rref(rows, ncols):
    a = [list(r) for r in rows]
    m = len(a)
    pivots = []
    r = 0
    for c in range(ncols):
        if r == m:
            break
        piv = next((i for i in range(r, m) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(m):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return [tuple(row) for row in a[:r]], tuple(pivots)


def span_basis(vectors: Sequence[Sequence], n: int) -> list[Vector]:
    """Echelon-normalized basis (nonzero RREF rows) of the span of ``vectors``."""
    if not vectors:
        return []
    rows, _ = _rref([vector(v) for v in vectors], n)
    return list(rows)


def rank_of(vectors: Sequence[Sequence], n: int) -> int:
    return bareiss_rank([vector(v) for v in vectors], n)


def in_span(v: Sequence, vectors: Sequence[Sequence], n: int) -> bool:
    return rank_of(list(vectors) + [v], n) == rank_of(vectors, n)


def coordinates(v: Sequence, basis: Sequence[Sequence], n: int) -> Vector | None:
    """Coordinates of ``v`` in ``basis`` (assumed independent), or None if outside the span."""
    if not basis:
        return () if is_zero_vector(v) else None
    return Matrix.from_columns(basis, n).solve(v)


def kron(a: Matrix, b: Matrix) -> Matrix:
    """Kronecker product; row index ``i*b.nrows + k``, column ``j*b.ncols + l``."""
    rows = []
    for ra in a.rows:
        for rb in b.rows:
            rows.append(tuple(x * y for x in ra for y in rb))
    return Matrix(rows, ncols=a.ncols * b.ncols)


def rational_gcd(values: Iterable) -> Fraction:
    """Positive generator of the subgroup of Q generated by ``values`` (0 if all vanish)."""
    values = [scalar(v) for v in values if v != 0]
    if not values:
        return Fraction(0)
    den = lcm(*(v.denominator for v in values))
    return Fraction(gcd(*(abs(v.numerator) * (den // v.denominator) for v in values)), den)
