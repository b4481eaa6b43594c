"""Dense exact matrices and Gaussian elimination."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .field import Field


class Singular(ArithmeticError):
    """Raised when inverting a matrix of deficient rank."""


class ShapeError(ValueError):
    pass


@dataclass(frozen=True)
class Matrix:
    """Immutable dense matrix over a :class:`Field`.

    Vectors are plain tuples of field elements and are treated as columns
    when multiplied from the left: ``m @ v``.
    """

    field: Field
    rows: tuple
    ncols: int

    def __post_init__(self):
        for r in self.rows:
            if len(r) != self.ncols:
                raise ShapeError("ragged matrix")

    @classmethod
    def from_rows(cls, field: Field, rows: Iterable[Sequence], ncols: int | None = None) -> "Matrix":
        rows = tuple(tuple(field.coerce(x) for x in r) for r in rows)
        if ncols is None:
            if not rows:
                raise ShapeError("ncols required for a matrix with no rows")
            ncols = len(rows[0])
        return cls(field, rows, ncols)

    @classmethod
    def from_columns(cls, field: Field, cols: Sequence[Sequence], nrows: int) -> "Matrix":
        cols = [tuple(c) for c in cols]
        rows = tuple(tuple(c[i] for c in cols) for i in range(nrows))
        return cls(field, rows, len(cols))

    @classmethod
    def zeros(cls, field: Field, nrows: int, ncols: int) -> "Matrix":
        z = field.zero
        return cls(field, tuple((z,) * ncols for _ in range(nrows)), ncols)

    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        z, o = field.zero, field.one
        return cls(field, tuple(tuple(o if i == j else z for j in range(n)) for i in range(n)), n)

    @classmethod
    def diagonal(cls, field: Field, entries: Sequence) -> "Matrix":
        n = len(entries)
        z = field.zero
        entries = [field.coerce(e) for e in entries]
        return cls(field, tuple(tuple(entries[i] if i == j else z for j in range(n)) for i in range(n)), n)

    @classmethod
    def block_diagonal(cls, field: Field, blocks: Sequence["Matrix"]) -> "Matrix":
        nr = sum(b.nrows for b in blocks)
        nc = sum(b.ncols for b in blocks)
        rows = [[field.zero] * nc for _ in range(nr)]
        r0 = c0 = 0
        for b in blocks:
            for i, row in enumerate(b.rows):
                rows[r0 + i][c0:c0 + b.ncols] = row
            r0 += b.nrows
            c0 += b.ncols
        return cls(field, tuple(map(tuple, rows)), nc)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self.rows)

    def columns(self) -> list[tuple]:
        return [self.column(j) for j in range(self.ncols)]

    @property
    def T(self) -> "Matrix":
        return Matrix(self.field, tuple(zip(*self.rows)) if self.rows else tuple(() for _ in range(self.ncols)),
                      self.nrows)

    def _check_same(self, other: "Matrix"):
        if self.field != other.field:
            raise ShapeError("field mismatch")
        if self.shape != other.shape:
            raise ShapeError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_same(other)
        red = self.field.reduce
        return Matrix(self.field, tuple(tuple(red(a + b) for a, b in zip(r, s))
                                        for r, s in zip(self.rows, other.rows)), self.ncols)

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_same(other)
        red = self.field.reduce
        return Matrix(self.field, tuple(tuple(red(a - b) for a, b in zip(r, s))
                                        for r, s in zip(self.rows, other.rows)), self.ncols)

    def __neg__(self) -> "Matrix":
        return self.scale(-1)

    def scale(self, c) -> "Matrix":
        red = self.field.reduce
        return Matrix(self.field, tuple(tuple(red(c * a) for a in r) for r in self.rows), self.ncols)

    def __matmul__(self, other):
        red = self.field.reduce
        if isinstance(other, Matrix):
            if self.ncols != other.nrows:
                raise ShapeError(f"cannot multiply {self.shape} by {other.shape}")
            cols = list(zip(*other.rows)) if other.rows else [()] * other.ncols
            return Matrix(self.field, tuple(tuple(red(sum(a * b for a, b in zip(r, c) if a and b)) for c in cols)
                                            for r in self.rows), other.ncols)
        v = tuple(other)
        if len(v) != self.ncols:
            raise ShapeError(f"cannot apply {self.shape} matrix to vector of length {len(v)}")
        return tuple(red(sum(a * b for a, b in zip(r, v) if a and b)) for r in self.rows)

    def __pow__(self, k: int) -> "Matrix":
        if not self.is_square:
            raise ShapeError("power of a non-square matrix")
        if k < 0:
            return invert(self) ** (-k)
        result = Matrix.identity(self.field, self.nrows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.rows for x in r)

    def is_identity(self) -> bool:
        return self.is_square and all((x == 1) if i == j else (x == 0)
                                      for i, r in enumerate(self.rows) for j, x in enumerate(r))

    def trace(self):
        return self.field.reduce(sum(self.rows[i][i] for i in range(min(self.shape))))

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "Matrix":
        return Matrix(self.field, tuple(tuple(self.rows[i][j] for j in cols) for i in rows), len(cols))

    def vstack(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.ncols:
            raise ShapeError("vstack column mismatch")
        return Matrix(self.field, self.rows + other.rows, self.ncols)

    def to_strings(self) -> list[list[str]]:
        fmt = self.field.format
        return [[fmt(x) for x in r] for r in self.rows]

    def __str__(self):
        cells = self.to_strings()
        if not cells:
            return f"[] ({self.nrows}x{self.ncols})"
        w = max((len(c) for r in cells for c in r), default=1)
        return "\n".join("[" + " ".join(c.rjust(w) for c in r) + "]" for r in cells)


def _rref_rows(field: Field, rows: list[list]) -> tuple[list[list], list[int]]:
    """Row-reduce in place with pivot normalization; returns nonzero rows and pivots."""
    red, inv = field.reduce, field.inv
    m = len(rows)
    ncols = len(rows[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == m:
            break
        piv = next((i for i in range(r, m) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        s = inv(rows[r][c])
        rows[r] = [red(x * s) for x in rows[r]]
        prow = rows[r]
        for i in range(m):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [red(a - f * b) if b else a for a, b in zip(rows[i], prow)]
        pivots.append(c)
        r += 1
    return rows[:r], pivots


def rref(m: Matrix) -> tuple[Matrix, int]:
    """Reduced row-echelon form (same shape, zero rows last) and the rank."""
    rows, pivots = _rref_rows(m.field, [list(r) for r in m.rows])
    rank = len(pivots)
    z = m.field.zero
    full = [tuple(r) for r in rows] + [(z,) * m.ncols for _ in range(m.nrows - rank)]
    return Matrix(m.field, tuple(full), m.ncols), rank


def rank(m: Matrix) -> int:
    return rref(m)[1]


def nullspace_basis(m: Matrix) -> list[tuple]:
    """Basis of {v : m v = 0}, one vector per free column, in free-column order."""
    rows, pivots = _rref_rows(m.field, [list(r) for r in m.rows])
    red = m.field.reduce
    free = [c for c in range(m.ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [m.field.zero] * m.ncols
        v[f] = m.field.one
        for row, p in zip(rows, pivots):
            v[p] = red(-row[f])
        basis.append(tuple(v))
    return basis


def invert(m: Matrix) -> Matrix:
    """Exact inverse; raises :class:`Singular` when rank < n."""
    if not m.is_square:
        raise ShapeError("only square matrices can be inverted")
    n = m.nrows
    f = m.field
    aug = [list(r) + [f.one if i == j else f.zero for j in range(n)] for i, r in enumerate(m.rows)]
    rows, pivots = _rref_rows(f, aug)
    if len(pivots) < n or pivots[n - 1] != n - 1:
        raise Singular(f"matrix has rank {sum(1 for p in pivots if p < n)} < {n}")
    return Matrix(f, tuple(tuple(r[n:]) for r in rows), n)


def solve(m: Matrix, b: Sequence):
    """One solution x of m x = b, or None if inconsistent."""
    f = m.field
    aug = [list(r) + [bi] for r, bi in zip(m.rows, b)]
    rows, pivots = _rref_rows(f, aug)
    if pivots and pivots[-1] == m.ncols:
        return None
    x = [f.zero] * m.ncols
    for row, p in zip(rows, pivots):
        x[p] = row[-1]
    return tuple(x)
