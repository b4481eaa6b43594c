"""Subspaces kept in canonical reduced row-echelon form.

Two :class:`Subspace` objects are equal exactly when they are the same set
of vectors, because the RREF basis of a subspace is unique.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .field import Field
from .matrix import Matrix, ShapeError, _rref_rows, nullspace_basis


@dataclass(frozen=True)
class Subspace:
    field: Field
    ambient_dim: int
    basis: Matrix
    pivots: tuple

    @classmethod
    def span(cls, field: Field, ambient_dim: int, vectors: Iterable[Sequence]) -> "Subspace":
        rows = [list(v) for v in vectors]
        for r in rows:
            if len(r) != ambient_dim:
                raise ShapeError(f"vector of length {len(r)} in ambient dimension {ambient_dim}")
        rows, pivots = _rref_rows(field, rows)
        return cls(field, ambient_dim, Matrix(field, tuple(map(tuple, rows)), ambient_dim), tuple(pivots))

    @classmethod
    def zero(cls, field: Field, ambient_dim: int) -> "Subspace":
        return cls.span(field, ambient_dim, [])

    @classmethod
    def full(cls, field: Field, ambient_dim: int) -> "Subspace":
        return cls.span(field, ambient_dim, Matrix.identity(field, ambient_dim).rows)

    @property
    def dim(self) -> int:
        return self.basis.nrows

    def vectors(self) -> list[tuple]:
        return list(self.basis.rows)

    def is_zero(self) -> bool:
        return self.dim == 0

    def is_full(self) -> bool:
        return self.dim == self.ambient_dim

    def _compatible(self, other: "Subspace"):
        if self.field != other.field or self.ambient_dim != other.ambient_dim:
            raise ShapeError("subspaces live in different ambient spaces")

    def reduce_vector(self, v: Sequence) -> tuple:
        """Remainder of v after eliminating the pivot coordinates."""
        red = self.field.reduce
        v = list(v)
        for row, p in zip(self.basis.rows, self.pivots):
            c = v[p]
            if c != 0:
                v = [red(a - c * b) if b else a for a, b in zip(v, row)]
        return tuple(v)

    def __contains__(self, v) -> bool:
        if len(v) != self.ambient_dim:
            raise ShapeError("vector length does not match ambient dimension")
        return all(x == 0 for x in self.reduce_vector(v))

    def coordinates(self, v: Sequence) -> tuple:
        """Coordinates of v in the RREF basis; raises if v is not a member."""
        if v not in self:
            raise ValueError("vector is not in the subspace")
        return tuple(v[p] for p in self.pivots)

    def combine(self, coords: Sequence) -> tuple:
        red = self.field.reduce
        out = [0] * self.ambient_dim
        for c, row in zip(coords, self.basis.rows):
            if c:
                out = [a + c * b for a, b in zip(out, row)]
        return tuple(red(x) for x in out)

    def __add__(self, other: "Subspace") -> "Subspace":
        self._compatible(other)
        return Subspace.span(self.field, self.ambient_dim, self.vectors() + other.vectors())

    def annihilator(self) -> "Subspace":
        """{f : f . u = 0 for all u} under the standard pairing."""
        if self.dim == 0:
            return Subspace.full(self.field, self.ambient_dim)
        return Subspace.span(self.field, self.ambient_dim, nullspace_basis(self.basis))

    def __and__(self, other: "Subspace") -> "Subspace":
        self._compatible(other)
        eqs = self.annihilator().vectors() + other.annihilator().vectors()
        if not eqs:
            return Subspace.full(self.field, self.ambient_dim)
        m = Matrix(self.field, tuple(eqs), self.ambient_dim)
        return Subspace.span(self.field, self.ambient_dim, nullspace_basis(m))

    def __le__(self, other: "Subspace") -> bool:
        self._compatible(other)
        return all(v in other for v in self.basis.rows)

    def __lt__(self, other: "Subspace") -> bool:
        return self <= other and self.dim < other.dim

    def image(self, m: Matrix) -> "Subspace":
        """The subspace m(U) for a linear map m given in column convention."""
        if m.ncols != self.ambient_dim:
            raise ShapeError("map does not act on this ambient space")
        return Subspace.span(self.field, m.nrows, [m @ v for v in self.basis.rows])

    def complement_pivots(self) -> list[int]:
        piv = set(self.pivots)
        return [c for c in range(self.ambient_dim) if c not in piv]

    def to_strings(self) -> list[list[str]]:
        return self.basis.to_strings()

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim}, basis={self.to_strings()})"


def subspace_sum(u: Subspace, w: Subspace) -> Subspace:
    return u + w


def subspace_intersect(u: Subspace, w: Subspace) -> Subspace:
    return u & w


def member(v: Sequence, u: Subspace) -> bool:
    return v in u


def kernel(m: Matrix) -> Subspace:
    return Subspace.span(m.field, m.ncols, nullspace_basis(m))


def column_space(m: Matrix) -> Subspace:
    return Subspace.span(m.field, m.nrows, m.columns())


def enumerate_subspaces(field, n: int):
    """Yield every subspace of GF(p)^n, grouped by dimension then pivot set.

    Each subspace is produced once, from its unique RREF: choose pivot
    columns, then fill every free slot to the right of each pivot.
    """
    from itertools import combinations, product

    p = field.p
    for r in range(n + 1):
        for pivots in combinations(range(n), r):
            slots = [(i, c) for i, pc in enumerate(pivots) for c in range(pc + 1, n) if c not in pivots]
            for values in product(range(p), repeat=len(slots)):
                rows = [[0] * n for _ in range(r)]
                for i, pc in enumerate(pivots):
                    rows[i][pc] = 1
                for (i, c), x in zip(slots, values):
                    rows[i][c] = x
                yield Subspace(field, n, Matrix(field, tuple(map(tuple, rows)), n), tuple(pivots))


def count_subspaces(p: int, n: int) -> int:
    """Total number of subspaces of GF(p)^n (sum of Gaussian binomials)."""
    total = 0
    for k in range(n + 1):
        num = den = 1
        for i in range(k):
            num *= p ** (n - i) - 1
            den *= p ** (i + 1) - 1
        total += num // den
    return total
