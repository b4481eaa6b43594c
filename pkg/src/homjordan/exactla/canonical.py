"""Similarity invariants: invariant factors and the rational canonical form."""

from __future__ import annotations

from dataclasses import dataclass

from . import poly as P
from .field import Field
from .matrix import Matrix, ShapeError


@dataclass(frozen=True)
class SimilarityInvariant:
    """Monic invariant factors d_1 | d_2 | ... | d_k of degree >= 1.

    Two square matrices over the same field are similar iff their
    invariant factor lists are equal.
    """

    field: Field
    factors: tuple

    @property
    def charpoly(self) -> tuple:
        out = (self.field.one,)
        for d in self.factors:
            out = P.mul(self.field, out, d)
        return out

    @property
    def minpoly(self) -> tuple:
        return self.factors[-1] if self.factors else (self.field.one,)

    def canonical_form(self) -> Matrix:
        """Block-diagonal matrix of companion matrices of the invariant factors."""
        return Matrix.block_diagonal(self.field, [companion(self.field, d) for d in self.factors]) \
            if self.factors else Matrix.zeros(self.field, 0, 0)

    def to_json(self) -> list[list[str]]:
        return [P.to_strings(self.field, d) for d in self.factors]


def companion(f: Field, d: tuple) -> Matrix:
    """Companion matrix of a monic polynomial: ones on the subdiagonal, -coeffs in the last column."""
    n = P.degree(d)
    rows = [[f.zero] * n for _ in range(n)]
    for i in range(1, n):
        rows[i][i - 1] = f.one
    for i in range(n):
        rows[i][n - 1] = f.reduce(-d[i])
    return Matrix(f, tuple(map(tuple, rows)), n)


def smith_diagonal(f: Field, m: list[list[tuple]]) -> list[tuple]:
    """Diagonal of the Smith normal form of a square polynomial matrix (monic entries)."""
    n = len(m)
    m = [list(r) for r in m]
    for t in range(n):
        while True:
            best = None
            for i in range(t, n):
                for j in range(t, n):
                    if m[i][j] and (best is None or P.degree(m[i][j]) < P.degree(m[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                return [P.monic(f, m[i][i]) for i in range(t)] + [()] * (n - t)
            i, j = best
            m[t], m[i] = m[i], m[t]
            for r in m:
                r[t], r[j] = r[j], r[t]
            piv = m[t][t]
            clean = True
            for i in range(t + 1, n):
                if m[i][t]:
                    q, rem = P.divmod_poly(f, m[i][t], piv)
                    m[i] = [P.sub(f, a, P.mul(f, q, b)) for a, b in zip(m[i], m[t])]
                    clean = clean and not rem
            for j in range(t + 1, n):
                if m[t][j]:
                    q, rem = P.divmod_poly(f, m[t][j], piv)
                    for r in m:
                        r[j] = P.sub(f, r[j], P.mul(f, q, r[t]))
                    clean = clean and not rem
            if not clean:
                continue
            bad = next(((i, j) for i in range(t + 1, n) for j in range(t + 1, n)
                        if m[i][j] and P.divmod_poly(f, m[i][j], piv)[1]), None)
            if bad is None:
                break
            m[t] = [P.add(f, a, b) for a, b in zip(m[t], m[bad[0]])]
        m[t][t] = P.monic(f, m[t][t])
    return [m[i][i] for i in range(n)]


def similarity_invariant(a: Matrix) -> SimilarityInvariant:
    if not a.is_square:
        raise ShapeError("similarity invariants need a square matrix")
    f = a.field
    n = a.nrows
    xm = [[P.trim(f, [-a[i, j], 1 if i == j else 0]) for j in range(n)] for i in range(n)]
    diag = smith_diagonal(f, xm)
    return SimilarityInvariant(f, tuple(d for d in diag if P.degree(d) >= 1))


def rational_canonical_form(a: Matrix) -> Matrix:
    return similarity_invariant(a).canonical_form()


def charpoly(a: Matrix) -> tuple:
    return similarity_invariant(a).charpoly
