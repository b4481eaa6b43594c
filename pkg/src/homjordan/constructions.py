"""Constructions: twists, induced algebras, quotients, sums, splits, families, fixtures."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .algebra import (HomAlgebra, VerificationReport, Verdict, check_hom_jordan, check_homomorphism, check_jordan,
                      check_multiplicative, multiply, twist_tensor)
from .errors import (CertificationFailed, CharacteristicTwo, NotAnIdeal, NotAssociative, NotEndomorphism,
                     NotMultiplicative, PreconditionFailed)
from .exactla import QQ, Field, Matrix, Subspace, column_space, invert, kernel, solve


def _is_endomorphism(j: HomAlgebra, alpha: Matrix) -> bool:
    n = j.dim
    return all(alpha @ j.mu[i][k] == multiply(j, alpha.column(i), alpha.column(k))
               for i in range(n) for k in range(i, n))


def yau_twist(j: HomAlgebra, alpha: Matrix, verify: bool = True) -> HomAlgebra:
    """(V, alpha o mu, alpha) from a Jordan algebra and an endomorphism alpha."""
    if alpha.shape != (j.dim, j.dim):
        raise NotEndomorphism(f"alpha has shape {alpha.shape}")
    if not _is_endomorphism(j, alpha):
        raise NotEndomorphism("alpha does not preserve the product")
    out = HomAlgebra(j.field, twist_tensor(j.field, j.mu, alpha), alpha, False, j.labels)
    if verify:
        for rep in (check_multiplicative(out), check_hom_jordan(out)):
            if rep.verdict is Verdict.FAILS and check_jordan(j).verdict is not Verdict.FAILS:
                raise CertificationFailed(f"twist of a Jordan algebra failed {rep.to_json()}")
    return out


def induced_jordan(a: HomAlgebra, verify: bool = True) -> HomAlgebra:
    """(V, alpha^-1 o mu) for a multiplicative algebra with invertible alpha."""
    inv = invert(a.alpha)
    if not check_multiplicative(a).holds:
        raise NotMultiplicative("induced Jordan algebra needs a multiplicative algebra")
    out = HomAlgebra(a.field, twist_tensor(a.field, a.mu, inv), Matrix.identity(a.field, a.dim), True, a.labels)
    if verify and check_jordan(out).verdict is Verdict.FAILS \
            and check_hom_jordan(a).verdict is not Verdict.FAILS:
        raise CertificationFailed("induced algebra of a Hom-Jordan algebra is not Jordan")
    return out


def restrict_algebra(a: HomAlgebra, sub: Subspace, jordan_mode: bool | None = None) -> HomAlgebra:
    """The algebra on an invariant subspace, in the coordinates of its RREF basis."""
    vecs = sub.vectors()
    for v in vecs:
        if a.alpha @ v not in sub:
            raise PreconditionFailed("subspace is not alpha-invariant")
    table = {}
    for i, u in enumerate(vecs):
        for k in range(i, len(vecs)):
            prod = multiply(a, u, vecs[k])
            if prod not in sub:
                raise PreconditionFailed("subspace is not closed under the product")
            table[(i, k)] = sub.coordinates(prod)
    d = len(vecs)
    alpha = Matrix.from_columns(a.field, [sub.coordinates(a.alpha @ v) for v in vecs], d)
    if jordan_mode is None:
        jordan_mode = a.jordan_mode
    return HomAlgebra.from_products(a.field, d, table, alpha, jordan_mode and alpha.is_identity())


@dataclass(frozen=True)
class Quotient:
    algebra: HomAlgebra
    projection: Matrix      # V -> V/I in coset coordinates
    lift: Matrix            # columns are the chosen coset representatives


def quotient(a: HomAlgebra, ideal: Subspace, representatives: Sequence[Sequence] | None = None,
             require_ideal: bool = True) -> Quotient:
    from .structure import is_hom_ideal

    if require_ideal and not is_hom_ideal(a, ideal):
        raise NotAnIdeal("subspace is not a Hom-ideal")
    f, n = a.field, a.dim
    if representatives is None:
        representatives = [a.basis_vector(c) for c in ideal.complement_pivots()]
    reps = [tuple(f.coerce(x) for x in r) for r in representatives]
    d = len(reps)
    if d + ideal.dim != n or not (Subspace.span(f, n, reps) + ideal).is_full():
        raise PreconditionFailed("representatives do not span a complement of the ideal")
    system = Matrix.from_columns(f, reps + ideal.vectors(), n)

    def proj(v):
        return solve(system, v)[:d]

    projection = Matrix.from_columns(f, [proj(a.basis_vector(c)) for c in range(n)], d)
    table = {(r, s): projection @ multiply(a, reps[r], reps[s]) for r in range(d) for s in range(r, d)}
    alpha = Matrix.from_columns(f, [projection @ (a.alpha @ rep) for rep in reps], d)
    alg = HomAlgebra.from_products(f, d, table, alpha, a.jordan_mode and alpha.is_identity())
    return Quotient(alg, projection, Matrix.from_columns(f, reps, n))


def quotient_algebra(a: HomAlgebra, ideal: Subspace, representatives=None) -> HomAlgebra:
    return quotient(a, ideal, representatives).algebra


def direct_sum(a: HomAlgebra, b: HomAlgebra) -> HomAlgebra:
    if a.field != b.field:
        raise ValueError("direct sum of algebras over different fields")
    f = a.field
    n, m = a.dim, b.dim
    z = f.zero
    table = {}
    for i in range(n):
        for j in range(i, n):
            table[(i, j)] = a.mu[i][j] + (z,) * m
    for i in range(m):
        for j in range(i, m):
            table[(n + i, n + j)] = (z,) * n + b.mu[i][j]
    alpha = Matrix.block_diagonal(f, [a.alpha, b.alpha])
    return HomAlgebra.from_products(f, n + m, table, alpha, a.jordan_mode and b.jordan_mode)


def summand_subspaces(a: HomAlgebra, b: HomAlgebra) -> tuple[Subspace, Subspace]:
    """The two blocks of direct_sum(a, b) as subspaces."""
    f, n, m = a.field, a.dim, b.dim
    e = Matrix.identity(f, n + m).rows
    return Subspace.span(f, n + m, e[:n]), Subspace.span(f, n + m, e[n:])


@dataclass(frozen=True)
class SplitResult:
    summand_quotient: HomAlgebra
    summand_kernel: HomAlgebra
    total: HomAlgebra
    iso: Matrix
    report: VerificationReport
    image_algebra: HomAlgebra
    phi: Matrix
    phi_report: VerificationReport


def split_idempotent_alpha(a: HomAlgebra) -> SplitResult:
    """Realize V = (V/Ker alpha) (+) Ker alpha for an idempotent twist map."""
    f, n = a.field, a.dim
    if a.alpha @ a.alpha != a.alpha:
        raise PreconditionFailed("alpha^2 != alpha")
    if not check_multiplicative(a).holds:
        raise PreconditionFailed("algebra is not multiplicative")
    im = column_space(a.alpha)
    for u in im.vectors():
        for j in range(n):
            if multiply(a, u, a.basis_vector(j)) not in im:
                raise PreconditionFailed("mu(Im(alpha), V) is not contained in Im(alpha)")
    ker = kernel(a.alpha)
    q = quotient(a, ker)
    ker_alg = restrict_algebra(a, ker)
    total = direct_sum(q.algebra, ker_alg)
    ident = Matrix.identity(f, n)
    rest = ident - a.alpha
    bottom = Matrix.from_columns(f, [ker.coordinates(rest.column(j)) for j in range(n)], ker.dim)
    iso = Matrix(f, q.projection.rows + bottom.rows, n)
    report = check_homomorphism(iso, a, total, isomorphism=True)
    img = restrict_algebra(a, im)
    phi = Matrix.from_columns(f, [im.coordinates(a.alpha @ q.lift.column(r)) for r in range(q.lift.ncols)], im.dim)
    phi_report = check_homomorphism(phi, q.algebra, img, isomorphism=True)
    return SplitResult(q.algebra, ker_alg, total, iso, report, img, phi, phi_report)


# --------------------------------------------------------------------------
# construction families and fixtures


def _vec(f: Field, n: int, entries: dict) -> tuple:
    return tuple(f.coerce(entries.get(k, 0)) for k in range(n))


def family_dim1(k, field: Field = QQ) -> HomAlgebra:
    """mu(e, e) = e, alpha = k id."""
    return HomAlgebra.from_products(field, 1, {(0, 0): (1,)}, Matrix.from_rows(field, [[k]]))


def family_dim2(p, q, field: Field = QQ) -> HomAlgebra:
    """mu(e0,e0)=e0, mu(e1,e1)=e1, mu(e0,e1)=e0+e1, alpha = diag(p, q)."""
    table = {(0, 0): (1, 0), (1, 1): (0, 1), (0, 1): (1, 1)}
    return HomAlgebra.from_products(field, 2, table, Matrix.diagonal(field, [p, q]))


def family_cyclic(n: int, alpha: Matrix | None = None, field: Field = QQ) -> HomAlgebra:
    """mu(a_i, a_{i+1}) = a_{i+2} (indices mod n), all other products zero."""
    if n < 3:
        raise ValueError("the cyclic family needs n >= 3")
    if alpha is None:
        alpha = Matrix.identity(field, n)
    table = {(i, (i + 1) % n): _vec(field, n, {(i + 2) % n: 1}) for i in range(n)}
    return HomAlgebra.from_products(field, n, table, alpha)


def cyclic_shift(field: Field, n: int) -> Matrix:
    """a_i -> a_{i+1}."""
    return Matrix.from_columns(field, [_vec(field, n, {(j + 1) % n: 1}) for j in range(n)], n)


def fixture_example_4_4(field: Field = QQ) -> HomAlgebra:
    """The swap example: e1^2 = e2, e2^2 = e1, alpha exchanges e1 and e2."""
    table = {(0, 0): (0, 1), (1, 1): (1, 0)}
    return HomAlgebra.from_products(field, 2, table, Matrix.from_rows(field, [[0, 1], [1, 0]]),
                                    labels=("e1", "e2"))


def idempotent_line(field: Field = QQ) -> HomAlgebra:
    """The 1-dimensional Jordan algebra F e with e o e = e."""
    return HomAlgebra.from_products(field, 1, {(0, 0): (1,)}, jordan_mode=True)


def diagonal_algebra(field: Field, n: int) -> HomAlgebra:
    """F^n with orthogonal idempotents e_i o e_i = e_i."""
    return HomAlgebra.from_products(field, n, {(i, i): _vec(field, n, {i: 1}) for i in range(n)},
                                    jordan_mode=True)


def quadratic_extension(field: Field, d) -> HomAlgebra:
    """F[s]/(s^2 - d) with basis (1, s); a field when d is a non-square."""
    if field.char == 2:
        raise CharacteristicTwo("quadratic_extension uses s^2 = d, which is inseparable in characteristic 2")
    table = {(0, 0): (1, 0), (0, 1): (0, 1), (1, 1): (d, 0)}
    return HomAlgebra.from_products(field, 2, table, jordan_mode=True)


def conjugation(field: Field) -> Matrix:
    """The automorphism s -> -s of quadratic_extension."""
    return Matrix.diagonal(field, [1, -1])


def twisted_pair(x: HomAlgebra, sigma: Matrix | None = None) -> HomAlgebra:
    """J = X (+) X with alpha(u, v) = (v, sigma u) and mu = alpha o mu_J.

    fixture_example_4_4 is the case X = idempotent line, sigma = id; the
    classification data of the result is (X, 2, sigma).
    """
    f, m = x.field, x.dim
    if sigma is None:
        sigma = Matrix.identity(f, m)
    j = direct_sum(x, x)
    z = Matrix.zeros(f, m, m)
    ident = Matrix.identity(f, m)
    rows = [a + b for a, b in zip(z.rows, ident.rows)] + [a + b for a, b in zip(sigma.rows, z.rows)]
    alpha = Matrix(f, tuple(rows), 2 * m)
    return yau_twist(j, alpha)


def fixture_example_4_4_variant(field: Field = QQ, d=2) -> HomAlgebra:
    """The swap pattern over a quadratic extension, alpha^2 = conjugation on each ideal."""
    return twisted_pair(quadratic_extension(field, d), conjugation(field))


def matrix_units(field: Field, size: int) -> tuple:
    """Associative structure tensor of full size x size matrices, basis E_ij at index size*i + j."""
    n = size * size
    t = [[(field.zero,) * n for _ in range(n)] for _ in range(n)]
    for i in range(size):
        for j in range(size):
            for k in range(size):
                for l in range(size):
                    if j == k:
                        t[size * i + j][size * k + l] = _vec(field, n, {size * i + l: 1})
    return tuple(map(tuple, t))


def strictly_upper_units(field: Field, size: int) -> tuple:
    """Associative tensor of strictly upper-triangular matrices, basis E_ij (i < j) in row order."""
    idx = [(i, j) for i in range(size) for j in range(i + 1, size)]
    pos = {p: k for k, p in enumerate(idx)}
    n = len(idx)
    t = [[(field.zero,) * n for _ in range(n)] for _ in range(n)]
    for a, (i, j) in enumerate(idx):
        for b, (k, l) in enumerate(idx):
            if j == k:
                t[a][b] = _vec(field, n, {pos[(i, l)]: 1})
    return tuple(map(tuple, t))


def _assoc_product(field, tensor, x, y):
    n = len(tensor)
    acc = [0] * n
    for i, xi in enumerate(x):
        if xi:
            for j, yj in enumerate(y):
                if yj:
                    for k, c in enumerate(tensor[i][j]):
                        if c:
                            acc[k] += xi * yj * c
    return tuple(field.reduce(v) for v in acc)


def special_jordan_from_associative(field: Field, assoc: tuple, check: bool = True) -> HomAlgebra:
    """x o y = (xy + yx)/2 from an associative structure tensor."""
    if field.char == 2:
        raise CharacteristicTwo("the symmetrized product needs 1/2")
    n = len(assoc)
    basis = [_vec(field, n, {i: 1}) for i in range(n)]
    if check:
        for i in range(n):
            for j in range(n):
                ij = assoc[i][j]
                for k in range(n):
                    if _assoc_product(field, assoc, ij, basis[k]) != _assoc_product(field, assoc, basis[i], assoc[j][k]):
                        raise NotAssociative(f"(e{i} e{j}) e{k} != e{i} (e{j} e{k})")
    half = field.inv(2)
    table = {(i, j): tuple(field.reduce(half * (u + v)) for u, v in zip(assoc[i][j], assoc[j][i]))
             for i in range(n) for j in range(i, n)}
    return HomAlgebra.from_products(field, n, table, jordan_mode=True)


def full_matrix_jordan(field: Field, size: int = 2) -> HomAlgebra:
    """M_size^+ ."""
    return special_jordan_from_associative(field, matrix_units(field, size))


def strictly_upper_jordan(field: Field, size: int = 3) -> HomAlgebra:
    return special_jordan_from_associative(field, strictly_upper_units(field, size))


def conjugation_map(field: Field, g: Matrix, basis: Sequence[tuple[int, int]], size: int) -> Matrix:
    """x -> g x g^-1 on the span of the matrix units listed in ``basis``."""
    ginv = invert(g)
    pos = {p: k for k, p in enumerate(basis)}
    cols = []
    for (i, j) in basis:
        e = Matrix.from_rows(field, [[1 if (r, c) == (i, j) else 0 for c in range(size)] for r in range(size)])
        img = g @ e @ ginv
        v = [field.zero] * len(basis)
        for r in range(size):
            for c in range(size):
                if img[r, c] != 0:
                    if (r, c) not in pos:
                        raise PreconditionFailed("conjugation does not preserve the subspace")
                    v[pos[(r, c)]] = img[r, c]
        cols.append(tuple(v))
    return Matrix.from_columns(field, cols, len(basis))


def full_units(size: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(size) for j in range(size)]


def upper_units(size: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(size) for j in range(i + 1, size)]


def transpose_map(field: Field, size: int = 2) -> Matrix:
    basis = full_units(size)
    pos = {p: k for k, p in enumerate(basis)}
    return Matrix.from_columns(field, [_vec(field, len(basis), {pos[(j, i)]: 1}) for (i, j) in basis], len(basis))


def fixture_example_4_4_rescaled(field: Field = QQ, c=2) -> HomAlgebra:
    """alpha = c * swap with mu = alpha o mu', mu' the two orthogonal idempotents.

    For c != 1 this is not multiplicative: alpha is not an automorphism of mu'.
    """
    alpha = Matrix.from_rows(field, [[0, c], [c, 0]])
    return HomAlgebra(field, twist_tensor(field, diagonal_algebra(field, 2).mu, alpha), alpha,
                      labels=("e1", "e2"))
