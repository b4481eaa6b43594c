"""Independent dense evaluator over GF(p), used as a test oracle.

Shares no code with the verifiers in :mod:`homjordan.algebra`: it evaluates
both sides of an identity with numpy at every point of GF(p)^n and every
basis vector y.
"""

from __future__ import annotations

import itertools

import numpy as np

from .algebra import HomAlgebra


def _arrays(a: HomAlgebra) -> tuple[np.ndarray, np.ndarray, int]:
    p = a.field.p
    mu = np.array([[[int(c) % p for c in v] for v in row] for row in a.mu], dtype=np.int64).reshape(a.dim, a.dim, a.dim)
    alpha = np.array([[int(c) % p for c in r] for r in a.alpha.rows], dtype=np.int64).reshape(a.dim, a.dim)
    return mu, alpha, p


def _points(n: int, p: int) -> np.ndarray:
    return np.array(list(itertools.product(range(p), repeat=n)), dtype=np.int64).reshape(-1, n)


def _prod(mu: np.ndarray, x: np.ndarray, y: np.ndarray, p: int) -> np.ndarray:
    return np.einsum("ni,nj,ijk->nk", x, y, mu) % p


def _lin(m: np.ndarray, x: np.ndarray, p: int) -> np.ndarray:
    return (x @ m.T) % p


def exhaustive_hom_jordan(a: HomAlgebra) -> bool:
    """True iff commutative and the Hom-Jordan identity holds at every (x, e_l)."""
    if a.field.char == 0:
        raise ValueError("the oracle works over GF(p) only")
    mu, alpha, p = _arrays(a)
    n = a.dim
    if not np.array_equal(mu, mu.transpose(1, 0, 2)):
        return False
    if n == 0:
        return True
    xs = _points(n, p)
    ax = _lin(alpha, xs, p)
    a2x = _lin(alpha, ax, p)
    xx = _prod(mu, xs, xs, p)
    axx = _lin(alpha, xx, p)
    for l in range(n):
        y = np.zeros_like(xs)
        y[:, l] = 1
        lhs = _prod(mu, a2x, _prod(mu, y, xx, p), p)
        rhs = _prod(mu, _prod(mu, ax, y, p), axx, p)
        if not np.array_equal(lhs, rhs):
            return False
    return True


def exhaustive_jordan(a: HomAlgebra) -> bool:
    mu, _, p = _arrays(a)
    n = a.dim
    if not np.array_equal(mu, mu.transpose(1, 0, 2)):
        return False
    if n == 0:
        return True
    xs = _points(n, p)
    xx = _prod(mu, xs, xs, p)
    for l in range(n):
        y = np.zeros_like(xs)
        y[:, l] = 1
        lhs = _prod(mu, _prod(mu, xx, y, p), xs, p)
        rhs = _prod(mu, xx, _prod(mu, y, xs, p), p)
        if not np.array_equal(lhs, rhs):
            return False
    return True


def exhaustive_multiplicative(a: HomAlgebra) -> bool:
    mu, alpha, p = _arrays(a)
    n = a.dim
    if n == 0:
        return True
    xs = _points(n, p)
    for l in range(n):
        y = np.zeros_like(xs)
        y[:, l] = 1
        lhs = _lin(alpha, _prod(mu, xs, y, p), p)
        rhs = _prod(mu, _lin(alpha, xs, p), _lin(alpha, y, p), p)
        if not np.array_equal(lhs, rhs):
            return False
    return True


def random_symmetric_algebra(field, n: int, rng: np.random.Generator, density: float = 0.5) -> HomAlgebra:
    """Random commutative structure tensor and twist map over GF(p)."""
    p = field.p
    table = {}
    for i in range(n):
        for j in range(i, n):
            v = rng.integers(0, p, size=n) * (rng.random(size=n) < density)
            table[(i, j)] = tuple(int(c) for c in v)
    from .exactla import Matrix

    alpha = Matrix.from_rows(field, rng.integers(0, p, size=(n, n)).tolist())
    return HomAlgebra.from_products(field, n, table, alpha)
