"""Univariate polynomials over a field as coefficient tuples, lowest degree first.

The zero polynomial is ``()``; every other polynomial has a nonzero last
coefficient.
"""

from __future__ import annotations

from .field import Field
from .matrix import Matrix


def trim(f: Field, coeffs) -> tuple:
    c = [f.reduce(x) for x in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def degree(p: tuple) -> int:
    return len(p) - 1


def add(f: Field, a: tuple, b: tuple) -> tuple:
    n = max(len(a), len(b))
    return trim(f, [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def sub(f: Field, a: tuple, b: tuple) -> tuple:
    n = max(len(a), len(b))
    return trim(f, [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)])


def mul(f: Field, a: tuple, b: tuple) -> tuple:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return trim(f, out)


def divmod_poly(f: Field, a: tuple, b: tuple) -> tuple[tuple, tuple]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    q = [f.zero] * max(len(a) - len(b) + 1, 0)
    lead_inv = f.inv(b[-1])
    while len(r) >= len(b) and r:
        shift = len(r) - len(b)
        c = f.reduce(r[-1] * lead_inv)
        q[shift] = c
        for i, y in enumerate(b):
            r[shift + i] = f.reduce(r[shift + i] - c * y)
        while r and r[-1] == 0:
            r.pop()
    return trim(f, q), tuple(r)


def monic(f: Field, a: tuple) -> tuple:
    if not a:
        return a
    s = f.inv(a[-1])
    return tuple(f.reduce(x * s) for x in a)


def evaluate_at_matrix(p: tuple, m: Matrix) -> Matrix:
    """Horner evaluation p(m)."""
    n = m.nrows
    result = Matrix.zeros(m.field, n, n)
    ident = Matrix.identity(m.field, n)
    for c in reversed(p):
        result = result @ m + ident.scale(c)
    return result


def to_strings(f: Field, p: tuple) -> list[str]:
    return [f.format(x) for x in p]
