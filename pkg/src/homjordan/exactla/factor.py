"""Irreducible factorization of polynomials, delegated to sympy."""

from __future__ import annotations

from fractions import Fraction

from .field import Field, PrimeField
from . import poly as P


def irreducible_factors(f: Field, p: tuple) -> list[tuple]:
    """Distinct monic irreducible factors of p, sorted by (degree, coefficients)."""
    if P.degree(p) < 1:
        return []
    import sympy  # deferred: importing sympy costs about half a second

    x = sympy.Symbol("x")
    if isinstance(f, PrimeField):
        sp = sympy.Poly([int(c) for c in reversed(p)], x, modulus=f.p)
    else:
        sp = sympy.Poly([sympy.Rational(Fraction(c).numerator, Fraction(c).denominator) for c in reversed(p)],
                        x, domain=sympy.QQ)
    _, pairs = sp.factor_list()
    out = []
    for fac, _mult in pairs:
        coeffs = []
        for c in reversed(fac.all_coeffs()):
            if isinstance(f, PrimeField):
                coeffs.append(int(c) % f.p)
            else:
                r = sympy.Rational(c)
                coeffs.append(Fraction(int(r.p), int(r.q)))
        out.append(P.monic(f, P.trim(f, coeffs)))
    out = sorted(set(out), key=lambda q: (len(q), [f.format(c) for c in q]))
    return out
