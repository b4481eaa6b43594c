"""Hom-algebras given by structure constants, and identity verifiers.

A :class:`HomAlgebra` stores ``mu[i][j]`` as the coordinate vector of
mu(e_i, e_j) and the twist map ``alpha`` in column convention, i.e.
alpha(e_j) = sum_i alpha[i, j] e_i.  A plain Jordan algebra is the case
alpha = identity with ``jordan_mode`` set.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from enum import Enum
from functools import cached_property
from typing import Callable, Mapping, Sequence

from .exactla import Field, Matrix, Singular, invert

DEFAULT_BUDGET = 2 ** 16


class DimensionError(ValueError):
    pass


class NotJordanType(ValueError):
    """A twist map that should be invertible is singular."""


@dataclass(frozen=True)
class HomAlgebra:
    field: Field
    mu: tuple
    alpha: Matrix
    jordan_mode: bool = False
    labels: tuple | None = dc_field(default=None, compare=False)

    def __post_init__(self):
        n = len(self.mu)
        if any(len(row) != n or any(len(v) != n for v in row) for row in self.mu):
            raise DimensionError("structure tensor must be n x n x n")
        if self.alpha.shape != (n, n):
            raise DimensionError(f"alpha has shape {self.alpha.shape}, expected {(n, n)}")
        if self.alpha.field != self.field:
            raise DimensionError("alpha is over a different field")
        if self.jordan_mode and not self.alpha.is_identity():
            raise DimensionError("jordan_mode requires alpha = identity")

    @classmethod
    def from_products(cls, field: Field, n: int, products: Mapping, alpha: Matrix | None = None,
                      jordan_mode: bool = False, labels=None) -> "HomAlgebra":
        """Build from a sparse table {(i, j): vector}; (j, i) is filled in by symmetry.

        Giving both (i, j) and (j, i) with different values is an error.
        """
        z = (field.zero,) * n
        table = [[z] * n for _ in range(n)]
        seen = {}
        for (i, j), v in products.items():
            if not (0 <= i < n and 0 <= j < n):
                raise DimensionError(f"index ({i}, {j}) out of range for dimension {n}")
            v = tuple(field.coerce(x) for x in v)
            if len(v) != n:
                raise DimensionError("product vector has wrong length")
            key = (min(i, j), max(i, j))
            if key in seen and seen[key] != v:
                raise ValueError(f"conflicting entries for mu(e_{key[0]}, e_{key[1]})")
            seen[key] = v
        for (i, j), v in seen.items():
            table[i][j] = v
            table[j][i] = v
        if alpha is None:
            alpha = Matrix.identity(field, n)
        return cls(field, tuple(tuple(r) for r in table), alpha, jordan_mode, labels)

    @classmethod
    def zero(cls, field: Field, n: int, alpha: Matrix | None = None) -> "HomAlgebra":
        return cls.from_products(field, n, {}, alpha, jordan_mode=alpha is None)

    @property
    def dim(self) -> int:
        return len(self.mu)

    def basis_vector(self, i: int) -> tuple:
        f = self.field
        return tuple(f.one if k == i else f.zero for k in range(self.dim))

    def zero_vector(self) -> tuple:
        return (self.field.zero,) * self.dim

    @cached_property
    def left_operators(self) -> tuple:
        """L_{e_i} for every basis index i."""
        n = self.dim
        return tuple(Matrix.from_columns(self.field, [self.mu[i][j] for j in range(n)], n) for i in range(n))

    @cached_property
    def right_operators(self) -> tuple:
        """R_{e_i}: x -> mu(x, e_i); equal to left_operators when mu is commutative."""
        n = self.dim
        return tuple(Matrix.from_columns(self.field, [self.mu[j][i] for j in range(n)], n) for i in range(n))

    @cached_property
    def is_commutative(self) -> bool:
        n = self.dim
        return all(self.mu[i][j] == self.mu[j][i] for i in range(n) for j in range(i + 1, n))

    def with_alpha(self, alpha: Matrix) -> "HomAlgebra":
        return HomAlgebra(self.field, self.mu, alpha, False, self.labels)


def _check_vec(a: HomAlgebra, v: Sequence):
    if len(v) != a.dim:
        raise DimensionError(f"vector of length {len(v)} for algebra of dimension {a.dim}")


def multiply(a: HomAlgebra, x: Sequence, y: Sequence) -> tuple:
    _check_vec(a, x)
    _check_vec(a, y)
    acc = [0] * a.dim
    for i, xi in enumerate(x):
        if not xi:
            continue
        row = a.mu[i]
        for j, yj in enumerate(y):
            if not yj:
                continue
            c = xi * yj
            for k, m in enumerate(row[j]):
                if m:
                    acc[k] += c * m
    red = a.field.reduce
    return tuple(red(v) for v in acc)


def apply_alpha(a: HomAlgebra, x: Sequence) -> tuple:
    return a.alpha @ x


def left_mult_operator(a: HomAlgebra, i: int) -> Matrix:
    """Matrix of x -> mu(e_i, x)."""
    if not 0 <= i < a.dim:
        raise DimensionError(f"basis index {i} out of range")
    return a.left_operators[i]


def left_mult_by(a: HomAlgebra, x: Sequence) -> Matrix:
    """Matrix of y -> mu(x, y) for an arbitrary vector x."""
    return _combine_ops(a, x, a.left_operators)


def right_mult_by(a: HomAlgebra, x: Sequence) -> Matrix:
    """Matrix of y -> mu(y, x)."""
    return _combine_ops(a, x, a.right_operators)


def _combine_ops(a: HomAlgebra, x: Sequence, ops) -> Matrix:
    _check_vec(a, x)
    n = a.dim
    acc = [[0] * n for _ in range(n)]
    for xi, L in zip(x, ops):
        if xi:
            for r in range(n):
                row = L.rows[r]
                accr = acc[r]
                for c in range(n):
                    if row[c]:
                        accr[c] += xi * row[c]
    red = a.field.reduce
    return Matrix(a.field, tuple(tuple(red(v) for v in r) for r in acc), n)


def twist_tensor(field: Field, mu: tuple, m: Matrix) -> tuple:
    """Structure tensor of (x, y) -> m(mu(x, y))."""
    return tuple(tuple(m @ v for v in row) for row in mu)


# --------------------------------------------------------------------------
# reports


class Verdict(str, Enum):
    HOLDS = "holds"
    FAILS = "fails"
    UNDECIDABLE = "undecidable"


@dataclass(frozen=True)
class Check:
    name: str
    verdict: Verdict
    witness: dict | None = None
    reason: str | None = None

    def to_json(self, field: Field) -> dict:
        out = {"name": self.name, "verdict": self.verdict.value}
        if self.witness is not None:
            out["witness"] = {k: _jsonify(field, v) for k, v in self.witness.items()}
        if self.reason is not None:
            out["reason"] = self.reason
        return out


def _jsonify(field: Field, v):
    if isinstance(v, Matrix):
        return v.to_strings()
    if isinstance(v, tuple):
        return [_jsonify(field, x) for x in v]
    if isinstance(v, (str, bool)) or v is None:
        return v
    if isinstance(v, list):
        return [_jsonify(field, x) for x in v]
    return field.format(v)


@dataclass(frozen=True)
class VerificationReport:
    field: Field
    checks: tuple

    @property
    def verdict(self) -> Verdict:
        verdicts = [c.verdict for c in self.checks]
        if Verdict.FAILS in verdicts:
            return Verdict.FAILS
        if Verdict.UNDECIDABLE in verdicts:
            return Verdict.UNDECIDABLE
        return Verdict.HOLDS

    @property
    def holds(self) -> bool:
        return self.verdict is Verdict.HOLDS

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def __add__(self, other: "VerificationReport") -> "VerificationReport":
        return VerificationReport(self.field, self.checks + other.checks)

    def to_json(self) -> dict:
        return {"verdict": self.verdict.value, "checks": [c.to_json(self.field) for c in self.checks]}


def _report(a_or_field, *checks: Check) -> VerificationReport:
    f = a_or_field.field if isinstance(a_or_field, HomAlgebra) else a_or_field
    return VerificationReport(f, tuple(checks))


# --------------------------------------------------------------------------
# the identities


def hom_jordan_sides(a: HomAlgebra, x: Sequence, y: Sequence) -> tuple[tuple, tuple]:
    """Both sides of mu(a^2 x, mu(y, mu(x, x))) = mu(mu(a x, y), a(mu(x, x)))."""
    ax = apply_alpha(a, x)
    a2x = apply_alpha(a, ax)
    xx = multiply(a, x, x)
    lhs = multiply(a, a2x, multiply(a, y, xx))
    rhs = multiply(a, multiply(a, ax, y), apply_alpha(a, xx))
    return lhs, rhs


def jordan_sides(a: HomAlgebra, x: Sequence, y: Sequence) -> tuple[tuple, tuple]:
    """Both sides of (x^2 o y) o x = x^2 o (y o x)."""
    xx = multiply(a, x, x)
    lhs = multiply(a, multiply(a, xx, y), x)
    rhs = multiply(a, xx, multiply(a, y, x))
    return lhs, rhs


def _hom_jordan_term(a: HomAlgebra) -> Callable:
    # operator in y of the trilinear defect h(u; v, w) on basis vectors
    alpha, alpha2 = a.alpha, a.alpha @ a.alpha

    def term(i, j, k) -> Matrix:
        m = a.mu[j][k]
        lhs = left_mult_by(a, alpha2.column(i)) @ right_mult_by(a, m)
        rhs = right_mult_by(a, alpha @ m) @ left_mult_by(a, alpha.column(i))
        return lhs - rhs

    return term


def _jordan_term(a: HomAlgebra) -> Callable:
    def term(i, j, k) -> Matrix:
        Lm = left_mult_by(a, a.mu[j][k])
        return a.right_operators[i] @ Lm - Lm @ a.right_operators[i]

    return term


def _defect_operator_hom_jordan(a: HomAlgebra, x: Sequence) -> tuple[Matrix, Matrix]:
    ax = apply_alpha(a, x)
    xx = multiply(a, x, x)
    lhs = left_mult_by(a, apply_alpha(a, ax)) @ right_mult_by(a, xx)
    rhs = right_mult_by(a, apply_alpha(a, xx)) @ left_mult_by(a, ax)
    return lhs, rhs


def _defect_operator_jordan(a: HomAlgebra, x: Sequence) -> tuple[Matrix, Matrix]:
    xx = multiply(a, x, x)
    Rx, Lxx = right_mult_by(a, x), left_mult_by(a, xx)
    return Rx @ Lxx, Lxx @ Rx


def _check_cubic(a: HomAlgebra, name: str, term: Callable, defect: Callable, sides: Callable,
                 budget: int, strategy: str | None) -> Check:
    """Decide an identity H(x; y) = 0 that is cubic in x and linear in y.

    ``term(i, j, k)`` is the operator (in y) of the trilinear form whose
    diagonal is H; ``defect(x)`` returns the two operators of H(x; .).
    """
    f = a.field
    n = a.dim
    if strategy is None:
        strategy = "polarize" if (f.char == 0 or f.char >= 5) else "exhaustive"
    if strategy == "polarize":
        if f.char in (2, 3):
            raise ValueError("polarization is unsound in characteristic 2 or 3")
        for i, j, k in itertools.combinations_with_replacement(range(n), 3):
            total = None
            for u, v, w in itertools.permutations((i, j, k)):
                t = term(u, v, w)
                total = t if total is None else total + t
            if total.is_zero():
                continue
            l = next(c for c in range(n) if any(x != 0 for x in total.column(c)))
            y = a.basis_vector(l)
            for coeffs in itertools.product(range(4), repeat=3):
                if not any(coeffs):
                    continue
                x = tuple(f.reduce(coeffs[0] * (t == i) + coeffs[1] * (t == j) + coeffs[2] * (t == k))
                          for t in range(n))
                lhs, rhs = sides(a, x, y)
                if lhs != rhs:
                    return Check(name, Verdict.FAILS, {"x": x, "y": y, "lhs": lhs, "rhs": rhs},
                                 f"polarized defect nonzero on basis tuple ({i}, {j}, {k}; {l})")
            raise AssertionError("polarized defect nonzero but no witness on the 4-point grid")
        return Check(name, Verdict.HOLDS, reason="full polarization vanishes on all basis tuples")
    if strategy != "exhaustive":
        raise ValueError(f"unknown strategy {strategy!r}")
    if f.char == 0:
        raise ValueError("exhaustive evaluation needs a finite field")
    if f.p ** n > budget:
        return Check(name, Verdict.UNDECIDABLE,
                     reason=f"exhaustive enumeration needs {f.p}^{n} points, budget is {budget}")
    for x in itertools.product(range(f.p), repeat=n):
        lhs_op, rhs_op = defect(a, x)
        if lhs_op == rhs_op:
            continue
        l = next(c for c in range(n) if lhs_op.column(c) != rhs_op.column(c))
        y = a.basis_vector(l)
        lhs, rhs = sides(a, x, y)
        return Check(name, Verdict.FAILS, {"x": x, "y": y, "lhs": lhs, "rhs": rhs},
                     "exhaustive enumeration found a failing point")
    return Check(name, Verdict.HOLDS, reason=f"identity holds at all {f.p}^{n} points")


def check_commutative(a: HomAlgebra) -> VerificationReport:
    n = a.dim
    for i in range(n):
        for j in range(i + 1, n):
            if a.mu[i][j] != a.mu[j][i]:
                return _report(a, Check("commutative", Verdict.FAILS,
                                        {"x": a.basis_vector(i), "y": a.basis_vector(j),
                                         "lhs": a.mu[i][j], "rhs": a.mu[j][i]}))
    return _report(a, Check("commutative", Verdict.HOLDS))


def check_hom_jordan(a: HomAlgebra, budget: int = DEFAULT_BUDGET, strategy: str | None = None) -> VerificationReport:
    """Commutativity plus the Hom-Jordan identity for all x, y."""
    comm = check_commutative(a)
    ident = _check_cubic(a, "hom_jordan", _hom_jordan_term(a), _defect_operator_hom_jordan,
                         hom_jordan_sides, budget, strategy)
    return comm + _report(a, ident)


def check_jordan(a: HomAlgebra, budget: int = DEFAULT_BUDGET, strategy: str | None = None) -> VerificationReport:
    if not (a.jordan_mode or a.alpha.is_identity()):
        raise ValueError("check_jordan needs a Jordan-mode algebra (alpha = identity)")
    comm = check_commutative(a)
    ident = _check_cubic(a, "jordan", _jordan_term(a), _defect_operator_jordan, jordan_sides, budget, strategy)
    return comm + _report(a, ident)


def check_multiplicative(a: HomAlgebra) -> VerificationReport:
    """alpha(mu(x, y)) = mu(alpha x, alpha y) on basis pairs."""
    n = a.dim
    pairs = itertools.combinations_with_replacement(range(n), 2) if a.is_commutative \
        else itertools.product(range(n), repeat=2)
    for i, j in pairs:
        lhs = a.alpha @ a.mu[i][j]
        rhs = multiply(a, a.alpha.column(i), a.alpha.column(j))
        if lhs != rhs:
            return _report(a, Check("multiplicative", Verdict.FAILS,
                                    {"x": a.basis_vector(i), "y": a.basis_vector(j), "lhs": lhs, "rhs": rhs}))
    return _report(a, Check("multiplicative", Verdict.HOLDS))


def check_homomorphism(phi: Matrix, a: HomAlgebra, b: HomAlgebra, isomorphism: bool = False) -> VerificationReport:
    """phi(mu(x, y)) = mu'(phi x, phi y) and phi o alpha = beta o phi; optionally bijectivity."""
    if phi.shape != (b.dim, a.dim):
        raise DimensionError(f"phi has shape {phi.shape}, expected {(b.dim, a.dim)}")
    if a.field != b.field:
        raise DimensionError("algebras over different fields")
    checks = []
    mult = Check("preserves_product", Verdict.HOLDS)
    pairs = itertools.combinations_with_replacement(range(a.dim), 2) if a.is_commutative \
        else itertools.product(range(a.dim), repeat=2)
    for i, j in pairs:
        lhs = phi @ a.mu[i][j]
        rhs = multiply(b, phi.column(i), phi.column(j))
        if lhs != rhs:
            mult = Check("preserves_product", Verdict.FAILS,
                         {"x": a.basis_vector(i), "y": a.basis_vector(j), "lhs": lhs, "rhs": rhs})
            break
    checks.append(mult)
    left, right = phi @ a.alpha, b.alpha @ phi
    inter = Check("intertwines_alpha", Verdict.HOLDS)
    for j in range(a.dim):
        if left.column(j) != right.column(j):
            inter = Check("intertwines_alpha", Verdict.FAILS,
                          {"x": a.basis_vector(j), "lhs": left.column(j), "rhs": right.column(j)})
            break
    checks.append(inter)
    if isomorphism:
        checks.append(_bijective_check(phi))
    return _report(a, *checks)


def _bijective_check(phi: Matrix) -> Check:
    if not phi.is_square:
        return Check("bijective", Verdict.FAILS, reason=f"map of shape {phi.shape} cannot be bijective")
    try:
        invert(phi)
    except Singular as e:
        return Check("bijective", Verdict.FAILS, reason=str(e))
    return Check("bijective", Verdict.HOLDS)


def _untwisted(a: HomAlgebra) -> HomAlgebra:
    try:
        inv = invert(a.alpha)
    except Singular as e:
        raise NotJordanType(f"twist map is singular: {e}") from None
    return HomAlgebra(a.field, twist_tensor(a.field, a.mu, inv), Matrix.identity(a.field, a.dim), True)


def check_hom_isomorphism_via_induced(phi: Matrix, a: HomAlgebra, b: HomAlgebra) -> VerificationReport:
    """Decide "phi is a Hom-isomorphism" two ways and compare.

    Route one checks phi against (mu, alpha) and (mu', beta) directly.
    Route two checks that phi is an isomorphism of the induced Jordan
    algebras and that beta o phi = phi o alpha.  The ``agreement`` check
    fails only if the two routes disagree.
    """
    ja, jb = _untwisted(a), _untwisted(b)
    direct = check_homomorphism(phi, a, b, isomorphism=True)
    induced = check_homomorphism(phi, ja, jb, isomorphism=True)
    inter = check_homomorphism(phi, a, b)["intertwines_alpha"]
    via_induced_ok = induced["preserves_product"].verdict is Verdict.HOLDS and \
        induced["bijective"].verdict is Verdict.HOLDS and inter.verdict is Verdict.HOLDS
    first_failure = next((c for c in (*induced.checks, inter) if c.verdict is Verdict.FAILS), None)
    direct_check = Check("hom_isomorphism", direct.verdict,
                         reason=None if direct.holds else next(c.name for c in direct.checks
                                                               if c.verdict is Verdict.FAILS))
    induced_check = Check("induced_isomorphism", Verdict.HOLDS if via_induced_ok else Verdict.FAILS,
                          first_failure.witness if first_failure else None,
                          None if via_induced_ok else first_failure.name)
    agree = Check("agreement", Verdict.HOLDS if direct.holds == via_induced_ok else Verdict.FAILS)
    return _report(a, direct_check, induced_check, agree)
