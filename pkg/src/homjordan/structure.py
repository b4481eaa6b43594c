"""Ideals, derived series, radicals, decompositions and simplicity decisions."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field as dc_field
from typing import Iterable, Sequence

from .algebra import (DEFAULT_BUDGET, Check, HomAlgebra, Verdict, VerificationReport, check_hom_jordan,
                      check_multiplicative, left_mult_by, multiply)
from .errors import (BudgetExceeded, CertificationFailed, NotAutomorphism, NotMultiplicative, NotSemisimple,
                     RadicalNonzero, UnsupportedCharacteristic)
from .exactla import Matrix, Singular, Subspace, charpoly, count_subspaces, enumerate_subspaces, invert, kernel
from .exactla import nullspace_basis
from .exactla.factor import irreducible_factors
from .exactla.poly import evaluate_at_matrix

DEFAULT_TRIALS = 64


def subspace_product(a: HomAlgebra, u: Subspace, w: Subspace) -> Subspace:
    """span{mu(u_i, w_j)}."""
    if u.ambient_dim != a.dim or w.ambient_dim != a.dim:
        raise ValueError("subspace and algebra dimensions differ")
    return Subspace.span(a.field, a.dim, [multiply(a, x, y) for x in u.vectors() for y in w.vectors()])


def _full(a: HomAlgebra) -> Subspace:
    return Subspace.full(a.field, a.dim)


def is_jordan_ideal(a: HomAlgebra, w: Subspace) -> bool:
    """mu(W, V) within W (no condition on alpha)."""
    return all(multiply(a, x, a.basis_vector(j)) in w for x in w.vectors() for j in range(a.dim))


def is_hom_ideal(a: HomAlgebra, w: Subspace) -> bool:
    if w.ambient_dim != a.dim:
        raise ValueError("subspace and algebra dimensions differ")
    return all(a.alpha @ x in w for x in w.vectors()) and is_jordan_ideal(a, w)


def ideal_closure(a: HomAlgebra, gens: Iterable[Sequence], use_alpha: bool = True) -> Subspace:
    """Smallest Hom-ideal containing gens (smallest ideal when use_alpha is False)."""
    w = Subspace.span(a.field, a.dim, list(gens))
    frontier = w.vectors()
    while frontier:
        new = []
        for x in frontier:
            images = [multiply(a, x, a.basis_vector(j)) for j in range(a.dim)]
            if use_alpha:
                images.append(a.alpha @ x)
            for y in images:
                if y not in w:
                    w = w + Subspace.span(a.field, a.dim, [y])
                    new.append(y)
        frontier = new
    return w


def jordan_ideal_closure(a: HomAlgebra, gens: Iterable[Sequence]) -> Subspace:
    return ideal_closure(a, gens, use_alpha=False)


# --------------------------------------------------------------------------
# derived series


@dataclass(frozen=True)
class DerivedSeries:
    terms: tuple

    @property
    def solvable(self) -> bool:
        return self.terms[-1].is_zero()

    def term(self, k: int) -> Subspace:
        """V^(k), extended past the stored terms by stabilization."""
        return self.terms[min(k, len(self.terms) - 1)]

    def dims(self) -> list[int]:
        return [t.dim for t in self.terms]


def derived_series(a: HomAlgebra) -> DerivedSeries:
    terms = [_full(a)]
    while not terms[-1].is_zero():
        nxt = subspace_product(a, terms[-1], terms[-1])
        if nxt == terms[-1]:
            break
        terms.append(nxt)
    return DerivedSeries(tuple(terms))


def is_solvable(a: HomAlgebra) -> bool:
    return derived_series(a).solvable


def solvability_transfer_check(j: HomAlgebra, alpha: Matrix) -> VerificationReport:
    """Compare the derived series of a Jordan algebra and of its twist by an automorphism.

    Checks twisted V^(k) = alpha^k(V^(k)) term by term, and that both
    algebras get the same solvability verdict.
    """
    from .constructions import yau_twist
    from .errors import NotEndomorphism

    try:
        invert(alpha)
        twisted = yau_twist(j, alpha)
    except (Singular, NotEndomorphism) as e:
        raise NotAutomorphism(str(e)) from None
    plain, tw = derived_series(j), derived_series(twisted)
    checks = []
    power = Matrix.identity(j.field, j.dim)
    for k in range(max(len(plain.terms), len(tw.terms))):
        expected = plain.term(k).image(power)
        got = tw.term(k)
        if got == expected:
            checks.append(Check(f"term_{k}", Verdict.HOLDS))
        else:
            checks.append(Check(f"term_{k}", Verdict.FAILS, {"twisted": got.basis, "alpha_k_image": expected.basis}))
        power = alpha @ power
    agree = plain.solvable == tw.solvable
    checks.append(Check("solvability_agrees", Verdict.HOLDS if agree else Verdict.FAILS,
                        reason=f"jordan solvable={plain.solvable}, twist solvable={tw.solvable}"))
    return VerificationReport(j.field, tuple(checks))


# --------------------------------------------------------------------------
# trace form and radical


def _require_jordan_char0(j: HomAlgebra):
    if j.field.char != 0:
        raise UnsupportedCharacteristic("the trace-form radical is only used in characteristic 0")
    if not (j.jordan_mode or j.alpha.is_identity()):
        raise ValueError("expected a Jordan-mode algebra")


def trace_form_gram(j: HomAlgebra) -> Matrix:
    """G[i][k] = tr L_{e_i o e_k}."""
    _require_jordan_char0(j)
    n = j.dim
    return Matrix.from_rows(j.field, [[left_mult_by(j, j.mu[i][k]).trace() for k in range(n)] for i in range(n)])


def radical(j: HomAlgebra) -> Subspace:
    return kernel(trace_form_gram(j))


def _orthogonal_in(gram: Matrix, piece: Subspace, sub: Subspace) -> Subspace:
    """{v in piece : T(v, u) = 0 for all u in sub}."""
    f = piece.field
    p = piece.vectors()
    rows = []
    for u in sub.vectors():
        gu = gram @ u
        rows.append([f.reduce(sum(pk[i] * gu[i] for i in range(len(gu)))) for pk in p])
    if not rows:
        return piece
    coeffs = nullspace_basis(Matrix.from_rows(f, rows, len(p)))
    return Subspace.span(f, piece.ambient_dim, [piece.combine(c) for c in coeffs])


def _restricted_left(j: HomAlgebra, piece: Subspace, x: Sequence) -> Matrix:
    return Matrix.from_columns(j.field, [piece.coordinates(multiply(j, x, p)) for p in piece.vectors()], piece.dim)


def _random_vector(rng: random.Random, f, piece: Subspace) -> tuple:
    return piece.combine([f.coerce(rng.randint(-5, 5)) for _ in range(piece.dim)])


def _split_once(j: HomAlgebra, piece: Subspace, rng: random.Random, trial_limit: int) -> Subspace | None:
    """Look for a proper ideal inside ``piece`` using random elements of the multiplication algebra."""
    f = j.field
    d = piece.dim
    for _ in range(trial_limit):
        theta = _restricted_left(j, piece, _random_vector(rng, f, piece))
        u, v = _random_vector(rng, f, piece), _random_vector(rng, f, piece)
        theta = theta + _restricted_left(j, piece, u) @ _restricted_left(j, piece, v)
        for fac in irreducible_factors(f, charpoly(theta)):
            ker = kernel(evaluate_at_matrix(fac, theta))
            for c in ker.vectors():
                ideal = jordan_ideal_closure(j, [piece.combine(c)])
                if 0 < ideal.dim < d:
                    return ideal
    return None


@dataclass(frozen=True)
class DecompositionResult:
    ideals: tuple
    certified: bool
    orbit_partition: tuple | None = None
    transitive: bool | None = None

    def to_json(self) -> dict:
        return {"ideals": [i.to_strings() for i in self.ideals], "certified": self.certified,
                "orbit_partition": None if self.orbit_partition is None else [list(o) for o in self.orbit_partition],
                "transitive": self.transitive}


def _sort_key(s: Subspace):
    return (s.pivots, tuple(tuple(str(x) for x in r) for r in s.basis.rows))


def certify_decomposition(a: HomAlgebra, ideals: Sequence[Subspace], hom: bool = False) -> bool:
    n = a.dim
    if sum(i.dim for i in ideals) != n:
        return False
    if not Subspace.span(a.field, n, [v for i in ideals for v in i.vectors()]).is_full():
        return False
    check = is_hom_ideal if hom else is_jordan_ideal
    if not all(check(a, i) for i in ideals):
        return False
    for s, t in itertools.combinations(ideals, 2):
        if not subspace_product(a, s, t).is_zero():
            return False
    return True


def orbit_partition(alpha: Matrix, ideals: Sequence[Subspace]) -> tuple:
    """Cycles of the permutation alpha induces on a list of subspaces."""
    perm = []
    for s in ideals:
        img = s.image(alpha)
        try:
            perm.append(ideals.index(img))
        except ValueError:
            raise CertificationFailed("alpha does not permute the simple ideals") from None
    seen, orbits = set(), []
    for start in range(len(ideals)):
        if start in seen:
            continue
        orbit, k = [], start
        while k not in seen:
            seen.add(k)
            orbit.append(k)
            k = perm[k]
        orbits.append(tuple(orbit))
    return tuple(orbits)


def decompose_semisimple(j: HomAlgebra, seed: int = 0, trial_limit: int = DEFAULT_TRIALS,
                         alpha: Matrix | None = None) -> DecompositionResult:
    """Split a semisimple Jordan algebra over Q into simple ideals.

    Pieces are split by closing kernel vectors of f(theta), theta a random
    element of the multiplication algebra and f an irreducible factor of
    its characteristic polynomial; the complement comes from the trace
    form.  A piece is declared simple after ``trial_limit`` failed draws.
    The final list is certified exactly.  If ``alpha`` is given, its
    action on the ideals is recorded as an orbit partition.
    """
    _require_jordan_char0(j)
    rad = radical(j)
    if not rad.is_zero():
        raise RadicalNonzero(f"radical has dimension {rad.dim}")
    gram = trace_form_gram(j)
    rng = random.Random(seed)
    todo, leaves = [_full(j)], []
    while todo:
        piece = todo.pop(0)
        if piece.dim <= 1:
            leaves.append(piece)
            continue
        ideal = _split_once(j, piece, rng, trial_limit)
        if ideal is None:
            leaves.append(piece)
            continue
        todo += [ideal, _orthogonal_in(gram, piece, ideal)]
    ideals = tuple(sorted(leaves, key=_sort_key))
    if not certify_decomposition(j, ideals):
        raise CertificationFailed("decomposition failed certification")
    if alpha is None:
        return DecompositionResult(ideals, True)
    orbits = orbit_partition(alpha, list(ideals))
    return DecompositionResult(ideals, True, orbits, len(orbits) == 1)


# --------------------------------------------------------------------------
# simplicity


SIMPLE, NOT_SIMPLE, UNSUPPORTED = "simple", "not_simple", "unsupported"


@dataclass(frozen=True)
class SimplicityResult:
    verdict: str
    path: str
    reason: str
    witness: Subspace | None = None
    decomposition: DecompositionResult | None = dc_field(default=None, compare=False)

    @property
    def simple(self) -> bool:
        return self.verdict == SIMPLE

    def to_json(self) -> dict:
        out = {"verdict": self.verdict, "path": self.path, "reason": self.reason,
               "witness": None if self.witness is None else self.witness.to_strings()}
        if self.decomposition is not None:
            out["decomposition"] = self.decomposition.to_json()
        return out


def _exhaustive_simplicity(a: HomAlgebra) -> SimplicityResult:
    # definition-level: every nonzero vector must generate the whole algebra
    f, n = a.field, a.dim
    for x in itertools.product(range(f.p), repeat=n):
        nz = next((c for c in x if c), None)
        if nz != 1:
            continue
        w = ideal_closure(a, [x])
        if not w.is_full():
            return SimplicityResult(NOT_SIMPLE, "exhaustive", "proper Hom-ideal generated by a vector", w)
    return SimplicityResult(SIMPLE, "exhaustive", f"every nonzero vector of GF({f.p})^{n} generates V")


def is_simple(a: HomAlgebra, seed: int = 0, trial_limit: int = DEFAULT_TRIALS,
              budget: int = DEFAULT_BUDGET) -> SimplicityResult:
    f, n = a.field, a.dim
    if n == 0 or a.alpha.is_zero():
        return SimplicityResult(NOT_SIMPLE, "direct", "alpha is zero")
    square = subspace_product(a, _full(a), _full(a))
    if not square.is_full():
        return SimplicityResult(NOT_SIMPLE, "direct", "mu(V, V) != V", None if square.is_zero() else square)
    if n == 1:
        return SimplicityResult(SIMPLE, "direct", "one-dimensional with alpha != 0 and mu(V, V) = V")
    if f.char != 0:
        if f.p ** n > budget:
            return SimplicityResult(UNSUPPORTED, "exhaustive", f"{f.p}^{n} vectors exceed budget {budget}")
        return _exhaustive_simplicity(a)
    if not check_multiplicative(a).holds:
        raise NotMultiplicative("the rational simplicity path needs a multiplicative algebra")
    ker = kernel(a.alpha)
    if not ker.is_zero():
        return SimplicityResult(NOT_SIMPLE, "rational", "Ker(alpha) is a nonzero Hom-ideal", ker)
    if not check_hom_jordan(a).holds:
        return SimplicityResult(UNSUPPORTED, "rational", "trace-form path needs a Hom-Jordan algebra")
    from .constructions import induced_jordan

    j = induced_jordan(a, verify=False)
    rad = radical(j)
    if not rad.is_zero():
        witness = ideal_closure(a, rad.vectors())
        return SimplicityResult(NOT_SIMPLE, "rational", "induced algebra has nonzero radical", witness)
    dec = decompose_semisimple(j, seed, trial_limit, alpha=a.alpha)
    if not dec.transitive:
        first = dec.orbit_partition[0]
        witness = Subspace.span(f, n, [v for k in first for v in dec.ideals[k].vectors()])
        return SimplicityResult(NOT_SIMPLE, "rational", "alpha has more than one orbit on the simple ideals",
                                witness, dec)
    rng = random.Random(seed)
    for _ in range(trial_limit):
        w = ideal_closure(a, [_random_vector(rng, f, _full(a))])
        if not w.is_zero() and not w.is_full():
            raise CertificationFailed("transitive orbit but a random vector generated a proper Hom-ideal")
    return SimplicityResult(SIMPLE, "rational", "alpha permutes the simple ideals of the induced algebra transitively",
                            None, dec)


def is_semisimple(a: HomAlgebra, seed: int = 0, trial_limit: int = DEFAULT_TRIALS) -> DecompositionResult:
    """Decomposition into simple Hom-ideals (orbit sums), or NotSemisimple."""
    f, n = a.field, a.dim
    if f.char != 0:
        raise UnsupportedCharacteristic("semisimplicity is decided over Q only")
    if not check_multiplicative(a).holds:
        raise NotMultiplicative("is_semisimple needs a multiplicative algebra")
    ker = kernel(a.alpha)
    if not ker.is_zero():
        raise NotSemisimple("alpha is singular", ker)
    if not check_hom_jordan(a).holds:
        raise NotSemisimple("not a Hom-Jordan algebra")
    from .constructions import induced_jordan, restrict_algebra

    j = induced_jordan(a, verify=False)
    rad = radical(j)
    if not rad.is_zero():
        raise NotSemisimple("induced algebra has nonzero radical", rad)
    dec = decompose_semisimple(j, seed, trial_limit, alpha=a.alpha)
    sums = []
    for orbit in dec.orbit_partition:
        s = Subspace.span(f, n, [v for k in orbit for v in dec.ideals[k].vectors()])
        if not is_hom_ideal(a, s) or not is_simple(restrict_algebra(a, s), seed, trial_limit).simple:
            raise NotSemisimple("orbit sum failed verification", s)
        sums.append(s)
    sums = tuple(sorted(sums, key=_sort_key))
    if not certify_decomposition(a, sums, hom=True):
        raise CertificationFailed("Hom decomposition failed certification")
    return DecompositionResult(sums, True, dec.orbit_partition, len(sums) == 1)


# --------------------------------------------------------------------------
# brute-force oracle


def brute_force_hom_ideals(a: HomAlgebra, budget: int = DEFAULT_BUDGET) -> list[Subspace]:
    """Every Hom-ideal of an algebra over GF(p), by enumerating all subspaces."""
    f = a.field
    if f.char == 0:
        raise UnsupportedCharacteristic("brute force needs a finite field")
    total = count_subspaces(f.p, a.dim)
    if total > budget:
        raise BudgetExceeded(f"{total} subspaces exceed budget {budget}")
    return [w for w in enumerate_subspaces(f, a.dim) if is_hom_ideal(a, w)]


def simple_by_brute_force(a: HomAlgebra, budget: int = DEFAULT_BUDGET) -> bool:
    """The definition read literally: alpha != 0, only trivial Hom-ideals, mu(V, V) = V."""
    if a.dim == 0 or a.alpha.is_zero():
        return False
    if not subspace_product(a, _full(a), _full(a)).is_full():
        return False
    return len(brute_force_hom_ideals(a, budget)) == 2
