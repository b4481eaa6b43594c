"""Classification data (X, n, A_1) of simple multiplicative algebras, and isomorphism lifting.

A simple multiplicative Hom-Jordan algebra with invertible alpha has an
induced Jordan algebra V_1 (+) alpha(V_1) (+) ... (+) alpha^(n-1)(V_1) for
a simple ideal V_1.  Two such algebras are isomorphic exactly when some
isomorphism of the ideals intertwines alpha^n and beta^n; any such ideal
map extends uniquely along the orbit bases.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .algebra import DEFAULT_BUDGET, HomAlgebra, check_homomorphism, check_jordan, check_multiplicative, twist_tensor
from .constructions import induced_jordan, restrict_algebra
from .errors import (BudgetExceeded, CertificationFailed, IntertwiningFailed, NotIdealIso, NotMultiplicative,
                     NotSimple, RadicalNonzero)
from .exactla import Matrix, Singular, Subspace, SimilarityInvariant, invert, similarity_invariant
from .structure import DEFAULT_TRIALS, brute_force_hom_ideals, decompose_semisimple, is_simple


@dataclass(frozen=True)
class ClassificationSignature:
    ideal: Subspace              # V_1 inside V
    ideal_algebra: HomAlgebra    # induced product restricted to V_1, in the RREF basis of V_1
    n: int
    a1: Matrix                   # alpha^n on V_1
    a1_invariants: SimilarityInvariant
    total_dim: int

    @property
    def ideal_dim(self) -> int:
        return self.ideal.dim

    def to_json(self) -> dict:
        ja = self.ideal_algebra
        return {"m": self.ideal_dim, "n": self.n, "total_dim": self.total_dim,
                "ideal_basis": self.ideal.to_strings(),
                "ideal_tensor": [[[ja.field.format(c) for c in v] for v in row] for row in ja.mu],
                "a1": self.a1.to_strings(), "a1_invariants": self.a1_invariants.to_json()}


def _orbit_length(alpha: Matrix, v1: Subspace, limit: int) -> int:
    img, k = v1.image(alpha), 1
    while img != v1:
        if k > limit:
            raise CertificationFailed("alpha^k never returns the ideal to itself")
        img, k = img.image(alpha), k + 1
    return k


def _minimal_ideals_smallfield(j: HomAlgebra) -> list[Subspace]:
    ideals = [w for w in brute_force_hom_ideals(j) if not w.is_zero()]
    return [w for w in ideals if not any(u < w for u in ideals)]


def signature_from_ideal(a: HomAlgebra, j: HomAlgebra, v1: Subspace) -> ClassificationSignature:
    """Package (V_1, n, alpha^n|V_1) after checking that the alpha-orbit of V_1 fills V."""
    f, dim = a.field, a.dim
    n = _orbit_length(a.alpha, v1, dim)
    orbit = [v1]
    for _ in range(n - 1):
        orbit.append(orbit[-1].image(a.alpha))
    if sum(o.dim for o in orbit) != dim or not Subspace.span(f, dim, [v for o in orbit for v in o.vectors()]).is_full():
        raise CertificationFailed("the alpha-orbit of the simple ideal does not decompose V")
    an = a.alpha ** n
    a1 = Matrix.from_columns(f, [v1.coordinates(an @ v) for v in v1.vectors()], v1.dim)
    return ClassificationSignature(v1, restrict_algebra(j, v1), n, a1, similarity_invariant(a1), dim)


def classification_signature(a: HomAlgebra, seed: int = 0, trial_limit: int = DEFAULT_TRIALS,
                             formal: bool = False) -> ClassificationSignature:
    """(V_1, n, alpha^n|V_1) for a simple multiplicative algebra.

    With ``formal=True`` a non-multiplicative algebra is accepted as long as
    alpha is invertible, alpha^-1 mu is a semisimple Jordan product, and
    alpha permutes its simple ideals transitively.  The data is then still an
    isomorphism invariant (an isomorphism intertwines both alpha and
    alpha^-1 mu), but it no longer classifies.
    """
    if not check_multiplicative(a).holds:
        if formal:
            return _formal_signature(a, seed, trial_limit)
        raise NotMultiplicative("signatures are defined for multiplicative algebras")
    res = is_simple(a, seed, trial_limit)
    if not res.simple:
        raise NotSimple(res.reason)
    try:
        j = induced_jordan(a, verify=False)
    except Singular:
        raise NotSimple("alpha is singular") from None
    f = a.field
    if a.dim == 1:
        v1 = Subspace.full(f, 1)
    elif f.char == 0:
        dec = res.decomposition
        v1 = dec.ideals[dec.orbit_partition[0][0]]
    else:
        minimal = _minimal_ideals_smallfield(j)
        v1 = minimal[0]
    return signature_from_ideal(a, j, v1)


def _formal_induced(a: HomAlgebra, inv: Matrix) -> HomAlgebra:
    f = a.field
    return HomAlgebra(f, twist_tensor(f, a.mu, inv), Matrix.identity(f, a.dim), jordan_mode=True)


def _formal_signature(a: HomAlgebra, seed: int, trial_limit: int) -> ClassificationSignature:
    f = a.field
    try:
        inv = invert(a.alpha)
    except Singular:
        raise NotSimple("alpha is singular") from None
    j = _formal_induced(a, inv)
    if a.dim == 1:
        return signature_from_ideal(a, j, Subspace.full(f, 1))
    if f.char == 0:
        if not check_jordan(j).holds:
            raise NotSimple("alpha^-1 mu is not a Jordan product")
        try:
            dec = decompose_semisimple(j, seed, trial_limit, alpha=a.alpha)
        except (RadicalNonzero, CertificationFailed) as e:
            raise NotSimple(str(e)) from None
        if not dec.transitive:
            raise NotSimple("alpha does not permute the simple ideals transitively")
        v1 = dec.ideals[dec.orbit_partition[0][0]]
    else:
        v1 = _minimal_ideals_smallfield(j)[0]
    return signature_from_ideal(a, j, v1)


@dataclass(frozen=True)
class Comparison:
    distinct: bool
    reason: str

    def to_json(self) -> dict:
        return {"result": "distinct" if self.distinct else "possibly_isomorphic", "reason": self.reason}


def compare_signatures(s: ClassificationSignature, t: ClassificationSignature) -> Comparison:
    """Necessary conditions only: dimensions, orbit length, similarity class of A_1."""
    if s.ideal_algebra.field != t.ideal_algebra.field:
        return Comparison(True, "field")
    if s.total_dim != t.total_dim:
        return Comparison(True, "total_dim")
    if s.ideal_dim != t.ideal_dim:
        return Comparison(True, "ideal_dim")
    if s.n != t.n:
        return Comparison(True, "orbit_length")
    if s.a1_invariants != t.a1_invariants:
        return Comparison(True, "similarity")
    return Comparison(False, "dimensions, orbit length and similarity class of A_1 agree")


def _orbit_basis(alpha: Matrix, vectors: list[tuple], n: int) -> list[tuple]:
    out, cur = [], vectors
    for _ in range(n):
        out += cur
        cur = [alpha @ v for v in cur]
    return out


def lift_ideal_isomorphism(m1: Matrix, a: HomAlgebra, b: HomAlgebra, sa: ClassificationSignature | None = None,
                           sb: ClassificationSignature | None = None, seed: int = 0) -> Matrix:
    """Extend m1 : V_1 -> W_1 to phi(alpha^i x) = beta^i(m1 x) and certify phi."""
    sa = sa or classification_signature(a, seed)
    sb = sb or classification_signature(b, seed)
    if sa.n != sb.n or sa.ideal_dim != sb.ideal_dim or sa.total_dim != sb.total_dim:
        raise NotIdealIso("signatures have different shapes")
    if m1.shape != (sb.ideal_dim, sa.ideal_dim):
        raise NotIdealIso(f"m1 has shape {m1.shape}")
    if not check_homomorphism(m1, sa.ideal_algebra, sb.ideal_algebra, isomorphism=True).holds:
        raise NotIdealIso("m1 is not an isomorphism of the ideal Jordan algebras")
    if m1 @ sa.a1 != sb.a1 @ m1:
        raise IntertwiningFailed("m1 A_1 != B_1 m1")
    src = _orbit_basis(a.alpha, sa.ideal.vectors(), sa.n)
    images = [sb.ideal.combine(m1.column(k)) for k in range(sa.ideal_dim)]
    dst = _orbit_basis(b.alpha, images, sb.n)
    f = a.field
    phi = Matrix.from_columns(f, dst, b.dim) @ invert(Matrix.from_columns(f, src, a.dim))
    rep = check_homomorphism(phi, a, b, isomorphism=True)
    if not rep.holds:
        raise CertificationFailed(f"lifted map is not an isomorphism: {rep.to_json()}")
    return phi


@dataclass(frozen=True)
class SearchResult:
    phi: Matrix | None
    reason: str
    examined: int

    @property
    def found(self) -> bool:
        return self.phi is not None


def iso_search_smallfield(a: HomAlgebra, b: HomAlgebra, budget: int = DEFAULT_BUDGET, seed: int = 0) -> SearchResult:
    """Exhaustive isomorphism search over GF(p) through ideal maps m1.

    Any isomorphism can be composed with a power of beta so that it sends
    V_1 onto W_1; its restriction is then one of the candidates and the
    lift reproduces it, so an empty search is a proof of non-isomorphism.
    """
    f = a.field
    if f.char == 0 or b.field != f:
        raise ValueError("iso_search_smallfield needs two algebras over the same GF(p)")
    if a.dim != b.dim:
        return SearchResult(None, "dimensions differ", 0)
    ma, mb = check_multiplicative(a).holds, check_multiplicative(b).holds
    if ma != mb:
        res = formal_search(a, b, budget, seed)
        if res.found:
            raise CertificationFailed("isomorphism between a multiplicative and a non-multiplicative algebra")
        return SearchResult(None, "exactly one of the algebras is multiplicative; " + res.reason, res.examined)
    sa, sb = classification_signature(a, seed), classification_signature(b, seed)
    cmp = compare_signatures(sa, sb)
    if cmp.reason in ("total_dim", "ideal_dim", "orbit_length"):
        return SearchResult(None, f"signatures differ in {cmp.reason}", 0)
    m = sa.ideal_dim
    if f.p ** (m * m) > budget:
        raise BudgetExceeded(f"{f.p}^{m * m} candidate ideal maps exceed budget {budget}")
    examined = 0
    for entries in itertools.product(range(f.p), repeat=m * m):
        examined += 1
        m1 = Matrix(f, tuple(tuple(entries[r * m:(r + 1) * m]) for r in range(m)), m)
        if m1 @ sa.a1 != sb.a1 @ m1:
            continue
        if not check_homomorphism(m1, sa.ideal_algebra, sb.ideal_algebra, isomorphism=True).holds:
            continue
        return SearchResult(lift_ideal_isomorphism(m1, a, b, sa, sb), "certified isomorphism found", examined)
    return SearchResult(None, "no ideal map intertwines alpha^n and beta^n", examined)


def formal_search(a: HomAlgebra, b: HomAlgebra, budget: int = DEFAULT_BUDGET, seed: int = 0) -> SearchResult:
    """Exhaustive search that does not assume multiplicativity, over GF(p).

    An isomorphism phi also intertwines the products alpha^-1 mu, so it
    maps V_1 onto some minimal ideal U of beta^-1 mu_B of the same
    dimension and is fixed by phi|V_1 through phi(alpha^i x) = beta^i phi(x).
    Every such U and every linear map V_1 -> U is tried.
    """
    f = a.field
    if a.dim != b.dim:
        return SearchResult(None, "dimensions differ", 0)
    try:
        sa = classification_signature(a, seed, formal=True)
        jb = _formal_induced(b, invert(b.alpha))
    except (NotSimple, Singular) as e:
        return SearchResult(None, f"no formal signature: {e}", 0)
    m = sa.ideal_dim
    targets = [u for u in _minimal_ideals_smallfield(jb) if u.dim == m]
    if len(targets) * f.p ** (m * m) > budget:
        raise BudgetExceeded(f"{len(targets)} x {f.p}^{m * m} candidate ideal maps exceed budget {budget}")
    src = Matrix.from_columns(f, _orbit_basis(a.alpha, sa.ideal.vectors(), sa.n), a.dim)
    src_inv = invert(src)
    examined = 0
    for u in targets:
        for entries in itertools.product(range(f.p), repeat=m * m):
            examined += 1
            images = [u.combine(entries[k::m]) for k in range(m)]
            phi = Matrix.from_columns(f, _orbit_basis(b.alpha, images, sa.n), b.dim) @ src_inv
            if check_homomorphism(phi, a, b, isomorphism=True).holds:
                return SearchResult(phi, "certified isomorphism found", examined)
    return SearchResult(None, "no candidate map is an isomorphism", examined)
