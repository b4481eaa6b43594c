"""Bimodules of Hom-Jordan algebras and modules of Jordan algebras.

Only the left action is stored: ``actions[a]`` is the matrix of
w -> e_a . w.  The right action is w . a := a . w, so the swap axiom
holds by construction.  In the identities below every product is a left
multiplication by the action matrix of the algebra element, which is why
(w . a) . b reads lam(b) lam(a) w.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterable, Sequence

from .algebra import Check, HomAlgebra, Verdict, VerificationReport, check_multiplicative, multiply
from .constructions import induced_jordan, yau_twist
from .errors import CertificationFailed, EquivarianceFailed, NotMultiplicative, PreconditionFailed
from .exactla import Matrix, Singular, Subspace, charpoly, column_space, invert, kernel, solve
from .exactla.factor import irreducible_factors
from .exactla.poly import evaluate_at_matrix
from .structure import DEFAULT_TRIALS, is_simple

DEFAULT_BUDGET = 2 ** 16


def _check_shapes(algebra: HomAlgebra, alpha_w: Matrix, actions: Sequence[Matrix]):
    m = alpha_w.nrows
    if alpha_w.shape != (m, m):
        raise ValueError("alpha_w must be square")
    if len(actions) != algebra.dim:
        raise ValueError(f"expected {algebra.dim} action matrices, got {len(actions)}")
    for lam in actions:
        if lam.shape != (m, m) or lam.field != algebra.field:
            raise ValueError("action matrices must be m x m over the algebra's field")


def _action_of(field, actions: Sequence[Matrix], m: int, x: Sequence) -> Matrix:
    acc = Matrix.zeros(field, m, m)
    for xi, lam in zip(x, actions):
        if xi:
            acc = acc + lam.scale(xi)
    return acc


@dataclass(frozen=True)
class BimoduleRep:
    algebra: HomAlgebra
    alpha_w: Matrix
    actions: tuple

    def __post_init__(self):
        _check_shapes(self.algebra, self.alpha_w, self.actions)

    @property
    def dim(self) -> int:
        return self.alpha_w.nrows

    @property
    def field(self):
        return self.algebra.field

    def act(self, x: Sequence) -> Matrix:
        return _action_of(self.field, self.actions, self.dim, x)


@dataclass(frozen=True)
class JordanModuleRep:
    algebra: HomAlgebra
    actions: tuple
    alpha_w: Matrix | None = None
    twist: Matrix | None = None     # the alpha of the Hom algebra this module was transported from

    def __post_init__(self):
        if self.alpha_w is not None:
            _check_shapes(self.algebra, self.alpha_w, self.actions)
        elif len(self.actions) != self.algebra.dim:
            raise ValueError("one action matrix per algebra basis element is required")

    @property
    def dim(self) -> int:
        return self.actions[0].nrows if self.actions else (self.alpha_w.nrows if self.alpha_w else 0)

    @property
    def field(self):
        return self.algebra.field

    def act(self, x: Sequence) -> Matrix:
        return _action_of(self.field, self.actions, self.dim, x)


def _witness_check(name: str, lhs: Matrix, rhs: Matrix, abc: tuple, field) -> Check | None:
    if lhs == rhs:
        return None
    col = next(c for c in range(lhs.ncols) if lhs.column(c) != rhs.column(c))
    a, b, c = abc
    return Check(name, Verdict.FAILS, {"a": a, "b": b, "c": c, "w": tuple(field.one if k == col else field.zero
                                                                        for k in range(lhs.ncols)),
                                       "lhs": lhs.column(col), "rhs": rhs.column(col)})


def check_bimodule(r: BimoduleRep) -> VerificationReport:
    """The two twisted compatibility identities, on all basis triples (a, b, c) and all w."""
    A = r.algebra
    f, n = r.field, A.dim
    al, aw = A.alpha, r.alpha_w
    al2 = al @ al
    lam = r.act
    e = [A.basis_vector(i) for i in range(n)]
    # every action matrix the identities need, computed once
    l_mu = [[lam(A.mu[y][z]) for z in range(n)] for y in range(n)]
    l_amu_aw = [[lam(al @ A.mu[y][z]) @ aw for z in range(n)] for y in range(n)]
    l_al = [lam(al.column(i)) for i in range(n)]
    l_al2 = [lam(al2.column(i)) for i in range(n)]
    aw2 = aw @ aw
    first = second = None
    for a, b, c in itertools.product(range(n), repeat=3):
        if first is not None and second is not None:
            break
        cyc = [(a, b, c), (b, c, a), (c, a, b)]
        lhs = None
        for x, y, z in cyc:
            t = l_amu_aw[y][z] @ r.actions[x]
            lhs = t if lhs is None else lhs + t
        abc = (e[a], e[b], e[c])
        if first is None:
            rhs = None
            for x, y, z in cyc:
                t = l_al2[x] @ l_mu[y][z] @ aw
                rhs = t if rhs is None else rhs + t
            first = _witness_check("bimodule_identity_1", lhs, rhs, abc, f)
        if second is None:
            rhs = l_al2[c] @ l_al[b] @ r.actions[a] + l_al2[a] @ l_al[b] @ r.actions[c] \
                + lam(multiply(A, A.mu[a][c], al.column(b))) @ aw2
            second = _witness_check("bimodule_identity_2", lhs, rhs, abc, f)
    return VerificationReport(f, (first or Check("bimodule_identity_1", Verdict.HOLDS),
                                  second or Check("bimodule_identity_2", Verdict.HOLDS)))


def regular_bimodule(a: HomAlgebra) -> BimoduleRep:
    return BimoduleRep(a, a.alpha, tuple(a.left_operators))


def check_equivariance(r: BimoduleRep) -> VerificationReport:
    """alpha_w lam(a) = lam(alpha a) alpha_w for every basis element a."""
    A = r.algebra
    for i in range(A.dim):
        lhs = r.alpha_w @ r.actions[i]
        rhs = r.act(A.alpha.column(i)) @ r.alpha_w
        if lhs != rhs:
            col = next(c for c in range(r.dim) if lhs.column(c) != rhs.column(c))
            return VerificationReport(r.field, (Check("equivariance", Verdict.FAILS,
                                                      {"a": A.basis_vector(i), "w": _unit(r.field, r.dim, col),
                                                       "lhs": lhs.column(col), "rhs": rhs.column(col)}),))
    return VerificationReport(r.field, (Check("equivariance", Verdict.HOLDS),))


def _unit(field, m, k) -> tuple:
    return tuple(field.one if i == k else field.zero for i in range(m))


def check_jordan_module(r: JordanModuleRep) -> VerificationReport:
    """Module identities for a Jordan algebra, with a o c o b read as (a o c) o b."""
    J = r.algebra
    f, n = r.field, J.dim
    lam = r.act
    e = [J.basis_vector(i) for i in range(n)]
    l_mu = [[lam(J.mu[y][z]) for z in range(n)] for y in range(n)]
    first = second = None
    for a, b, c in itertools.product(range(n), repeat=3):
        if first is not None and second is not None:
            break
        cyc = [(a, b, c), (b, c, a), (c, a, b)]
        lhs = rhs1 = None
        for x, y, z in cyc:
            L = l_mu[y][z]
            t, u = L @ r.actions[x], r.actions[x] @ L
            lhs = t if lhs is None else lhs + t
            rhs1 = u if rhs1 is None else rhs1 + u
        abc = (e[a], e[b], e[c])
        if first is None:
            first = _witness_check("module_identity_1", lhs, rhs1, abc, f)
        if second is None:
            la, lb, lc = r.actions[a], r.actions[b], r.actions[c]
            left = lc @ lb @ la + la @ lb @ lc + lam(multiply(J, J.mu[a][c], e[b]))
            second = _witness_check("module_identity_2", left, lhs, abc, f)
    return VerificationReport(f, (first or Check("module_identity_1", Verdict.HOLDS),
                                  second or Check("module_identity_2", Verdict.HOLDS)))


# --------------------------------------------------------------------------
# transport between bimodules and modules of the induced algebra


def bimodule_to_module(r: BimoduleRep) -> JordanModuleRep:
    """lam'(a) = alpha_w^-1 lam(a) over the induced Jordan algebra."""
    inv = invert(r.alpha_w)
    if not check_equivariance(r).holds:
        raise EquivarianceFailed("alpha_w lam(a) != lam(alpha a) alpha_w")
    if not check_multiplicative(r.algebra).holds:
        raise NotMultiplicative("transport needs a multiplicative algebra")
    j = induced_jordan(r.algebra, verify=False)
    out = JordanModuleRep(j, tuple(inv @ lam for lam in r.actions), r.alpha_w, r.algebra.alpha)
    if check_bimodule(r).holds and not check_jordan_module(out).holds:
        raise CertificationFailed("transported module fails the module identities")
    return out


def module_to_bimodule(r: JordanModuleRep, alpha_w: Matrix, alpha: Matrix | None = None) -> BimoduleRep:
    """lam(a) = alpha_w lam'(a) over the twist of r.algebra by alpha."""
    alpha = alpha if alpha is not None else (r.twist if r.twist is not None
                                             else Matrix.identity(r.field, r.algebra.dim))
    for i in range(r.algebra.dim):
        if alpha_w @ r.actions[i] != r.act(alpha.column(i)) @ alpha_w:
            raise EquivarianceFailed(f"alpha_w lam'(e_{i}) != lam'(alpha e_{i}) alpha_w")
    hom = yau_twist(r.algebra, alpha, verify=False)
    out = BimoduleRep(hom, alpha_w, tuple(alpha_w @ lam for lam in r.actions))
    if check_jordan_module(r).holds and not check_bimodule(out).holds:
        raise CertificationFailed("transported bimodule fails the bimodule identities")
    return out


# --------------------------------------------------------------------------
# submodules and irreducibility


def _closure(field, m: int, ops: Sequence[Matrix], gens: Iterable[Sequence]) -> Subspace:
    w = Subspace.span(field, m, list(gens))
    frontier = w.vectors()
    while frontier:
        new = []
        for x in frontier:
            for op in ops:
                y = op @ x
                if y not in w:
                    w = w + Subspace.span(field, m, [y])
                    new.append(y)
        frontier = new
    return w


def _ops(r) -> list[Matrix]:
    ops = list(r.actions)
    if isinstance(r, BimoduleRep):
        ops.append(r.alpha_w)
    return ops


def submodule_closure(r: BimoduleRep, gens: Iterable[Sequence]) -> Subspace:
    return _closure(r.field, r.dim, _ops(r), gens)


def is_submodule(r: BimoduleRep, u: Subspace) -> bool:
    return all(op @ v in u for op in _ops(r) for v in u.vectors())


IRREDUCIBLE, REDUCIBLE, PROBABLY_IRREDUCIBLE = "irreducible", "reducible", "probably_irreducible"


@dataclass(frozen=True)
class IrreducibilityResult:
    verdict: str
    method: str
    witness: Subspace | None = None

    @property
    def irreducible(self) -> bool:
        return self.verdict == IRREDUCIBLE

    @property
    def reducible(self) -> bool:
        return self.verdict == REDUCIBLE

    def to_json(self) -> dict:
        return {"verdict": self.verdict, "method": self.method,
                "witness": None if self.witness is None else self.witness.to_strings()}


def _exhaustive_irreducible(field, m: int, ops) -> IrreducibilityResult:
    for x in itertools.product(range(field.p), repeat=m):
        if next((c for c in x if c), None) != 1:
            continue
        w = _closure(field, m, ops, [x])
        if not w.is_full():
            return IrreducibilityResult(REDUCIBLE, "exhaustive", w)
    return IrreducibilityResult(IRREDUCIBLE, "exhaustive")


def _random_irreducible(field, m: int, ops, seed: int, trial_limit: int) -> IrreducibilityResult:
    rng = random.Random(seed)

    def coeff():
        return field.coerce(rng.randint(-5, 5))

    for _ in range(trial_limit):
        theta = Matrix.zeros(field, m, m)
        for op in ops:
            theta = theta + op.scale(coeff())
        if len(ops) > 1:
            theta = theta + ops[rng.randrange(len(ops))] @ ops[rng.randrange(len(ops))]
        candidates = [tuple(coeff() for _ in range(m))]
        for fac in irreducible_factors(field, charpoly(theta)):
            candidates += kernel(evaluate_at_matrix(fac, theta)).vectors()
        for v in candidates:
            if any(v):
                w = _closure(field, m, ops, [v])
                if not w.is_full():
                    return IrreducibilityResult(REDUCIBLE, "random", w)
    return IrreducibilityResult(PROBABLY_IRREDUCIBLE, "random")


def _irreducible(field, m: int, ops, seed: int, trial_limit: int, budget: int, method: str) -> IrreducibilityResult:
    if m < 1:
        raise PreconditionFailed("irreducibility needs a nonzero module")
    if m == 1:
        return IrreducibilityResult(IRREDUCIBLE, "dimension")
    if method == "auto":
        method = "exhaustive" if field.char != 0 and field.p ** m <= budget else "random"
    if method == "exhaustive":
        if field.char == 0:
            raise ValueError("exhaustive irreducibility needs a finite field")
        return _exhaustive_irreducible(field, m, ops)
    return _random_irreducible(field, m, ops, seed, trial_limit)


def is_irreducible(r, seed: int = 0, trial_limit: int = DEFAULT_TRIALS, budget: int = DEFAULT_BUDGET,
                   method: str = "auto") -> IrreducibilityResult:
    """Exhaustive over small GF(p); otherwise a one-sided randomized search.

    Works for both bimodules (closure under actions and alpha_w) and
    Jordan modules (actions only).
    """
    return _irreducible(r.field, r.dim, _ops(r), seed, trial_limit, budget, method)


# --------------------------------------------------------------------------
# kernel and image of alpha_w


@dataclass(frozen=True)
class KernelImageReport:
    kernel: Subspace
    image: Subspace
    induced_map: Matrix
    report: VerificationReport
    plain_intertwining: Check

    def to_json(self) -> dict:
        return {"kernel": self.kernel.to_strings(), "image": self.image.to_strings(),
                "induced_map": self.induced_map.to_strings(), "report": self.report.to_json(),
                "plain_intertwining": self.plain_intertwining.to_json(self.report.field)}


def kernel_image_analysis(r: BimoduleRep) -> KernelImageReport:
    """Ker and Im of alpha_w as submodules, and the induced map W/Ker -> Im.

    The induced map sends a . w to alpha(a) . alpha_w(w), so it intertwines
    the actions up to alpha; that twisted form is what is certified.  The
    untwisted intertwining is reported separately for information.
    """
    if not check_equivariance(r).holds:
        raise EquivarianceFailed("alpha_w lam(a) != lam(alpha a) alpha_w")
    f, m, A = r.field, r.dim, r.algebra
    ker, img = kernel(r.alpha_w), column_space(r.alpha_w)
    checks = [Check("kernel_is_submodule", Verdict.HOLDS if is_submodule(r, ker) else Verdict.FAILS),
              Check("image_is_submodule", Verdict.HOLDS if is_submodule(r, img) else Verdict.FAILS)]
    reps = [_unit(f, m, c) for c in ker.complement_pivots()]
    d = len(reps)
    system = Matrix.from_columns(f, reps + ker.vectors(), m) if m else None

    def proj(v):
        return solve(system, v)[:d]

    def on_quotient(op: Matrix) -> Matrix:
        return Matrix.from_columns(f, [proj(op @ rep) for rep in reps], d)

    def on_image(op: Matrix) -> Matrix:
        return Matrix.from_columns(f, [img.coordinates(op @ v) for v in img.vectors()], img.dim)

    bar = Matrix.from_columns(f, [img.coordinates(r.alpha_w @ rep) for rep in reps], img.dim)
    try:
        invert(bar)
        checks.append(Check("induced_map_bijective", Verdict.HOLDS))
    except Singular as e:
        checks.append(Check("induced_map_bijective", Verdict.FAILS, reason=str(e)))
    twisted = plain = Verdict.HOLDS
    tw_witness = pl_witness = None
    for i in range(A.dim):
        q = on_quotient(r.actions[i])
        if twisted is Verdict.HOLDS and bar @ q != on_image(r.act(A.alpha.column(i))) @ bar:
            twisted, tw_witness = Verdict.FAILS, {"a": A.basis_vector(i)}
        if plain is Verdict.HOLDS and bar @ q != on_image(r.actions[i]) @ bar:
            plain, pl_witness = Verdict.FAILS, {"a": A.basis_vector(i)}
    checks.append(Check("twisted_intertwining", twisted, tw_witness))
    aw_ok = bar @ on_quotient(r.alpha_w) == on_image(r.alpha_w) @ bar
    checks.append(Check("commutes_with_alpha_w", Verdict.HOLDS if aw_ok else Verdict.FAILS))
    plain_check = Check("plain_intertwining", plain, pl_witness,
                        "informational: the induced map is alpha-semilinear, not linear over the action")
    return KernelImageReport(ker, img, bar, VerificationReport(f, tuple(checks)), plain_check)


def irreducibility_transfer_check(r: BimoduleRep, seed: int = 0, trial_limit: int = DEFAULT_TRIALS,
                                  budget: int = DEFAULT_BUDGET) -> VerificationReport:
    """Test two claims for bimodules of a simple multiplicative algebra.

    irreducible_implies_invertible: an irreducible equivariant bimodule has
    invertible alpha_w.  module_to_bimodule_irreducibility: if alpha_w is
    invertible and the transported module is irreducible, so is r.
    """
    A = r.algebra
    if not check_multiplicative(A).holds:
        raise NotMultiplicative("the algebra must be multiplicative")
    if not is_simple(A, seed, trial_limit).simple:
        raise PreconditionFailed("the algebra must be simple")
    if not check_equivariance(r).holds:
        raise EquivarianceFailed("alpha_w lam(a) != lam(alpha a) alpha_w")
    f = r.field
    bi = is_irreducible(r, seed, trial_limit, budget)
    try:
        invert(r.alpha_w)
        invertible = True
    except Singular:
        invertible = False
    checks = [Check("bimodule_irreducibility", Verdict.HOLDS, reason=bi.verdict)]
    if bi.verdict == IRREDUCIBLE and not invertible:
        checks.append(Check("irreducible_implies_invertible", Verdict.FAILS,
                            {"alpha_w": r.alpha_w}, "irreducible bimodule with singular alpha_w"))
    elif bi.verdict == PROBABLY_IRREDUCIBLE and not invertible:
        checks.append(Check("irreducible_implies_invertible", Verdict.UNDECIDABLE,
                            reason="irreducibility only established probabilistically"))
    else:
        checks.append(Check("irreducible_implies_invertible", Verdict.HOLDS,
                            reason="alpha_w invertible" if invertible else "bimodule is reducible"))
    if invertible:
        mod = bimodule_to_module(r)
        mi = is_irreducible(mod, seed, trial_limit, budget)
        if mi.verdict == IRREDUCIBLE and bi.verdict == REDUCIBLE:
            checks.append(Check("module_to_bimodule_irreducibility", Verdict.FAILS, {"submodule": bi.witness.basis}))
        else:
            checks.append(Check("module_to_bimodule_irreducibility", Verdict.HOLDS,
                                reason=f"module {mi.verdict}, bimodule {bi.verdict}"))
    else:
        checks.append(Check("module_to_bimodule_irreducibility", Verdict.HOLDS,
                            reason="vacuous: alpha_w is singular"))
    return VerificationReport(f, tuple(checks))


def direct_sum_bimodule(r: BimoduleRep, s: BimoduleRep) -> BimoduleRep:
    if r.algebra != s.algebra:
        raise ValueError("bimodules over different algebras")
    f = r.field
    return BimoduleRep(r.algebra, Matrix.block_diagonal(f, [r.alpha_w, s.alpha_w]),
                       tuple(Matrix.block_diagonal(f, [x, y]) for x, y in zip(r.actions, s.actions)))
