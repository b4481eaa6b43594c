"""Named fixture collections used by the tests, the acceptance suite and the CLI."""

from __future__ import annotations

import itertools

from .algebra import HomAlgebra
from .bimodule import BimoduleRep, direct_sum_bimodule, module_to_bimodule
from .constructions import (conjugation, conjugation_map, diagonal_algebra, direct_sum, family_cyclic, family_dim1,
                            family_dim2, cyclic_shift, fixture_example_4_4, fixture_example_4_4_rescaled,
                            fixture_example_4_4_variant, full_matrix_jordan, full_units, idempotent_line,
                            quadratic_extension, strictly_upper_jordan, transpose_map, twisted_pair, upper_units,
                            yau_twist)
from .exactla import QQ, Field, Matrix


def permutation_matrix(field: Field, perm) -> Matrix:
    """e_j -> e_perm[j]."""
    n = len(perm)
    return Matrix.from_columns(field, [tuple(1 if i == perm[j] else 0 for i in range(n)) for j in range(n)], n)


def m2_automorphisms(field: Field) -> list[tuple[str, Matrix]]:
    basis = full_units(2)
    out = [("id", Matrix.identity(field, 4)), ("transpose", transpose_map(field, 2))]
    gens = {"unipotent": [[1, 1], [0, 1]], "lower": [[1, 0], [1, 1]], "diag2": [[2, 0], [0, 1]],
            "swap": [[0, 1], [1, 0]], "mixed": [[1, 2], [3, 5]]}
    for name, g in gens.items():
        c = conjugation_map(field, Matrix.from_rows(field, g), basis, 2)
        out.append((f"conj_{name}", c))
    out.append(("transpose_conj_mixed", transpose_map(field, 2) @ out[-1][1]))
    return out


def upper_automorphisms(field: Field) -> list[tuple[str, Matrix]]:
    basis = upper_units(3)
    gens = {"diag123": [[1, 0, 0], [0, 2, 0], [0, 0, 3]], "diag1m11": [[1, 0, 0], [0, -1, 0], [0, 0, 1]],
            "diag211": [[2, 0, 0], [0, 1, 0], [0, 0, 1]], "unip12": [[1, 1, 0], [0, 1, 0], [0, 0, 1]],
            "unip23": [[1, 0, 0], [0, 1, 1], [0, 0, 1]], "unip_mixed": [[1, 2, 3], [0, 1, 4], [0, 0, 1]]}
    return [(f"conj_{k}", conjugation_map(field, Matrix.from_rows(field, g), basis, 3)) for k, g in gens.items()]


def jordan_twist_corpus(field: Field = QQ) -> list[tuple[str, HomAlgebra, Matrix]]:
    """(name, Jordan algebra, invertible automorphism) pairs."""
    out = []
    m2 = full_matrix_jordan(field)
    out += [(f"M2+/{n}", m2, a) for n, a in m2_automorphisms(field)]
    for k in (2, 3):
        d = diagonal_algebra(field, k)
        out += [(f"F^{k}/perm{p}", d, permutation_matrix(field, p)) for p in itertools.permutations(range(k))]
    u = strictly_upper_jordan(field)
    out += [("U3/id", u, Matrix.identity(field, 3))] + [(f"U3/{n}", u, a) for n, a in upper_automorphisms(field)]
    q = quadratic_extension(field, 2)
    out += [("Q(s)/id", q, Matrix.identity(field, 2)), ("Q(s)/conj", q, conjugation(field))]
    out.append(("line/id", idempotent_line(field), Matrix.identity(field, 1)))
    return out


def split_fixture(field: Field = QQ) -> HomAlgebra:
    """F^3 twisted by the projection onto span{e1, e2}: alpha^2 = alpha, products inside Im(alpha)."""
    return yau_twist(diagonal_algebra(field, 3), Matrix.diagonal(field, [1, 1, 0]))


def split_fixture_nilfree(field: Field = QQ) -> HomAlgebra:
    """Like split_fixture but with mu(e3, e3) = e3, so the kernel summand has a nonzero product."""
    return HomAlgebra.from_products(field, 3, {(0, 0): (1, 0, 0), (1, 1): (0, 1, 0), (2, 2): (0, 0, 1)},
                                    Matrix.diagonal(field, [1, 1, 0]))


def hom_corpus(field: Field = QQ) -> list[tuple[str, HomAlgebra]]:
    """Every Hom algebra fixture over the field: twists, families, worked examples and sums."""
    out = [("ex4_4", fixture_example_4_4(field)),
           ("ex4_4+ex4_4", direct_sum(fixture_example_4_4(field), fixture_example_4_4(field))),
           ("ex4_4_rescaled2", fixture_example_4_4_rescaled(field, 2)),
           ("split", split_fixture(field)), ("split_nilfree", split_fixture_nilfree(field))]
    if field.char != 2:
        out += [("twin_ext_id", twisted_pair(quadratic_extension(field, 2))),
                ("twin_ext_conj", fixture_example_4_4_variant(field))]
        out += [(f"twist:{n}", yau_twist(j, a)) for n, j, a in jordan_twist_corpus(field)]
    out += [(f"dim1(k={k})", family_dim1(k, field)) for k in range(-1, 4)]
    out += [(f"dim2({p},{q})", family_dim2(p, q, field)) for p in (-1, 0, 1, 2) for q in (0, 1)]
    for n in (3, 4):
        for name, al in (("id", Matrix.identity(field, n)), ("shift", cyclic_shift(field, n)),
                         ("zero", Matrix.zeros(field, n, n))):
            out.append((f"cyclic{n}/{name}", family_cyclic(n, al, field)))
    out.append(("zero2", HomAlgebra.zero(field, 2, Matrix.identity(field, 2)).with_alpha(Matrix.identity(field, 2))))
    return out


def small_field_simplicity_corpus(field: Field) -> list[tuple[str, HomAlgebra]]:
    """Algebras of dimension at most 3 over GF(2) or GF(3)."""
    f = field
    ex = fixture_example_4_4(f)
    line = family_dim1(1, f)
    out = [("ex4_4", ex), ("ex4_4+line", direct_sum(ex, line)), ("line+line", direct_sum(line, line)),
           ("ex4_4_rescaled2", fixture_example_4_4_rescaled(f, 2)), ("split", split_fixture(f)),
           ("split_nilfree", split_fixture_nilfree(f))]
    out += [(f"dim1(k={k})", family_dim1(k, f)) for k in range(f.p)]
    out += [(f"dim2({p},{q})", family_dim2(p, q, f)) for p in range(f.p) for q in range(f.p)]
    out += [(f"cyclic3/{n}", family_cyclic(3, a, f)) for n, a in
            (("id", Matrix.identity(f, 3)), ("shift", cyclic_shift(f, 3)), ("zero", Matrix.zeros(f, 3, 3)))]
    for k in (1, 2, 3):
        out.append((f"zero{k}/id", HomAlgebra.zero(f, k).with_alpha(Matrix.identity(f, k))))
    out.append(("zero2/nilpotent", HomAlgebra.zero(f, 2).with_alpha(Matrix.from_rows(f, [[0, 1], [0, 0]]))))
    for k in (2, 3):
        d = diagonal_algebra(f, k)
        out += [(f"F^{k}/perm{p}", yau_twist(d, permutation_matrix(f, p))) for p in itertools.permutations(range(k))]
    out.append(("F^2/proj", yau_twist(diagonal_algebra(f, 2), Matrix.diagonal(f, [1, 0]))))
    out.append(("F^3/proj", yau_twist(diagonal_algebra(f, 3), Matrix.diagonal(f, [1, 0, 1]))))
    if f.char != 2:
        out.append(("ext/id", quadratic_extension(f, 2)))
        out.append(("ext/conj", yau_twist(quadratic_extension(f, 2), conjugation(f))))
        out.append(("U3/id", strictly_upper_jordan(f)))
    return out


def ex5_3(field: Field) -> BimoduleRep:
    """One-dimensional W, alpha_W = id, both basis elements act as the identity."""
    one = Matrix.identity(field, 1)
    return BimoduleRep(fixture_example_4_4(field), one, (one, one))


def ex5_3_corrected(field: Field = QQ) -> BimoduleRep:
    """Same actions as ex5_3 with alpha_W = 2 id, which does satisfy both bimodule identities."""
    one = Matrix.identity(field, 1)
    return BimoduleRep(fixture_example_4_4(field), one.scale(field.coerce(2)), (one, one))


def rank_deficient_bimodule(field: Field = QQ) -> BimoduleRep:
    """ex5_3_corrected (+) a trivial line with alpha_W = 0: alpha_W has rank one."""
    z = Matrix.zeros(field, 1, 1)
    triv = BimoduleRep(fixture_example_4_4(field), z, (z, z))
    return direct_sum_bimodule(ex5_3_corrected(field), triv)


def equivariant_bimodules(field: Field = QQ) -> list[tuple[str, BimoduleRep]]:
    """Bimodules with invertible alpha_W satisfying alpha_W lam(a) = lam(alpha a) alpha_W."""
    from .bimodule import regular_bimodule, JordanModuleRep

    out = [(f"regular:{n}", regular_bimodule(yau_twist(j, a))) for n, j, a in jordan_twist_corpus(field)]
    out.append(("regular:ex4_4", regular_bimodule(fixture_example_4_4(field))))
    out.append(("ex5_3_corrected", ex5_3_corrected(field)))
    j = full_matrix_jordan(field)
    for name, a in m2_automorphisms(field)[:3]:
        mod = JordanModuleRep(j, tuple(j.left_operators), twist=a)
        out.append((f"module_twist:M2+/{name}", module_to_bimodule(mod, a, a)))
    return out
