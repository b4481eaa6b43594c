import pytest

from homjordan.algebra import Verdict
from homjordan.bimodule import (BimoduleRep, JordanModuleRep, bimodule_to_module, check_bimodule, check_equivariance,
                                check_jordan_module, direct_sum_bimodule, irreducibility_transfer_check,
                                is_irreducible, is_submodule, kernel_image_analysis, module_to_bimodule,
                                regular_bimodule, submodule_closure)
from homjordan.constructions import (diagonal_algebra, family_dim1, fixture_example_4_4, full_matrix_jordan, yau_twist,
                                     transpose_map)
from homjordan.corpus import ex5_3, ex5_3_corrected, jordan_twist_corpus, rank_deficient_bimodule
from homjordan.errors import EquivarianceFailed, PreconditionFailed
from homjordan.exactla import GF, QQ, Matrix, Subspace


def test_regular_bimodule_of_twists():
    for name, j, a in jordan_twist_corpus(QQ)[8:17]:
        assert check_bimodule(regular_bimodule(yau_twist(j, a))).holds, name


def test_regular_bimodule_of_non_multiplicative_line_fails():
    # mu = ab, alpha = 2 id: the identities give 3 k^2 on one side and 3 k^3 on the other
    rep = check_bimodule(regular_bimodule(family_dim1(2)))
    assert rep.verdict is Verdict.FAILS


@pytest.mark.parametrize("f", [QQ, GF(2), GF(3), GF(5)], ids=["Q", "GF2", "GF3", "GF5"])
def test_identity_actions_with_identity_twist_fail(f):
    rep = check_bimodule(ex5_3(f))
    bad = rep["bimodule_identity_2"]
    assert bad.verdict is Verdict.FAILS
    assert bad.witness["lhs"] == (1,)
    assert bad.witness["rhs"] == (f.reduce(2),)


def test_doubled_twist_is_a_bimodule():
    r = ex5_3_corrected()
    assert check_bimodule(r).holds and check_equivariance(r).holds


def test_equivariance_failure_witness():
    a = fixture_example_4_4()
    r = BimoduleRep(a, Matrix.identity(QQ, 1), (Matrix.identity(QQ, 1), Matrix.zeros(QQ, 1, 1)))
    rep = check_equivariance(r)
    assert rep.verdict is Verdict.FAILS and rep.checks[0].witness["a"] == (1, 0)
    with pytest.raises(EquivarianceFailed):
        bimodule_to_module(r)


def test_transport_of_regular_bimodule_is_regular_module():
    j = full_matrix_jordan(QQ)
    t = transpose_map(QQ)
    m = bimodule_to_module(regular_bimodule(yau_twist(j, t)))
    assert m.algebra.mu == j.mu
    assert m.actions == tuple(j.left_operators)
    assert check_jordan_module(m).holds


def test_transport_round_trip():
    for name, j, a in jordan_twist_corpus(QQ)[8:20]:
        r = regular_bimodule(yau_twist(j, a))
        m = bimodule_to_module(r)
        assert module_to_bimodule(m, r.alpha_w) == r, name


def test_module_to_bimodule_checks_equivariance():
    j = diagonal_algebra(QQ, 2)
    mod = JordanModuleRep(j, tuple(j.left_operators))
    with pytest.raises(EquivarianceFailed):
        module_to_bimodule(mod, Matrix.diagonal(QQ, [1, 2]), Matrix.from_rows(QQ, [[0, 1], [1, 0]]))


def test_jordan_module_identities_detect_bad_module():
    j = diagonal_algebra(QQ, 2)
    bad = JordanModuleRep(j, (Matrix.from_rows(QQ, [[0, 1], [0, 0]]), Matrix.identity(QQ, 2)))
    assert not check_jordan_module(bad).holds


def test_submodules():
    r = rank_deficient_bimodule()
    line = Subspace.span(QQ, 2, [(0, 1)])
    assert is_submodule(r, line)
    assert submodule_closure(r, [(1, 1)]).is_full()


def test_irreducibility():
    assert is_irreducible(ex5_3_corrected()).irreducible
    res = is_irreducible(rank_deficient_bimodule())
    assert res.reducible and is_submodule(rank_deficient_bimodule(), res.witness)
    with pytest.raises(PreconditionFailed):
        is_irreducible(BimoduleRep(family_dim1(1), Matrix.zeros(QQ, 0, 0), (Matrix.zeros(QQ, 0, 0),)))


def test_irreducibility_exhaustive_over_gf3():
    a = fixture_example_4_4(GF(3))
    r = direct_sum_bimodule(regular_bimodule(a), regular_bimodule(a))
    res = is_irreducible(r)
    assert res.reducible and res.method == "exhaustive"


def test_kernel_image_on_rank_deficient_twist():
    rep = kernel_image_analysis(rank_deficient_bimodule())
    assert rep.report.holds
    assert rep.kernel.dim == 1 and rep.image.dim == 1


def test_singular_twist_on_irreducible_line_breaks_invertibility_claim():
    z = Matrix.zeros(QQ, 1, 1)
    r = BimoduleRep(fixture_example_4_4(), z, (z, z))
    assert check_bimodule(r).holds and check_equivariance(r).holds
    rep = irreducibility_transfer_check(r)
    assert rep["irreducible_implies_invertible"].verdict is Verdict.FAILS


def test_transfer_holds_for_regular_bimodule():
    rep = irreducibility_transfer_check(regular_bimodule(fixture_example_4_4()))
    assert rep.holds
