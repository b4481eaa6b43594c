import pytest

from homjordan.constructions import (diagonal_algebra, direct_sum, family_dim1, fixture_example_4_4, full_matrix_jordan,
                                     induced_jordan, quadratic_extension, strictly_upper_jordan, twisted_pair,
                                     yau_twist)
from homjordan.corpus import permutation_matrix, split_fixture, upper_automorphisms
from homjordan.errors import (CertificationFailed, NotAutomorphism, NotMultiplicative, NotSemisimple, RadicalNonzero,
                              UnsupportedCharacteristic)
from homjordan.exactla import GF, QQ, Matrix, Subspace
from homjordan.structure import (certify_decomposition, decompose_semisimple, derived_series, ideal_closure,
                                 is_hom_ideal, is_jordan_ideal, is_semisimple, is_simple, is_solvable, orbit_partition,
                                 radical, simple_by_brute_force, solvability_transfer_check, trace_form_gram)


def test_ideal_closure_with_and_without_alpha():
    a = fixture_example_4_4()
    assert ideal_closure(a, [(1, 0)]).is_full()
    j = induced_jordan(a)
    assert ideal_closure(j, [(1, 0)]) == Subspace.span(QQ, 2, [(1, 0)])


def test_ideal_predicates():
    j = diagonal_algebra(QQ, 2)
    line = Subspace.span(QQ, 2, [(1, 0)])
    assert is_jordan_ideal(j, line)
    # same product, alpha swaps: still a product ideal but not alpha-invariant
    a = j.with_alpha(permutation_matrix(QQ, (1, 0)))
    assert is_jordan_ideal(a, line) and not is_hom_ideal(a, line)


def test_derived_series_of_strictly_upper():
    ds = derived_series(strictly_upper_jordan(QQ))
    assert ds.dims() == [3, 1, 0] and ds.solvable
    assert ds.term(10).is_zero()
    assert not is_solvable(full_matrix_jordan(QQ))


def test_solvability_transfer_on_upper_twists():
    u = strictly_upper_jordan(QQ)
    for name, g in upper_automorphisms(QQ):
        rep = solvability_transfer_check(u, g)
        assert rep.holds, name


def test_solvability_transfer_needs_automorphism():
    with pytest.raises(NotAutomorphism):
        solvability_transfer_check(strictly_upper_jordan(QQ), Matrix.zeros(QQ, 3, 3))


def test_trace_form_and_radical():
    assert radical(full_matrix_jordan(QQ)).is_zero()
    assert radical(strictly_upper_jordan(QQ)).is_full()
    g = trace_form_gram(diagonal_algebra(QQ, 2))
    assert g == Matrix.identity(QQ, 2)
    with pytest.raises(UnsupportedCharacteristic):
        radical(diagonal_algebra(GF(5), 2))


def test_decompose_diagonal_algebra():
    dec = decompose_semisimple(diagonal_algebra(QQ, 3))
    assert [i.dim for i in dec.ideals] == [1, 1, 1] and dec.certified


def test_decompose_simple_jordan_algebra_is_one_piece():
    dec = decompose_semisimple(full_matrix_jordan(QQ))
    assert len(dec.ideals) == 1


def test_decompose_sum_of_simple_pieces():
    j = direct_sum(full_matrix_jordan(QQ), quadratic_extension(QQ, 2))
    dec = decompose_semisimple(j, seed=3)
    # Q(sqrt 2) is a field, hence a simple Jordan algebra
    assert sorted(i.dim for i in dec.ideals) == [2, 4]


def test_decompose_refuses_radical():
    with pytest.raises(RadicalNonzero):
        decompose_semisimple(strictly_upper_jordan(QQ))


def test_decomposition_is_seed_independent():
    j = diagonal_algebra(QQ, 3)
    assert decompose_semisimple(j, seed=0).ideals == decompose_semisimple(j, seed=17).ideals


def test_orbit_partition_of_swap():
    dec = decompose_semisimple(induced_jordan(fixture_example_4_4()), alpha=fixture_example_4_4().alpha)
    assert dec.orbit_partition == ((0, 1),) and dec.transitive


def test_orbit_partition_rejects_non_permuting_map():
    ideals = [Subspace.span(QQ, 2, [(1, 0)]), Subspace.span(QQ, 2, [(0, 1)])]
    with pytest.raises(CertificationFailed):
        orbit_partition(Matrix.from_rows(QQ, [[1, 1], [0, 1]]), ideals)


def test_certify_rejects_overlapping_pieces():
    j = diagonal_algebra(QQ, 2)
    assert not certify_decomposition(j, [Subspace.full(QQ, 2), Subspace.span(QQ, 2, [(1, 0)])])


def test_simplicity_paths():
    assert is_simple(fixture_example_4_4()).simple
    assert is_simple(family_dim1(1)).path == "direct"
    assert not is_simple(family_dim1(0)).simple                           # alpha = 0
    s = is_simple(direct_sum(fixture_example_4_4(), family_dim1(1)))
    assert s.verdict == "not_simple" and s.witness is not None and is_hom_ideal(
        direct_sum(fixture_example_4_4(), family_dim1(1)), s.witness)
    assert not is_simple(split_fixture()).simple                           # Ker(alpha) != 0


def test_simplicity_of_twisted_pairs():
    assert is_simple(twisted_pair(quadratic_extension(QQ, 2))).simple
    assert is_simple(yau_twist(full_matrix_jordan(QQ), Matrix.identity(QQ, 4))).simple


def test_simplicity_requires_multiplicative_over_q():
    from homjordan.constructions import fixture_example_4_4_rescaled
    with pytest.raises(NotMultiplicative):
        is_simple(fixture_example_4_4_rescaled())


def test_simplicity_over_small_field_uses_exhaustive_closure():
    r = is_simple(fixture_example_4_4(GF(3)))
    assert r.simple and r.path == "exhaustive"
    assert r.simple == simple_by_brute_force(fixture_example_4_4(GF(3)))


def test_semisimple_sum():
    a = direct_sum(fixture_example_4_4(), family_dim1(1))
    dec = is_semisimple(a)
    assert sorted(i.dim for i in dec.ideals) == [1, 2]
    assert not dec.transitive


def test_not_semisimple_reasons():
    with pytest.raises(NotSemisimple) as e:
        is_semisimple(split_fixture())
    assert e.value.reason == "alpha is singular"
    with pytest.raises(NotSemisimple) as e:
        is_semisimple(yau_twist(strictly_upper_jordan(QQ), Matrix.identity(QQ, 3)))
    assert e.value.reason == "induced algebra has nonzero radical"
