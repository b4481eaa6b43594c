import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from homjordan.algebra import (DimensionError, HomAlgebra, NotJordanType, Verdict, check_commutative,
                               check_hom_isomorphism_via_induced, check_hom_jordan, check_homomorphism, check_jordan,
                               check_multiplicative, hom_jordan_sides, multiply)
from homjordan.constructions import (family_cyclic, family_dim1, fixture_example_4_4, full_matrix_jordan, transpose_map,
                                     yau_twist)
from homjordan.exactla import GF, QQ, Matrix
from homjordan.oracle import exhaustive_hom_jordan, exhaustive_jordan, exhaustive_multiplicative, random_symmetric_algebra


def test_swap_example_holds_everything():
    a = fixture_example_4_4()
    rep = check_hom_jordan(a) + check_multiplicative(a)
    assert [c.name for c in rep.checks] == ["commutative", "hom_jordan", "multiplicative"]
    assert rep.verdict is Verdict.HOLDS


def test_products_of_swap_example():
    a = fixture_example_4_4()
    assert multiply(a, (1, 0), (1, 0)) == (0, 1)
    assert multiply(a, (1, 1), (1, 1)) == (1, 1)


def test_noncommutative_table_fails_with_witness():
    mu = (((1, 0), (0, 1)), ((0, 0), (0, 0)))
    a = HomAlgebra(QQ, mu, Matrix.identity(QQ, 2))
    rep = check_commutative(a)
    assert rep.verdict is Verdict.FAILS
    assert rep.checks[0].witness["lhs"] == (0, 1)


def test_bad_shapes_raise():
    with pytest.raises((DimensionError, ValueError)):
        HomAlgebra.from_products(QQ, 2, {(0, 0): (1,)})


def test_check_jordan_requires_identity_twist():
    with pytest.raises(ValueError):
        check_jordan(fixture_example_4_4())


@pytest.mark.parametrize("f", [QQ, GF(5), GF(7)], ids=["Q", "GF5", "GF7"])
def test_cyclic_identity_twist_witness_is_genuine(f):
    a = family_cyclic(3, None, f)
    rep = check_hom_jordan(a)
    assert rep.verdict is Verdict.FAILS
    w = rep["hom_jordan"].witness
    lhs, rhs = hom_jordan_sides(a, w["x"], w["y"])
    assert lhs != rhs and (lhs, rhs) == (w["lhs"], w["rhs"])


def test_cyclic_identity_twist_holds_in_characteristic_two():
    assert check_hom_jordan(family_cyclic(3, None, GF(2))).holds


def test_multiplicativity_of_scaled_line():
    assert check_multiplicative(family_dim1(1)).holds
    rep = check_multiplicative(family_dim1(2))
    assert rep.verdict is Verdict.FAILS


@pytest.mark.parametrize("strategy", ["polarize", "exhaustive"])
def test_strategies_agree_over_gf5(strategy):
    rng = np.random.default_rng(11)
    for _ in range(40):
        a = random_symmetric_algebra(GF(5), 2, rng)
        assert check_hom_jordan(a, strategy=strategy).holds == exhaustive_hom_jordan(a)


def test_polarization_refused_in_small_characteristic():
    with pytest.raises(ValueError):
        check_hom_jordan(fixture_example_4_4(GF(3)), strategy="polarize")


def test_budget_exhaustion_is_undecidable():
    a = full_matrix_jordan(GF(3))
    rep = check_hom_jordan(a, budget=10)
    assert rep.verdict is Verdict.UNDECIDABLE


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 2 ** 32 - 1), st.sampled_from([2, 3, 5, 7]), st.integers(1, 3))
def test_hom_jordan_matches_oracle(seed, p, n):
    a = random_symmetric_algebra(GF(p), n, np.random.default_rng(seed))
    assert check_hom_jordan(a).holds == exhaustive_hom_jordan(a)
    assert check_multiplicative(a).holds == exhaustive_multiplicative(a)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2 ** 32 - 1), st.sampled_from([3, 5]), st.integers(1, 3))
def test_jordan_matches_oracle(seed, p, n):
    a = random_symmetric_algebra(GF(p), n, np.random.default_rng(seed))
    j = a.with_alpha(Matrix.identity(a.field, n))
    assert check_jordan(j).holds == exhaustive_jordan(j)


def test_homomorphism_checks():
    a = fixture_example_4_4()
    swap = a.alpha
    assert check_homomorphism(swap, a, a, isomorphism=True).holds
    rep = check_homomorphism(Matrix.zeros(QQ, 2, 2), a, a, isomorphism=True)
    assert rep["bijective"].verdict is Verdict.FAILS
    bad = Matrix.diagonal(QQ, [2, 1])
    assert check_homomorphism(bad, a, a)["preserves_product"].verdict is Verdict.FAILS


def test_isomorphism_via_induced_on_twists():
    j = full_matrix_jordan(QQ)
    t = transpose_map(QQ)
    a = yau_twist(j, t)
    rep = check_hom_isomorphism_via_induced(Matrix.identity(QQ, 4), a, a)
    assert rep.holds


def test_isomorphism_via_induced_needs_invertible_twist():
    a = family_dim1(0)
    with pytest.raises(NotJordanType):
        check_hom_isomorphism_via_induced(Matrix.identity(QQ, 1), a, a)
