import pytest

from homjordan.algebra import check_homomorphism
from homjordan.classification import (classification_signature, compare_signatures, formal_search, iso_search_smallfield,
                                      lift_ideal_isomorphism)
from homjordan.constructions import (direct_sum, family_dim1, fixture_example_4_4, fixture_example_4_4_rescaled,
                                     fixture_example_4_4_variant, full_matrix_jordan, quadratic_extension,
                                     transpose_map, twisted_pair, yau_twist)
from homjordan.errors import IntertwiningFailed, NotIdealIso, NotMultiplicative, NotSimple
from homjordan.exactla import GF, QQ, Matrix


def test_swap_example_signature():
    s = classification_signature(fixture_example_4_4())
    assert (s.ideal_dim, s.n, s.a1) == (1, 2, Matrix.identity(QQ, 1))
    assert s.to_json()["a1"] == [["1"]]


def test_line_signature():
    s = classification_signature(family_dim1(1))
    assert (s.ideal_dim, s.n, s.total_dim) == (1, 1, 1)


def test_simple_jordan_twist_signature():
    s = classification_signature(yau_twist(full_matrix_jordan(QQ), transpose_map(QQ)))
    assert (s.ideal_dim, s.n) == (4, 1)
    assert s.a1 == transpose_map(QQ)


def test_signature_requires_simple_and_multiplicative():
    with pytest.raises(NotSimple):
        classification_signature(direct_sum(fixture_example_4_4(), family_dim1(1)))
    with pytest.raises(NotMultiplicative):
        classification_signature(fixture_example_4_4_rescaled())


def test_compare_signatures():
    ex = classification_signature(fixture_example_4_4())
    assert compare_signatures(ex, classification_signature(family_dim1(1))).reason == "total_dim"
    assert not compare_signatures(ex, ex).distinct
    a = classification_signature(fixture_example_4_4_variant())
    b = classification_signature(twisted_pair(quadratic_extension(QQ, 2)))
    c = compare_signatures(a, b)
    assert c.distinct and c.reason == "similarity"


def test_lift_identity_gives_automorphism():
    a = fixture_example_4_4()
    phi = lift_ideal_isomorphism(Matrix.identity(QQ, 1), a, a)
    assert check_homomorphism(phi, a, a, isomorphism=True).holds


def test_lift_rejects_non_isomorphism_and_bad_intertwining():
    a = fixture_example_4_4()
    with pytest.raises(NotIdealIso):
        lift_ideal_isomorphism(Matrix.from_rows(QQ, [[2]]), a, a)
    with pytest.raises(NotIdealIso):
        lift_ideal_isomorphism(Matrix.identity(QQ, 2), a, a)
    with pytest.raises(IntertwiningFailed):
        lift_ideal_isomorphism(Matrix.identity(QQ, 2), fixture_example_4_4_variant(),
                               twisted_pair(quadratic_extension(QQ, 2)))


def test_lift_of_pair_automorphism():
    # conjugation is an automorphism of Q(sqrt 2) commuting with A_1 = conjugation
    a = fixture_example_4_4_variant()
    phi = lift_ideal_isomorphism(Matrix.diagonal(QQ, [1, -1]), a, a)
    assert check_homomorphism(phi, a, a, isomorphism=True).holds
    assert phi != Matrix.identity(QQ, 4)


def test_iso_search_over_gf3():
    ex = fixture_example_4_4(GF(3))
    found = iso_search_smallfield(ex, ex)
    assert found.found and check_homomorphism(found.phi, ex, ex, isomorphism=True).holds
    miss = iso_search_smallfield(fixture_example_4_4_variant(GF(3)), twisted_pair(quadratic_extension(GF(3), 2)))
    assert not miss.found and miss.examined == 3 ** 4


def test_iso_search_multiplicativity_mismatch():
    r = iso_search_smallfield(fixture_example_4_4(GF(3)), fixture_example_4_4_rescaled(GF(3)))
    assert not r.found and "multiplicative" in r.reason


def test_iso_search_dimension_mismatch():
    r = iso_search_smallfield(fixture_example_4_4(GF(3)), family_dim1(1, GF(3)))
    assert not r.found and r.examined == 0


def test_formal_signature_of_rescaled_variant():
    s = classification_signature(fixture_example_4_4_rescaled(), formal=True)
    assert (s.ideal_dim, s.n, s.a1) == (1, 2, Matrix.from_rows(QQ, [[4]]))
    c = compare_signatures(classification_signature(fixture_example_4_4()), s)
    assert c.distinct and c.reason == "similarity"


def _brute_isomorphisms(a, b):
    import itertools
    f, n = a.field, a.dim
    out = []
    for e in itertools.product(range(f.p), repeat=n * n):
        m = Matrix(f, tuple(tuple(e[r * n:(r + 1) * n]) for r in range(n)), n)
        if check_homomorphism(m, a, b, isomorphism=True).holds:
            out.append(m)
    return out


@pytest.mark.parametrize("p", [3, 5])
def test_searches_agree_with_brute_force(p):
    f = GF(p)
    algebras = [fixture_example_4_4(f), fixture_example_4_4_rescaled(f, 2), fixture_example_4_4_rescaled(f, p - 1)]
    for a in algebras:
        for b in algebras:
            truth = bool(_brute_isomorphisms(a, b))
            res = iso_search_smallfield(a, b) if a is algebras[0] or b is algebras[0] else formal_search(a, b)
            assert res.found == truth
            if res.found:
                assert check_homomorphism(res.phi, a, b, isomorphism=True).holds
