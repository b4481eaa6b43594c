import json

import pytest

from homjordan.constructions import fixture_example_4_4
from homjordan.corpus import ex5_3, ex5_3_corrected, hom_corpus, small_field_simplicity_corpus
from homjordan.exactla import GF, QQ
from homjordan.io import (InvariantViolation, ParseError, algebra_to_obj, bimodule_to_obj, load_algebra, load_bimodule,
                          parse_algebra, parse_bimodule, parse_vectors, serialize_algebra, serialize_bimodule)

SWAP_DOC = {"kind": "hom_algebra", "field": {"type": "Q"}, "dim": 2,
            "mu": [{"i": 0, "j": 0, "k": 1, "c": "1"}, {"i": 1, "j": 1, "k": 0, "c": "1"}],
            "alpha": [["0", "1"], ["1", "0"]]}


def doc(**over):
    d = json.loads(json.dumps(SWAP_DOC))
    d.update(over)
    return json.dumps(d)


def test_swap_document_parses_to_fixture():
    assert parse_algebra(doc()).mu == fixture_example_4_4().mu
    assert parse_algebra(doc()).alpha == fixture_example_4_4().alpha


@pytest.mark.parametrize("corpus", [lambda: hom_corpus(QQ), lambda: small_field_simplicity_corpus(GF(3))],
                         ids=["Q", "GF3"])
def test_round_trip_on_corpus(corpus):
    for name, a in corpus():
        text = serialize_algebra(a)
        b = parse_algebra(text)
        assert b == a, name
        assert serialize_algebra(b) == text, name


def test_shipped_fixture_files_match_library(fixtures_dir):
    assert load_algebra(str(fixtures_dir / "ex4_4.json")) == fixture_example_4_4()
    assert load_algebra(str(fixtures_dir / "ex4_4_gf2.json")) == fixture_example_4_4(GF(2))
    assert load_bimodule(str(fixtures_dir / "ex5_3.json")) == ex5_3(GF(2))
    assert load_bimodule(str(fixtures_dir / "ex5_3_corrected.json")) == ex5_3_corrected()


def test_symmetric_entries_and_sparse_order():
    text = doc(mu=[{"i": 1, "j": 0, "k": 0, "c": "1/2"}, {"i": 0, "j": 1, "k": 0, "c": "2/4"}])
    a = parse_algebra(text)
    assert a.mu[0][1] == a.mu[1][0]
    assert algebra_to_obj(a)["mu"] == [{"i": 0, "j": 1, "k": 0, "c": "1/2"}]


def test_empty_mu_is_zero_algebra():
    a = parse_algebra(doc(mu=[]))
    assert all(v == (0, 0) for row in a.mu for v in row)


@pytest.mark.parametrize("bad", [
    doc(mu=[{"i": 0, "j": 0, "k": 2, "c": "1"}]),
    doc(mu=[{"i": 0, "j": 0, "k": 0, "c": "1"}, {"i": 0, "j": 0, "k": 0, "c": "1"}]),
    doc(alpha=[["1"]]),
    doc(kind="other"),
    doc(dim=-1),
    doc(field={"type": "GF", "p": 4}),
    doc(mu=[{"i": 0, "j": 0, "k": 0, "c": "1/0"}]),
    doc(mu=[{"i": 0, "j": 0, "k": 0, "c": True}]),
    "{not json",
])
def test_parse_errors(bad):
    with pytest.raises(ParseError):
        parse_algebra(bad)


def test_conflicting_symmetric_entries():
    with pytest.raises(InvariantViolation):
        parse_algebra(doc(mu=[{"i": 0, "j": 1, "k": 0, "c": "1"}, {"i": 1, "j": 0, "k": 0, "c": "2"}]))


def test_parse_error_mentions_location():
    with pytest.raises(ParseError, match=r"mu\[0\]"):
        parse_algebra(doc(mu=[{"i": 0, "j": 5, "k": 0, "c": "1"}]))


def test_bimodule_inline_round_trip():
    r = ex5_3_corrected()
    assert parse_bimodule(serialize_bimodule(r)) == r
    assert bimodule_to_obj(r)["dim_w"] == 1


def test_bimodule_wrong_action_count():
    obj = bimodule_to_obj(ex5_3_corrected())
    obj["rho_l"] = obj["rho_l"][:1]
    with pytest.raises(ParseError):
        parse_bimodule(json.dumps(obj))


def test_bimodule_path_reference(tmp_path):
    (tmp_path / "alg.json").write_text(serialize_algebra(fixture_example_4_4()))
    (tmp_path / "mod.json").write_text(serialize_bimodule(ex5_3_corrected(), "alg.json"))
    assert load_bimodule(str(tmp_path / "mod.json")) == ex5_3_corrected()


def test_parse_vectors():
    assert parse_vectors(QQ, "1,0; 0,1/2", 2) == [(1, 0), (0, QQ.parse("1/2"))]
    assert parse_vectors(GF(3), "[[\"2\", 4]]", 2) == [(2, 1)]
    with pytest.raises(ParseError):
        parse_vectors(QQ, "1,0,0", 2)
