import json


from homjordan.cli import main, render_text
from homjordan.constructions import family_dim2
from homjordan.io import load_algebra, serialize_algebra


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--format", "json")
    return code, json.loads(out), err


def test_verify_swap_example(capsys, fixtures_dir):
    code, rep, _ = run_json(capsys, "verify", fixtures_dir / "ex4_4.json")
    assert code == 0
    assert [(c["name"], c["verdict"]) for c in rep["report"]["checks"]] == [
        ("commutative", "holds"), ("hom_jordan", "holds"), ("multiplicative", "holds")]
    assert rep["exit_code"] == 0 and "seconds" not in rep


def test_analyze_swap_example(capsys, fixtures_dir):
    code, rep, _ = run_json(capsys, "analyze", fixtures_dir / "ex4_4.json")
    assert code == 0
    assert rep["simplicity"]["verdict"] == "simple"
    assert rep["signature"]["n"] == 2 and rep["signature"]["m"] == 1
    assert rep["derived_series"]["solvable"] is False
    assert rep["induced"]["radical_dim"] == 0 and rep["induced"]["ideal_dims"] == [1, 1]


def test_verify_failure_exit_code(capsys, tmp_path):
    p = tmp_path / "dim2.json"
    p.write_text(serialize_algebra(family_dim2(1, 1)))
    code, rep, _ = run_json(capsys, "verify", p)
    assert code == 1 and rep["report"]["verdict"] == "fails"


def test_usage_errors(capsys, tmp_path):
    assert run(capsys, "verify", tmp_path / "missing.json")[0] == 2
    (tmp_path / "bad.json").write_text("{")
    code, out, err = run(capsys, "verify", tmp_path / "bad.json")
    assert code == 2 and out == "" and "invalid JSON" in err
    assert run(capsys, "nonsense")[0] == 2
    assert run(capsys, "family", "--kind", "cyclic", "--n", "2")[0] == 2


def test_text_format_is_default(capsys, fixtures_dir):
    code, out, _ = run(capsys, "verify", fixtures_dir / "ex4_4.json")
    assert code == 0 and "verdict: holds" in out


def test_timing_only_on_request(capsys, fixtures_dir):
    _, rep, _ = run_json(capsys, "verify", fixtures_dir / "ex4_4.json", "--timing")
    assert "seconds" in rep


def test_induced_and_output_file(capsys, fixtures_dir, tmp_path):
    out = tmp_path / "j.json"
    code, rep, _ = run_json(capsys, "induced", fixtures_dir / "ex4_4.json", "-o", out)
    assert code == 0 and load_algebra(str(out)).jordan_mode
    code, rep, err = run_json(capsys, "induced", fixtures_dir / "ex4_4_rescaled.json")
    assert code == 1 and "multiplicative" in rep["error"] and err


def test_twist(capsys, fixtures_dir):
    code, rep, _ = run_json(capsys, "twist", fixtures_dir / "m2_jordan.json", "--alpha",
                            fixtures_dir / "m2_transpose.json")
    assert code == 0 and rep["report"]["verdict"] == "holds"


def test_quotient(capsys, fixtures_dir):
    code, rep, _ = run_json(capsys, "quotient", fixtures_dir / "split.json", "--ideal-gens", "0,0,1")
    assert code == 0 and rep["ideal_dim"] == 1 and rep["algebra"]["dim"] == 2


def test_split(capsys, fixtures_dir):
    code, rep, _ = run_json(capsys, "split", fixtures_dir / "split.json")
    assert code == 0 and rep["quotient_alpha_invertible"]
    assert run_json(capsys, "split", fixtures_dir / "ex4_4.json")[0] == 1


def test_family(capsys):
    code, rep, _ = run_json(capsys, "family", "--kind", "cyclic", "--n", "3", "--alpha", "shift", "--field", "GF(5)")
    assert code == 0 and rep["algebra"]["field"] == {"type": "GF", "p": 5}
    code, rep, _ = run_json(capsys, "family", "--kind", "dim1", "--k", "3")
    assert rep["algebra"]["alpha"] == [["3"]]


def test_signature_and_failure(capsys, fixtures_dir):
    code, rep, _ = run_json(capsys, "signature", fixtures_dir / "ex4_4.json")
    assert code == 0 and rep["signature"]["a1"] == [["1"]]
    assert run_json(capsys, "signature", fixtures_dir / "split.json")[0] == 1


def test_iso(capsys, fixtures_dir):
    assert run_json(capsys, "iso", fixtures_dir / "ex4_4.json", fixtures_dir / "ex4_4.json")[0] == 0
    code, rep, _ = run_json(capsys, "iso", fixtures_dir / "ex4_4_variant.json", fixtures_dir / "twin_ext_id.json")
    assert code == 1 and rep["comparison"]["reason"] == "similarity"
    code, rep, _ = run_json(capsys, "iso", fixtures_dir / "ex4_4_gf3.json", fixtures_dir / "ex4_4_gf3.json", "--search")
    assert code == 0 and rep["result"] == "isomorphic"
    assert run_json(capsys, "iso", fixtures_dir / "ex4_4.json", fixtures_dir / "ex4_4.json", "--search")[0] == 2


def test_bimodule_commands(capsys, fixtures_dir):
    alg = fixtures_dir / "ex4_4.json"
    assert run_json(capsys, "bimodule", "verify", alg, fixtures_dir / "ex5_3_corrected.json")[0] == 0
    code, rep, _ = run_json(capsys, "bimodule", "transport", alg, fixtures_dir / "ex5_3_corrected.json")
    assert code == 0 and rep["actions"] == [[["1/2"]], [["1/2"]]]
    code, rep, _ = run_json(capsys, "bimodule", "analyze", alg, fixtures_dir / "rank_deficient.json")
    assert code == 0 and rep["kernel_image"]["report"]["verdict"] == "holds"
    assert run_json(capsys, "bimodule", "transport", alg, fixtures_dir / "rank_deficient.json")[0] == 1


def test_identity_action_module_over_gf2_is_reported_as_failing(capsys, fixtures_dir):
    code, rep, _ = run_json(capsys, "bimodule", "verify", fixtures_dir / "ex4_4_gf2.json", fixtures_dir / "ex5_3.json")
    assert code == 1
    assert rep["report"]["checks"][1]["witness"]["lhs"] == ["1"]


def test_discrepancy_log(capsys):
    code, rep, _ = run_json(capsys, "discrepancy-log")
    assert code == 0 and rep["all_oracle_agree"]
    assert len(rep["cells"]) == 5 + 25 + 9


def test_render_text_tables():
    lines = render_text({"rows": [{"a": 1, "b": "x"}, {"a": 22, "b": None}], "flag": True})
    assert lines == ["rows:", "  a   b", "  1   x", "  22  -", "flag: yes"]
