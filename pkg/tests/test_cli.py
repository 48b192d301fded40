import json

import pytest

from ringlab import cli, harness


def write_instance(tmp_path, name, doc):
    path = tmp_path / f"{name}.json"
    path.write_text(json.dumps(doc))
    return str(path)


@pytest.fixture
def decomposed_file(tmp_path):
    return write_instance(tmp_path, "decomposed", {
        "ring": "prod(gf(3,2),gf(3,2))", "subring": "diag",
        "action": ["componentwise(frobenius,frobenius)"]})


def test_classify_prints_both_levels(decomposed_file, capsys):
    assert cli.main(["classify", decomposed_file]) == 0
    out = capsys.readouterr().out
    assert out.splitlines()[0] == "MinimalDecomposed → fixed: MinimalDecomposed"
    doc = json.loads(out.partition("\n")[2])
    assert doc["schema"] == "ringlab/1"
    assert doc["ambient"]["kind"] == "MinimalDecomposed"
    assert doc["fixed"]["kind"] == "MinimalDecomposed"


def test_classify_equal_rings(tmp_path, capsys):
    path = write_instance(tmp_path, "equal", {
        "ring": "zmod(6)", "subring": {"gens": ["1"]},
        "action": ["identity"]})
    assert cli.main(["classify", path]) == 0
    out = capsys.readouterr().out
    assert out.splitlines()[0] == "TrivialEqual"
    assert json.loads(out.partition("\n")[2])["fixed"] is None


def test_classify_rejects_funcfield(tmp_path, capsys):
    path = write_instance(tmp_path, "ff", {"ring": "funcfield(5,x,6)"})
    assert cli.main(["classify", path]) == 2
    assert "finite" in capsys.readouterr().err


def test_classify_cap(tmp_path, capsys):
    path = write_instance(tmp_path, "big", {"ring": "gf(2,10)"})
    assert cli.main(["classify", path]) == 2
    assert "cap" in capsys.readouterr().err


def test_classify_bad_schema(tmp_path, capsys):
    path = write_instance(tmp_path, "bad", {"ring": "zmod(6)", "oops": 1})
    assert cli.main(["classify", path]) == 2
    assert "oops" in capsys.readouterr().err


def test_classify_missing_file(capsys):
    assert cli.main(["classify", "/nonexistent/instance.json"]) == 2
    assert "cannot read" in capsys.readouterr().err


def test_verify_single_file(decomposed_file, capsys):
    assert cli.main(["verify", decomposed_file]) == 0
    out = capsys.readouterr().out
    assert "0 fail" in out
    assert "decomposed" in out


def test_verify_requires_input(capsys):
    assert cli.main(["verify"]) == 2
    assert "instance files or --all" in capsys.readouterr().err


def test_verify_incompatible_check(tmp_path, capsys):
    path = write_instance(tmp_path, "mismatch", {
        "ring": "zmod(6)", "checks": ["thm_3_6"]})
    assert cli.main(["verify", path]) == 2
    assert "funcfield" in capsys.readouterr().err


def test_verify_unknown_check(tmp_path, capsys):
    path = write_instance(tmp_path, "unknown", {
        "ring": "zmod(6)", "checks": ["thm_9_9"]})
    assert cli.main(["verify", path]) == 2
    assert "thm_9_9" in capsys.readouterr().err


def test_verify_report_schema(tmp_path, decomposed_file, capsys):
    report = tmp_path / "out.json"
    assert cli.main(["verify", decomposed_file, "--report",
                     str(report)]) == 0
    capsys.readouterr()
    doc = json.loads(report.read_text())
    assert doc["schema"] == "ringlab/1"
    assert doc["seed"] == 0
    assert {d["theorem"] for d in doc["verdicts"]} == set(
        harness.CHECKERS) - {
            tid for tid, (kinds, _, _) in harness.CHECKERS.items()
            if "finite" not in kinds}


def test_verify_report_deterministic(tmp_path, capsys):
    path = write_instance(tmp_path, "ff52", {
        "ring": "funcfield(5,x,6)", "action": ["scale(2)"],
        "checks": ["lemma_2_1", "lemma_3_2", "lemma_4_6"]})
    r1, r2 = tmp_path / "r1.json", tmp_path / "r2.json"
    assert cli.main(["verify", path, "--seed", "0", "--report",
                     str(r1)]) == 0
    assert cli.main(["verify", path, "--seed", "0", "--report",
                     str(r2)]) == 0
    capsys.readouterr()
    assert r1.read_bytes() == r2.read_bytes()


def test_verify_exit_one_on_fail(decomposed_file, capsys, monkeypatch):
    fake = harness.Verdict("lemma_2_1", "x", "claim", {"h": True}, "fail",
                           conclusion={"ok": False})
    monkeypatch.setattr(harness, "verify_all", lambda inst, seed=0: [fake])
    assert cli.main(["verify", decomposed_file]) == 1
    assert "1 fail" in capsys.readouterr().out


def test_explore_spec(capsys):
    assert cli.main(["explore", "--ring", "zmod(12)", "--spec"]) == 0
    out = capsys.readouterr().out
    assert "(2)  maximal" in out
    assert "(3)  maximal" in out


def test_explore_subfield_chain(capsys):
    assert cli.main(["explore", "--ring", "gf(2,4)", "--list-intermediate",
                     "--base", "gf(2,1)"]) == 0
    assert "orders: 2 < 4 < 16" in capsys.readouterr().out


def test_explore_conductor(capsys):
    assert cli.main(["explore", "--ring", "prod(gf(3,1),gf(3,1))",
                     "--conductor", "--subring", "diag"]) == 0
    assert "conductor: {((0),(0))}" in capsys.readouterr().out


def test_explore_critical(capsys):
    assert cli.main(["explore", "--ring", "gf(2,2)", "--critical",
                     "--subring", "gens="]) == 0
    assert "critical ideal: {(0,0)}" in capsys.readouterr().out


def test_explore_intermediate_cap(capsys):
    assert cli.main(["explore", "--ring", "gf(2,4)", "--list-intermediate",
                     "--max-order", "8"]) == 2
    assert "8" in capsys.readouterr().err


def test_explore_subring_and_base_conflict(capsys):
    assert cli.main(["explore", "--ring", "gf(2,4)", "--list-intermediate",
                     "--subring", "full", "--base", "gf(2,1)"]) == 2
    assert "not both" in capsys.readouterr().err


def test_explore_gens_subring(capsys):
    assert cli.main(["explore", "--ring", "zmod(12)", "--conductor",
                     "--subring", "gens=4;1"]) == 0
    out = capsys.readouterr().out
    assert "subring: order" in out


def test_unknown_subcommand_exits_two():
    with pytest.raises(SystemExit) as exc:
        cli.main(["frobnicate"])
    assert exc.value.code == 2
