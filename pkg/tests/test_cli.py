"""The command-line interface: argument handling, JSON output, exit
codes, and determinism."""

import json

import pytest

from dunklmono.cli import main, _parse_n_range


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out), out


def test_parse_n_range():
    assert _parse_n_range("3") == [3]
    assert _parse_n_range("0..4") == [0, 1, 2, 3, 4]
    with pytest.raises(ValueError):
        _parse_n_range("4..0")


def test_dim_command(capsys):
    code, doc, _ = run(capsys, "dim", "--n", "0..3", "--k", "1,1,1")
    assert code == 0
    assert doc["schema_version"] == 1
    assert doc["command"] == "dim"
    assert [row["dim"] for row in doc["rows"]] == [2, 4, 6, 8]
    assert doc["all_ok"] is True


def test_negative_multiplicities_are_accepted(capsys):
    code, doc, _ = run(capsys, "dim", "--n", "0..2", "--k", "-1/2,-3/2,-1/2")
    assert code == 0
    assert doc["t"] == [1, 3, 1]


def test_verify_bi(capsys):
    code, doc, _ = run(capsys, "verify", "bi", "--n", "0..2",
                       "--k", "-1/2,-3/2,-1/2")
    assert code == 0 and doc["all_ok"]
    assert len(doc["rows"]) == 3


def test_verify_rank_lemma(capsys):
    code, doc, _ = run(capsys, "verify", "rank-lemma", "--n-max", "5",
                       "--k", "-1/2,-3/2,1")
    assert code == 0
    for row in doc["rows"]:
        assert row["computed"] == row["predicted"]
        assert row["factorization_ok"]


def test_irrep_command(capsys):
    code, doc, _ = run(capsys, "irrep", "--family", "E", "--d", "3",
                       "--abc", "1,1/2,2", "--twist", "(-1,1);(1 2)")
    assert code == 0
    assert set(doc["matrices"]) == {"X", "Y", "Z"}
    assert len(doc["matrices"]["X"]) == 4
    assert "irreducible_by_criterion" in doc
    assert "irreducible_by_oracle" in doc
    assert doc["verdicts_agree"]


def test_ladder_command(capsys):
    code, doc, _ = run(capsys, "ladder", "--case", "lt-t1t3-odd",
                       "--n", "3", "--k", "1,1,1")
    assert code == 0
    assert doc["certificate"]["all_ok"]
    assert len(doc["elements"]) == len(doc["theta"]) == 4


def test_classify_pass_and_gap(capsys):
    code, doc, _ = run(capsys, "classify", "--n", "5",
                       "--k", "-1/2,-3/2,-1/2", "--verify")
    assert code == 0 and doc["case"] == "IV" and doc["all_ok"]
    code, doc, _ = run(capsys, "classify", "--n", "3",
                       "--k", "-1/2,-3/2,-1/2")
    assert code == 0
    assert doc["case"] is None and "warning" in doc


def test_output_is_deterministic(capsys):
    argv = ("classify", "--n", "2", "--k", "-1/2,2,-1/2")
    _, _, first = run(capsys, *argv)
    _, _, second = run(capsys, *argv)
    assert first == second


def test_json_file_matches_stdout(capsys, tmp_path):
    path = tmp_path / "report.json"
    _, _, out = run(capsys, "dim", "--n", "0..2", "--k", "1,1,1",
                    "--json", str(path))
    assert path.read_text() == out


def test_usage_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["dim", "--n", "0..2"])  # --k missing
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["dim", "--n", "oops", "--k", "1,1,1"])
    assert exc.value.code == 2
