import json

import pytest

from heckecrystals.cli import main


def run(capsys, *argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        import io
        import sys
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_enumerate_text(capsys):
    code, out = run(capsys, "enumerate", "--word", "1", "--factors", "2",
                    "--max-excess", "1")
    assert code == 0
    assert set(out.split()) == {"(1)()", "()(1)", "(1)(1)"}


def test_enumerate_json_round_trip(capsys):
    code, out = run(capsys, "enumerate", "--word", "21", "--factors", "2",
                    "--max-excess", "0", "--format", "json")
    assert code == 0
    from heckecrystals.formats import factorization_from_json

    parsed = [factorization_from_json(d) for d in json.loads(out)]
    assert {str(f) for f in parsed} == {"(21)()", "(2)(1)", "()(21)"}


def test_insert_star_json(capsys, monkeypatch):
    code, out = run(capsys, "insert", "--algo", "star",
                    stdin="4 4 2 2 1 1 / 4 2 4 2 3 1", monkeypatch=monkeypatch)
    assert code == 0
    data = json.loads(out)
    assert data["P"]["rows"] == [[[1], [2], [4]], [[1], [4]], [[3]]]
    assert data["Q"]["rows"] == [[[1], [1], [2]], [[2], [4]], [[4]]]


def test_insert_hecke_from_factorization_text(capsys, monkeypatch):
    code, out = run(capsys, "insert", "--algo", "hecke",
                    stdin="(1)(2)(31)()(32)", monkeypatch=monkeypatch)
    assert code == 0
    data = json.loads(out)
    assert data["Q"]["rows"] == [[[1], [1, 3]], [[3], [4]], [[5]]]


def test_insert_rejects_braided_star_input(capsys, monkeypatch):
    code, _ = run(capsys, "insert", "--algo", "star", stdin="(21)(21)",
                  monkeypatch=monkeypatch)
    assert code == 2


def test_residue_forward_and_back(capsys, monkeypatch):
    tableau = json.dumps({
        "notation": "french",
        "outer": [2, 2], "inner": [1],
        "rows": [[[1, 2]], [[2, 3], [3]]],
    })
    code, out = run(capsys, "residue", stdin=tableau, monkeypatch=monkeypatch)
    assert code == 0
    assert out.strip() == "(21)(31)(3)"

    code, out = run(capsys, "residue", "--invert", stdin="(21)(31)(3)",
                    monkeypatch=monkeypatch)
    assert code == 0
    assert json.loads(out)["rows"] == [[[1, 2]], [[2, 3], [3]]]


def test_residue_invert_with_shape(capsys, monkeypatch):
    code, out = run(capsys, "residue", "--invert", "--shape", "3,3,1,1,1/1,1,1",
                    stdin="(61)(752)(75)(762)", monkeypatch=monkeypatch)
    assert code == 0
    assert json.loads(out)["outer"] == [3, 3, 1, 1, 1]


def test_uncrowd_json(capsys, monkeypatch):
    tableau = json.dumps({
        "notation": "french",
        "outer": [1], "inner": [],
        "rows": [[[1, 2]]],
    })
    code, out = run(capsys, "uncrowd", stdin=tableau, monkeypatch=monkeypatch)
    assert code == 0
    data = json.loads(out)
    assert data["P"]["rows"] == [[[1]], [[2]]]
    assert data["Q"]["rows"] == [[], [[1]]]


def test_graph_dot_output(capsys):
    code, out = run(capsys, "graph", "--seed", "(1)(21)(1)", "--crystal", "local3")
    assert code == 0
    assert out.startswith("digraph")
    assert 'color="blue"' in out and 'color="red"' in out
    assert out.count("->") == 6


def test_graph_star_json(capsys):
    code, out = run(capsys, "graph", "--seed", "()(2)(1)(32)", "--crystal", "star",
                    "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert "()(2)(1)(32)" in data["nodes"]


def test_expand_table(capsys):
    code, out = run(capsys, "expand", "--word", "12132", "--vars", "4",
                    "--max-beta", "2")
    assert code == 0
    lines = out.strip().splitlines()
    assert "beta^0  s_2,2,1  1" in lines
    assert "beta^1  s_2,2,2  2" in lines
    assert "beta^1  s_2,2,1,1  3" in lines
    assert "beta^2  s_2,2,2,1  6" in lines
    assert len(lines) == 4


def test_expand_csv_and_json_agree(capsys):
    code, out_json = run(capsys, "expand", "--word", "132", "--vars", "2",
                         "--max-beta", "1", "--format", "json", "--method", "both")
    assert code == 0
    rows = json.loads(out_json)
    code, out_csv = run(capsys, "expand", "--word", "132", "--vars", "2",
                        "--max-beta", "1", "--format", "csv")
    assert code == 0
    assert len(out_csv.strip().splitlines()) == len(rows) + 1


def test_verify_single_check(capsys):
    code, out = run(capsys, "verify", "--theorem", "dual-pipeline", "--json")
    assert code == 0
    data = json.loads(out)
    assert data[0]["name"] == "dual-pipeline"
    assert data[0]["failures"] == []


def test_verify_list(capsys):
    code, out = run(capsys, "verify", "--list")
    assert code == 0
    assert "residue-intertwining" in out.split()


def test_usage_error_exit_code(capsys):
    assert main(["enumerate"]) == 2  # missing required flags


def test_unknown_theorem_is_validation_error(capsys):
    code, _ = run(capsys, "verify", "--theorem", "bogus")
    assert code == 2
