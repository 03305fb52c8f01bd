import json
from pathlib import Path

import pytest

from quintic_nodes.cli import main, parse_number

FIXTURES = Path(__file__).parent / "fixtures"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_census_n8(capsys):
    code, out, _ = run(capsys, "census", "--n", "8")
    assert code == 0
    doc = json.loads(out)
    best = doc["payload"]["best"]
    assert best["param"]["text"] == "(3 : -1)"
    assert best["node_count"] == 23436
    assert best["decomposition"] == [126, 3150, 7560, 12600]
    assert set(doc) == {"version", "command", "params", "payload", "warnings"}


def test_census_n3(capsys):
    code, out, _ = run(capsys, "census", "--n", "3")
    doc = json.loads(out)
    assert code == 0
    assert doc["payload"]["best"]["param"]["text"] == "(2 : 1)"
    assert doc["payload"]["best"]["node_count"] == 20


def test_census_formats_and_out(capsys, tmp_path):
    path = tmp_path / "r.json"
    code, out, _ = run(capsys, "census", "--n", "5", "--format", "md", "--out", str(path))
    assert code == 0 and out.startswith("# Census n = 5")
    assert json.loads(path.read_text())["payload"]["best"]["node_count"] == 210
    code, out, _ = run(capsys, "census", "--n", "5", "--format", "csv")
    assert code == 0 and out.splitlines()[0].startswith("section,param")


def test_census_approx_keeps_exact(capsys):
    code, out, _ = run(capsys, "census", "--n", "4", "--approx")
    doc = json.loads(out)
    best = doc["payload"]["best"]["param"]
    assert "ratio_approx" in best and "/" not in best["ratio_approx"]
    assert best["alpha"] == "1"


@pytest.mark.parametrize("argv", [
    ("census", "--n", "2"),
    ("census",),
    ("census", "--n", "x"),
    ("arnold", "--n", "0", "--degree", "5"),
    ("pentagon", "--n", "2"),
    ("tables", "--which", "4"),
    ("verify", "--n", "8", "--alpha", "0", "--beta", "1"),
    ("verify", "--n", "8", "--alpha", "1", "--beta", "abc"),
    ("frobnicate",),
])
def test_bad_arguments_exit_1(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 1
    assert err


def test_degenerate_member_message(capsys):
    _, _, err = run(capsys, "verify", "--n", "8", "--alpha", "0", "--beta", "1")
    assert "S2 = S3 = 0" in err


def test_solver_failure_exit_2(capsys, monkeypatch):
    from quintic_nodes import cli
    from quintic_nodes.census import SolverError

    def boom(n):
        raise SolverError("residual of degree 5")

    monkeypatch.setattr(cli, "_census", boom)
    code, _, err = run(capsys, "census", "--n", "7")
    assert code == 2 and "degree 5" in err


def test_verify_best(capsys):
    code, out, _ = run(capsys, "verify", "--n", "8", "--alpha", "3", "--beta", "-1")
    p = json.loads(out)["payload"]
    assert code == 0
    assert len(p["orbits"]) == 4 and p["all_nodes"] and p["total_nodes"] == 23436
    assert not p["exceptional"]


def test_verify_exceptional(capsys):
    code, out, _ = run(capsys, "verify", "--n", "8", "--alpha", "5", "--beta", "-3")
    doc = json.loads(out)
    p = doc["payload"]
    assert code == 0 and p["exceptional"]
    eta = next(o for o in p["orbits"] if o["pattern"] == [5, 5])
    assert eta["node_status"] == "not-node"
    assert doc["warnings"]


def test_verify_algebraic_parameter(capsys):
    code, out, _ = run(capsys, "verify", "--n", "8", "--alpha", "1", "--beta", "root of [7/75, 13/15, 1], component 0")
    p = json.loads(out)["payload"]
    assert code == 0 and p["all_nodes"]
    assert p["total_nodes"] == 126 + 3150 + 12600 + 1260


def test_parse_number():
    assert parse_number("3/4")[0] == 0.75
    x, K = parse_number("root of [3, 0, 1]")
    assert K.degree == 2 and not (x * x + 3)


def test_arnold_and_pentagon(capsys):
    code, out, _ = run(capsys, "arnold", "--n", "8", "--degree", "5")
    assert code == 0 and json.loads(out)["payload"]["arnold_number"] == 27876
    code, out, _ = run(capsys, "pentagon", "--n", "10")
    assert code == 0 and json.loads(out)["payload"]["affine_node_count"] == 325580
    code, out, _ = run(capsys, "pentagon", "--n", "3")
    doc = json.loads(out)
    assert doc["payload"]["affine_node_count"] == 30 and doc["warnings"]


def test_table3_annotation(capsys):
    code, out, _ = run(capsys, "tables", "--which", "3")
    assert code == 0
    assert "| 3 | 20 | 30(+1?) | 31 |" in out
    assert "| 10 | 296604 | 325580 | 411334 |" in out


@pytest.mark.parametrize("which", [1, 2, 3])
def test_tables_match_golden(capsys, which):
    code, out, _ = run(capsys, "tables", "--which", str(which), "--format", "json")
    assert code == 0
    assert out == (FIXTURES / f"table{which}.json").read_text()


def test_byte_identical_reruns(capsys):
    _, a, _ = run(capsys, "census", "--n", "6")
    _, b, _ = run(capsys, "census", "--n", "6")
    assert a == b
