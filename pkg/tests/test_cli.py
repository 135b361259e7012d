from __future__ import annotations

import json
import subprocess
import sys

import pytest

from fllmetric.cli import main


def run(capsys, *argv: str) -> tuple[int, str, str]:
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_dist(capsys):
    assert run(capsys, "dist", "0011", "0101") == (0, "llcs=3 distance=1\n", "")
    code, out, _ = run(capsys, "--format", "json", "dist", "01", "10")
    assert json.loads(out)["distance"] == 1


def test_global_flags_before_or_after(capsys):
    a = run(capsys, "--m", "3", "dist", "012", "210")
    b = run(capsys, "dist", "012", "210", "--m", "3")
    assert a == b and a[1] == "llcs=1 distance=2\n"


def test_ball(capsys):
    code, out, _ = run(capsys, "ball", "--center", "0101", "--radius", "1")
    assert (code, out) == (0, "size: 11\n")
    code, out, _ = run(capsys, "ball", "--center", "00", "--enumerate", "--format", "json")
    assert json.loads(out)["members"] == ["00", "01", "10"]


def test_ball_bfs_agrees(capsys):
    a = run(capsys, "ball", "--center", "012", "--m", "3", "--radius", "2", "--enumerate")
    b = run(capsys, "ball", "--center", "012", "--m", "3", "--radius", "2", "--enumerate", "--method", "bfs")
    assert a == b


def test_sphere_lexicographic_with_footer(capsys):
    code, out, _ = run(capsys, "sphere", "--center", "010", "--t-del", "1")
    assert out.splitlines() == ["00", "01", "10", "size: 3"]


def test_extremes(capsys):
    code, out, _ = run(capsys, "extremes", "--n", "8", "--exhaustive", "--format", "json")
    doc = json.loads(out)
    assert (doc["min"], doc["max"], doc["selector"]) == (9, 45, [2])
    assert doc["exhaustive"] == {"min": 9, "max": 45, "min_confirmed": True, "max_confirmed": True}
    code, out, _ = run(capsys, "extremes", "--n", "4", "--m", "3", "--format", "json")
    assert json.loads(out)["max"] == 30


def test_average_is_json(capsys):
    code, out, _ = run(capsys, "average", "--n", "2")
    assert json.loads(out)["quantities"]["ball1"]["delta"] == "1/4"


def test_anticodes(capsys):
    code, out, _ = run(capsys, "anticodes", "--n", "5", "--t", "1")
    assert out == "max=6 min=4 count=78\n"
    code, out, _ = run(capsys, "anticodes", "--n", "2", "--list", "--format", "json")
    doc = json.loads(out)
    assert doc["count"] == len(doc["anticodes"]) == 2


def test_check_code(capsys, tmp_path):
    p = tmp_path / "c.txt"
    p.write_text("4 2\n0000\n1111\n")
    code, out, _ = run(capsys, "check-code", "--file", str(p), "--t-del", "1", "--t-ins", "1", "--format", "json")
    doc = json.loads(out)
    assert code == 0
    assert doc["del_ins_correcting"] and doc["deletion_correcting"] and doc["insertion_correcting"]
    assert doc["min_fll_distance"] == 4 and doc["first_violating_pair"] is None


def test_verify_exit_and_out_file(capsys, tmp_path):
    out_path = tmp_path / "r.json"
    code, out, _ = run(capsys, "verify", "average", "--n", "3", "--format", "json", "--out", str(out_path))
    assert code == 0 and out == ""
    doc = json.loads(out_path.read_text())
    assert doc["suite"] == "average"
    assert {c["status"] for c in doc["checks"]} == {"pass", "documented-delta"}


def test_verify_csv(capsys):
    code, out, _ = run(capsys, "verify", "intersections", "--n-max", "4", "--format", "csv")
    assert out.splitlines()[0] == "name,expected,actual,status"


def test_verify_param_passthrough(capsys):
    code, out, _ = run(capsys, "verify", "codes", "--n-max", "3", "--trials", "5", "--param", "random_n_max=4",
                       "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["seed"] == 0 and doc["parameters"]["random_n_max"] == 4


@pytest.mark.parametrize("argv", [
    ["dist", "012", "01"],
    ["dist", "3", "0", "--m", "3"],
    ["ball", "--center", "0" * 30],
    ["extremes", "--n", "30", "--exhaustive"],
    ["average"],
    ["verify", "codes", "--param", "oops"],
    ["check-code", "--file", "/nonexistent/code.txt"],
])
def test_usage_errors_exit_two(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2 and err.startswith("fll: ")


def test_capacity_message(capsys):
    code, _, err = run(capsys, "ball", "--center", "0" * 30)
    assert "capacity exceeded" in err and "exceeds cap" in err


def test_argparse_errors_exit_two():
    with pytest.raises(SystemExit) as exc:
        main(["verify", "no-such-suite"])
    assert exc.value.code == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "fllmetric.cli", "dist", "01", "10"],
                          capture_output=True, text=True, check=True)
    assert proc.stdout == "llcs=1 distance=1\n"


def test_verify_failing_check_exits_one(capsys, monkeypatch):
    from fllmetric import suites
    from fllmetric.report import Check

    monkeypatch.setitem(suites.SUITES, "metric-axioms", lambda params, workers, max_space: [Check.equal("x", 1, 2)])
    code, out, _ = run(capsys, "verify", "metric-axioms")
    assert code == 1 and "[FAIL] x" in out
