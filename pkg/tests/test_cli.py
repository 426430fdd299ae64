import json
import subprocess
import sys

import pytest

from concave_rank.cli import run


def call(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_pn(capsys):
    assert call(capsys, "pn", "--n", "5")[:2] == (0, "7\n")
    assert call(capsys, "pn", "--n", "100")[1] == "190569292\n"


def test_rank_table_oracle_rows(capsys):
    code, out, _ = call(capsys, "rank-table", "--max", "2", "--method", "oracle")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "n,m,count"
    assert {"2,0,2", "2,1,1", "2,-1,1"} <= set(lines)


def test_rank_table_methods_identical(capsys):
    outs = {m: call(capsys, "rank-table", "--max", "30", "--method", m)[1] for m in ("genfunc", "prop1", "oracle")}
    assert len(set(outs.values())) == 1
    big = {m: call(capsys, "rank-table", "--max", "200", "--method", m)[1] for m in ("genfunc", "prop1")}
    assert big["genfunc"] == big["prop1"]
    rows = [tuple(map(int, r.split(","))) for r in big["prop1"].splitlines()[1:]]
    assert rows == sorted(rows)


def test_rank_table_oracle_bound(capsys):
    code, _, err = call(capsys, "rank-table", "--max", "41", "--method", "oracle")
    assert code == 2 and "oracle" in err


def test_vd_methods_identical(capsys):
    small = {m: call(capsys, "vd", "--max", "40", "--method", m)[1] for m in ("andrews", "product", "fast")}
    assert len(set(small.values())) == 1
    assert small["fast"].splitlines()[:4] == ["n,vd", "0,1", "1,3", "2,4"]
    big = {m: call(capsys, "vd", "--max", "1000", "--method", m)[1] for m in ("andrews", "fast")}
    assert big["andrews"] == big["fast"]
    assert call(capsys, "vd", "--max", "1000")[1] == big["fast"]


def test_vd_json(capsys):
    code, out, _ = call(capsys, "vd", "--max", "3", "--format", "json")
    assert json.loads(out) == [{"n": 0, "vd": 1}, {"n": 1, "vd": 3}, {"n": 2, "vd": 4}, {"n": 3, "vd": 9}]


def test_rank_table_json_mirrors_csv(capsys):
    csv_out = call(capsys, "rank-table", "--max", "5")[1]
    json_out = json.loads(call(capsys, "rank-table", "--max", "5", "--format", "json")[1])
    rows = [r.split(",") for r in csv_out.splitlines()[1:]]
    assert [[str(r["n"]), str(r["m"]), str(r["count"])] for r in json_out] == rows


def test_output_file_and_determinism(tmp_path, capsys):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    assert run(["rank-table", "--max", "25", "--out", str(a)]) == 0
    assert run(["rank-table", "--max", "25", "--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
    assert b"\r" not in a.read_bytes()
    assert capsys.readouterr().out == ""


def test_io_failure(tmp_path, capsys):
    code, _, err = call(capsys, "pn", "--n", "3", "--out", str(tmp_path / "missing" / "x.txt"))
    assert code == 1 and "I/O error" in err


def test_asym(capsys):
    code, out, _ = call(capsys, "asym", "--n", "10000", "--ell", "10")
    assert code == 0
    assert out.startswith("N=10000 ell=10 weight=10055 exact=")
    assert "estimate=" in out and "rel_err=" in out
    code, out, _ = call(capsys, "asym", "--n", "100", "--ell", "3", "--format", "csv")
    assert out.splitlines()[0] == "N,ell,exact_log,estimate_log,rel_err"


def test_dist(capsys):
    code, out, _ = call(capsys, "dist", "--n", "300", "--grid-step", "0.5")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "x,empirical,gaussian,abs_diff"
    assert len(lines) == 1 + 17
    x, emp, gauss, diff = map(float, lines[-1].split(","))
    assert x == 4 and 0.9999 < emp <= 1 and abs(emp - gauss) == pytest.approx(diff)


@pytest.mark.parametrize(
    "argv",
    [
        ["vd", "--max", "3", "--bogus"],
        ["vd"],
        ["rank-table", "--max", "3", "--method", "nope"],
        ["pn"],
        ["nosuchcommand"],
        ["verify", "--suite", "everything"],
        ["dist", "--n", "300", "--grid-step", "0"],
        ["asym", "--n", "50000", "--ell", "1"],
        ["vd", "--max", "-1"],
    ],
)
def test_usage_errors(argv, capsys):
    assert run(argv) == 2


def test_verify_identities(capsys):
    code, out, _ = call(capsys, "verify", "--suite", "identities", "--max", "30")
    assert code == 0
    assert "FAIL" not in out and out.rstrip().endswith("checks passed")


def test_verify_failure_exit_code(monkeypatch, capsys):
    import concave_rank.cli as cli
    from concave_rank.verify import Check

    monkeypatch.setattr(cli, "run_suite", lambda name, nmax: [Check("x", True), Check("y", False)])
    code, out, _ = call(capsys, "verify", "--suite", "oracle")
    assert code == 1 and "[FAIL] y" in out


def test_module_entry_point():
    res = subprocess.run(
        [sys.executable, "-m", "concave_rank", "pn", "--n", "10"], capture_output=True, text=True
    )
    assert res.returncode == 0 and res.stdout == "42\n"
