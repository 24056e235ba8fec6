import csv
import io
import json
import subprocess
import sys

import pytest

from quasicount import cli
from quasicount.cli import main

from .conftest import FIRST_40


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_qc_all_methods(capsys):
    code, out, _ = run(capsys, "qc", "8", "--method", "all")
    assert code == 0
    assert "QC(8) by oracle = 3" in out and "all methods agree" in out


def test_qc_quiet(capsys):
    assert run(capsys, "--quiet", "qc", "12") == (0, "5\n", "")


def test_qc_trivial_group(capsys):
    code, out, _ = run(capsys, "qc", "1")
    assert code == 0 and "QC(1) by sum    = 0" in out


def test_qc_json(capsys):
    code, out, _ = run(capsys, "qc", "7", "--method", "all", "--format", "json")
    obj = json.loads(out)
    assert code == 0
    assert obj["qc_sum"] == obj["qc_closed"] == obj["oracle"] == "2"
    assert obj["consistent"] is True
    assert obj["signatures"][0]["periods"] == ["7", "7", "7"]


def test_qc_csv_has_total_row(capsys):
    _, out, _ = run(capsys, "qc", "12", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    sig_rows = [r for r in rows if r["record"] == "signature"]
    total = [r for r in rows if r["record"] == "total"]
    assert sum(int(r["t_value"]) for r in sig_rows) == 5
    assert total[0]["qc_sum"] == "5"


def test_qc_inconsistency_exit_code(capsys, monkeypatch):
    real = cli.build_report

    def broken(n, closed=True, oracle=False):
        report = real(n, closed, oracle)
        report.qc_closed = report.qc_sum + 1
        return report

    monkeypatch.setattr(cli, "build_report", broken)
    code, out, _ = run(capsys, "qc", "9", "--method", "all")
    assert code == 2 and "DISAGREE" in out


def test_range_single(capsys):
    code, out, _ = run(capsys, "range", "5", "5")
    assert code == 0
    assert out.splitlines() == ["n,qc,r_cn,num_signatures,min_genus,max_genus", "5,1,6,1,2,2"]


def test_range_first_40(capsys):
    _, out, _ = run(capsys, "range", "1", "40")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [int(r["qc"]) for r in rows] == FIRST_40
    assert rows[0]["min_genus"] == ""


def test_range_parallel_matches_serial(capsys):
    _, serial, _ = run(capsys, "range", "1", "200")
    _, parallel, _ = run(capsys, "range", "1", "200", "--jobs", "2")
    assert serial == parallel


def test_range_json(capsys):
    _, out, _ = run(capsys, "range", "1", "2", "--format", "json")
    obj = json.loads(out)
    assert obj[0] == {"n": "1", "qc": "0", "r_cn": "1", "num_signatures": "0"}


def test_signatures(capsys):
    code, out, _ = run(capsys, "signatures", "8")
    assert code == 0 and "(2,8,8)" in out and "(4,8,8)" in out
    _, out, _ = run(capsys, "signatures", "8", "--format", "csv")
    assert out.splitlines()[1:] == ["2 8 8,2", "4 8 8,3"]


def test_tvalue(capsys):
    code, out, _ = run(capsys, "tvalue", "7", "7", "7", "7")
    assert code == 0 and "T: 2" in out and "AllEqual" in out
    _, out, _ = run(capsys, "tvalue", "7", "7", "7", "7", "--format", "json")
    assert json.loads(out)["tau2"] == "2"


def test_tvalue_rejects_inadmissible(capsys):
    code, _, err = run(capsys, "tvalue", "8", "8", "8", "8")
    assert code == 1 and "not an admissible" in err


def test_dessins(capsys):
    assert run(capsys, "dessins", "7") == (0, "8\n", "")
    code, out, _ = run(capsys, "dessins", "12", "--oracle")
    assert code == 0 and "(oracle" in out


def test_lloyd(capsys):
    code, out, _ = run(capsys, "lloyd", "7", "--format", "json")
    obj = json.loads(out)
    assert code == 0 and obj["coefficients"][:4] == ["1", "0", "1", "2"]
    assert obj["x3_matches_qc"] is True
    assert run(capsys, "lloyd", "9")[0] == 1


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--suites", "recursions", "corollary",
                       "--n-max", "300", "--format", "json")
    obj = json.loads(out)
    assert code == 0 and obj["passed"]
    assert set(obj["suites"]) == {"recursions", "corollary"}
    assert obj["suites"]["recursions"]["by_label"]["5.6"]["total"] > 0


@pytest.mark.parametrize("argv", [
    ["qc", "0"],
    ["qc", "x"],
    ["range", "5", "3"],
    ["bogus"],
    ["verify", "--suites", "recursions", "--n-max", "4"],
])
def test_usage_errors_exit_1(capsys, argv):
    with pytest.raises(SystemExit) as info:
        code = main(argv)
        raise SystemExit(code)
    assert info.value.code == 1


def test_oracle_bound_env(capsys, monkeypatch):
    monkeypatch.setenv("QUASICOUNT_ORACLE_MAX", "20")
    code, _, err = run(capsys, "qc", "21", "--method", "oracle")
    assert code == 1 and "oracle bound" in err
    assert run(capsys, "qc", "20", "--method", "oracle", "--quiet")[0] == 0


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "quasicount", "--quiet", "qc", "24"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout == "11\n"
