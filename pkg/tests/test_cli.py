import contextlib
import io
import json
import subprocess
import sys

import carlitz.cli as climod
from carlitz.cli import main
from carlitz.cmod import carlitz_factorial
from carlitz.cw import CWReport, CWRow
from carlitz.fq import Fq
from carlitz.poly import poly_parse, poly_to_str
from carlitz.ratfun import base_field


def run(argv):
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        rc = main(argv)
    return rc, out.getvalue(), err.getvalue()


def test_cwverify_pinned_example():
    rc, out, err = run(["cwverify", "--q", "2", "--a", "T", "--b", "1",
                        "--kmax", "8"])
    assert rc == 0 and err == ""
    doc = json.loads(out)
    assert doc["q"] == 2 and doc["a"] == "T" and doc["b"] == "1"
    assert len(doc["rows"]) == 8
    first = doc["rows"][0]
    assert first["k"] == 1 and first["lhs"] == "1/T" and first["equal"]
    assert all(r["equal"] for r in doc["rows"])


def test_bc_pinned_example():
    rc, out, err = run(["bc", "--q", "3", "--n", "7"])
    assert rc == 0
    doc = json.loads(out)
    assert doc["rows"][7] == {"n": 7, "bc": "0", "factorial": doc["rows"][7]["factorial"]}
    rc, out, err = run(["bc", "--q", "3", "--n", "7", "--format", "csv"])
    assert rc == 0
    lines = out.splitlines()
    assert lines[0] == "n,bc,factorial"
    assert len(lines) == 9
    assert lines[8].startswith("7,0,")
    assert out.endswith("\n")


def test_stickelberger_pinned_example():
    rc, out, err = run(["stickelberger", "--q", "2", "--pi", "T^2+T+1",
                        "--level", "1", "--S", "inf", "--T", "T",
                        "--udeg", "12"])
    assert rc == 0 and err == ""
    doc = json.loads(out)
    assert doc["pi"] == "T^2+T+1" and doc["level"] == 1
    assert doc["S"] == ["T^2+T+1", "inf"] and doc["T"] == ["T"]
    assert [c["u"] for c in doc["coeffs"]] == [0, 1, 2]
    assert doc["coeffs"][0]["terms"] == [{"rep": "1", "c": 1}]


def test_json_is_indented_with_trailing_newline():
    rc, out, _ = run(["factorial", "--q", "2", "--n", "3"])
    assert rc == 0
    assert out.startswith("{\n  \"q\": 2")
    assert out.endswith("}\n")
    assert json.loads(out)["value"] == poly_to_str(
        carlitz_factorial(3, Fq.get(2)))


def test_emitted_polynomials_reparse():
    rc, out, _ = run(["torsion", "--q", "2", "--pi", "T", "--n", "2"])
    doc = json.loads(out)
    f2 = Fq.get(2)
    for term in doc["monomials"]:
        c = poly_parse(term["c"], f2)
        assert poly_to_str(c) == term["c"]
    rc, out, _ = run(["zetaneg", "--q", "3", "--k", "5"])
    f3 = Fq.get(3)
    for row in json.loads(out)["rows"]:
        assert poly_to_str(poly_parse(row["value"], f3)) == row["value"]


def test_zetapos_and_vadic_payloads():
    rc, out, _ = run(["zetapos", "--q", "2", "--k", "2", "--dmax", "2",
                      "--prec", "6"])
    assert rc == 0
    doc = json.loads(out)
    assert doc["var"] == "t" and doc["terms"][0] == {"e": 0, "c": 1}
    rc, out, _ = run(["zetavadic", "--q", "3", "--pi", "T", "--k", "3"])
    assert rc == 0
    assert json.loads(out)["value"] == "2*T^3+1"


def test_charval_and_project_payloads():
    base = ["--q", "2", "--pi", "T^2+T+1", "--S", "inf", "--T", "T"]
    rc, out, _ = run(["charval"] + base + ["--level", "1", "--order", "3",
                                           "--gen", "T=1"])
    assert rc == 0
    doc = json.loads(out)
    assert doc["order"] == 3 and doc["gens"] == [{"g": "T", "e": 1}]
    assert [v["u"] for v in doc["values"]] == [0, 1, 2]
    assert doc["values"][0]["c"] == [1, 0]
    rc, out2, _ = run(["project"] + base + ["--level", "2", "--m", "1"])
    assert rc == 0
    rc, out1, _ = run(["stickelberger"] + base + ["--level", "1"])
    assert json.loads(out2)["coeffs"] == json.loads(out1)["coeffs"]


def test_okada_csv_and_json():
    rc, out, _ = run(["okada", "--q", "2", "--pi", "T^3+T+1"])
    assert rc == 0
    doc = json.loads(out)
    assert doc["kmax"] == 6
    rc, out, _ = run(["okada", "--q", "2", "--pi", "T^3+T+1",
                      "--format", "csv"])
    assert rc == 0
    assert out.splitlines()[0] == "k,flag"


def test_out_flag_writes_file(tmp_path):
    target = tmp_path / "phi.json"
    rc, out, _ = run(["phi", "--q", "2", "--a", "T^2+T", "--out", str(target)])
    assert rc == 0 and out == ""
    rc, expect, _ = run(["phi", "--q", "2", "--a", "T^2+T"])
    assert target.read_text() == expect


def test_runs_are_deterministic():
    invocations = [
        ["phi", "--q", "3", "--a", "T^2+2"],
        ["exp", "--q", "2", "--prec", "9"],
        ["bc", "--q", "3", "--n", "6", "--format", "csv"],
        ["zetapos", "--q", "3", "--k", "2", "--dmax", "1", "--prec", "4"],
        ["stickelberger", "--q", "2", "--pi", "T^2+T+1", "--level", "1",
         "--S", "inf", "--T", "T"],
        ["colemancheck", "--q", "2"],
    ]
    for argv in invocations:
        rc1, out1, _ = run(argv)
        rc2, out2, _ = run(argv)
        assert rc1 == rc2 == 0
        assert out1 == out2


def test_thread_count_does_not_change_output():
    for argv in (
        ["cwverify", "--q", "2", "--a", "T+1", "--b", "1", "--kmax", "6"],
        ["zetaneg", "--q", "3", "--k", "6"],
        ["stickelberger", "--q", "2", "--pi", "T^2+T+1", "--level", "1",
         "--S", "inf", "--T", "T"],
    ):
        rc1, out1, _ = run(argv + ["--threads", "1"])
        rc4, out4, _ = run(argv + ["--threads", "4"])
        assert rc1 == rc4 == 0
        assert out1 == out4


def test_verification_failure_exit_code(monkeypatch):
    f2 = Fq.get(2)
    F = base_field(f2)
    rep = CWReport(q=2, a=poly_parse("T", f2), b=poly_parse("1", f2),
                   rows=[CWRow(1, F.one, F.zero, False)])
    monkeypatch.setattr(climod, "cw_verify", lambda *a, **k: rep)
    rc, out, err = run(["cwverify", "--q", "2", "--a", "T", "--b", "1",
                        "--kmax", "1"])
    assert rc == 1
    assert err == "error: verification failed\n"
    assert json.loads(out)["rows"][0]["equal"] is False


def test_usage_errors_exit_2():
    cases = [
        ["bc", "--q", "2"],                                   # missing --n
        ["phi", "--q", "2", "--a", "T+%"],                    # parse error
        ["phi", "--q", "2", "--a", "T", "--format", "csv"],   # csv not flat
        ["bc", "--q", "2", "--n", "3", "--threads", "0"],
        ["stickelberger", "--q", "2", "--pi", "T^2+T+1", "--level", "1",
         "--T", "T"],                                         # no --S inf
        ["zetapos", "--q", "2", "--k", "2", "--dmax", "1", "--prec", "5"],
        ["nosuchcmd", "--q", "2"],
        ["bc", "--q", "6", "--n", "2"],                       # bad field size
        ["charval", "--q", "2", "--pi", "T^2+T+1", "--level", "1", "--S",
         "inf", "--T", "T", "--order", "3", "--gen", "T"],    # no '='
        ["project", "--q", "2", "--pi", "T^2+T+1", "--level", "1", "--S",
         "inf", "--T", "T", "--m", "2"],                      # m > level
        ["stickelberger", "--q", "4", "--pi", "T", "--level", "1", "--S",
         "inf", "--T", "T+1"],                                # not prime field
        ["minpoly", "--q", "2", "--pi", "T^2+1", "--n", "1"], # reducible pi
    ]
    for argv in cases:
        rc, out, err = run(argv)
        assert rc == 2, argv
        assert err.startswith("error: ") and err.count("\n") == 1, argv


def test_internal_errors_exit_3():
    rc, out, err = run(["stickelberger", "--q", "2", "--pi", "T^2+T+1",
                        "--level", "1", "--S", "inf", "--T", "T",
                        "--udeg", "3"])
    assert rc == 3
    assert err.startswith("error: ") and err.count("\n") == 1
    rc, out, err = run(["stickelberger", "--q", "2", "--pi", "T^2+T+1",
                        "--level", "1", "--S", "inf", "--udeg", "12"])
    assert rc == 3


def test_selftest_subcommand():
    rc, out, err = run(["selftest", "--q", "2"])
    assert rc == 0 and err == ""
    doc = json.loads(out)
    assert doc["ok"] is True
    names = [s["suite"] for s in doc["suites"]]
    assert len(names) == len(set(names)) >= 5
    assert all(s["ok"] for s in doc["suites"])


def test_module_entry_point_matches_inprocess():
    argv = ["cwverify", "--q", "2", "--a", "T", "--b", "1", "--kmax", "4"]
    proc = subprocess.run([sys.executable, "-m", "carlitz"] + argv,
                          capture_output=True, text=True)
    assert proc.returncode == 0
    _, out, _ = run(argv)
    assert proc.stdout == out

    bad = subprocess.run([sys.executable, "-m", "carlitz", "bc", "--q", "2"],
                         capture_output=True, text=True)
    assert bad.returncode == 2
    assert bad.stdout == "" and bad.stderr.startswith("error: ")
