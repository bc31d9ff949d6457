from __future__ import annotations

import io
import json
import subprocess
import sys

import pytest

from symsat.cli import EXIT_NO_SOLUTION, EXIT_OK, EXIT_USAGE, EXIT_VERIFY, run
from symsat.graceful import DW10, DwGraph, DwLabelling, verify_graceful
from symsat.magic import is_magic
from symsat.vdw import Certificate, verify_certificate


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), out=out)
    return code, out.getvalue()


def call_json(*argv):
    code, text = call(*argv, "--json")
    return code, json.loads(text)


@pytest.fixture
def w23(tmp_path):
    path = tmp_path / "cert_w23_8.txt"
    path.write_text("# two blocks\n2 8 3\n1 4 5 8\n2 3 6 7\n")
    return path


def test_magic_count_order_three():
    code, rep = call_json("magic", "count", "--n", "3")
    assert code == EXIT_OK
    assert rep["outcome"] == {"solutions": 8, "classes": 1}
    assert rep["verdict"] is True


def test_magic_count_with_breaking():
    code, rep = call_json("magic", "count", "--n", "3", "--sb")
    assert code == EXIT_OK and rep["outcome"]["solutions"] == 1


def test_magic_count_refuses_large_orders():
    assert call("magic", "count", "--n", "5")[0] == EXIT_USAGE


def test_magic_solve_round_trip():
    code, rep = call_json("magic", "solve", "--n", "5", "--internal", "auto")
    assert code == EXIT_OK and is_magic(rep["outcome"]["square"])


def test_magic_solve_without_solution():
    code, rep = call_json("magic", "solve", "--n", "3", "--internal", "printed_odd")
    assert code == EXIT_NO_SOLUTION and rep["outcome"] is None


def test_vdw_verify(w23):
    assert call("vdw", "verify", str(w23), "--l", "3")[0] == EXIT_OK
    assert call("vdw", "verify", str(w23))[0] == EXIT_OK


def test_vdw_verify_finds_progression(w23):
    code, rep = call_json("vdw", "verify", str(w23), "--l", "2")
    assert code == EXIT_VERIFY and rep["extra"]["witness"] == {"block": 0, "start": 4, "step": 1}


def test_vdw_verify_malformed(tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("2 8 3\n1 4 5\n2 3 6 7\n")
    code, rep = call_json("vdw", "verify", str(path))
    assert code == EXIT_VERIFY and "no block" in rep["message"]


def test_vdw_verify_missing_file(tmp_path):
    assert call("vdw", "verify", str(tmp_path / "nope.txt"))[0] == EXIT_USAGE


def test_vdw_construct_writes_file(tmp_path):
    out = tmp_path / "w53.txt"
    code, rep = call_json("vdw", "construct", "--k", "5", "--l", "3", "--n", "170", "--out", str(out))
    assert code == EXIT_OK and rep["extra"] == {"m": 85, "p": 17, "r": 3}
    assert call("vdw", "verify", str(out))[0] == EXIT_OK


def test_vdw_construct_bad_n():
    assert call("vdw", "construct", "--k", "2", "--l", "4", "--n", "31")[0] == EXIT_USAGE


def test_vdw_construct_failure():
    assert call("vdw", "construct", "--k", "3", "--l", "3", "--n", "14")[0] == EXIT_NO_SOLUTION


def test_vdw_search_report_reverifies():
    code, rep = call_json("vdw", "search", "--k", "2", "--l", "4", "--from", "30", "--to", "34")
    assert code == EXIT_OK
    o = rep["outcome"]
    cert = Certificate(o["n"], o["k"], tuple(frozenset(b) for b in o["blocks"]))
    assert cert.n == 34 and verify_certificate(cert, o["l"]) is rep["verdict"] is True


def test_parallel_output_identical():
    args = ("vdw", "construct", "--k", "4", "--l", "3", "--n", "74")
    assert call_json(*args)[1]["outcome"] == call_json(*args, "--parallel", "2")[1]["outcome"]


def test_dw_verify(tmp_path):
    good = tmp_path / "dw10.json"
    good.write_text(DW10.to_json())
    assert call("dw", "verify", str(good))[0] == EXIT_OK
    bad = tmp_path / "bad.json"
    bad.write_text(DwLabelling(16, (1, 1, 6, 9), (2, 7, 3, 14)).to_json())
    assert call("dw", "verify", str(bad))[0] == EXIT_VERIFY
    junk = tmp_path / "junk.json"
    junk.write_text('{"hub": 3}')
    assert call("dw", "verify", str(junk))[0] == EXIT_VERIFY


def test_dw_solve_round_trip(tmp_path):
    out = tmp_path / "dw8.json"
    code, rep = call_json("dw", "solve", "--n", "8", "--internal", "--out", str(out))
    assert code == EXIT_OK
    lab = DwLabelling.from_json(json.dumps(rep["outcome"]))
    assert verify_graceful(DwGraph(8), lab) is rep["verdict"] is True
    assert DwLabelling.from_json(out.read_text()) == lab


def test_dw_solve_none():
    assert call("dw", "solve", "--n", "3")[0] == EXIT_NO_SOLUTION


def test_time_limit_reports_no_solution(monkeypatch):
    monkeypatch.setenv("SYMSAT_TIME_LIMIT_MS", "0")
    code, rep = call_json("dw", "solve", "--n", "9", "--sb")
    assert code == EXIT_NO_SOLUTION and "time limit" in rep["message"]


@pytest.mark.parametrize("argv", [[], ["magic"], ["bogus"], ["vdw", "search", "--k", "2"],
                                  ["dw", "solve", "--n", "4", "--parallel", "0"]])
def test_usage_errors(argv):
    assert call(*argv)[0] == EXIT_USAGE


def test_text_report():
    code, text = call("magic", "count", "--n", "3")
    assert code == EXIT_OK and "8 squares in 1 classes" in text and "verified" in text


def test_module_entry_point(w23):
    proc = subprocess.run([sys.executable, "-m", "symsat", "vdw", "verify", str(w23)], capture_output=True, text=True)
    assert proc.returncode == 0 and "W(2,3) > 8" in proc.stdout
