import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from conftest import PAPER_X, PAPER_Y
from utunify.cli import run_cli

DATA = Path(__file__).parent / "data"


def run(*args, stdin=""):
    out, err = io.StringIO(), io.StringIO()
    code = run_cli(list(args), io.StringIO(stdin), out, err)
    return code, out.getvalue(), err.getvalue()


def test_paper_example_text():
    code, out, err = run(PAPER_X, PAPER_Y)
    assert code == 0
    assert out == "Y=f(f(a))\nX=f(a)\nW=f(a)\nZ=f(f(a))\n"
    assert err == ""


def test_clash():
    assert run("f(a)", "f(b)") == (1, "fail: clash\n", "")


def test_parse_error():
    code, out, err = run("f(X", "a")
    assert code == 2 and out == ""
    assert "term x" in err and "offset 3" in err


def test_parse_error_in_second_term():
    code, _, err = run("a", "f(,)")
    assert code == 2 and "term y" in err and "offset 2" in err


def test_table_dump():
    code, out, _ = run("--table", PAPER_X, PAPER_Y)
    golden = (DATA / "paper_table.tsv").read_text()
    assert code == 0
    assert out == golden + "Y=f(f(a))\nX=f(a)\nW=f(a)\nZ=f(f(a))\n"


def test_json_success():
    code, out, _ = run("--json", PAPER_X, PAPER_Y)
    doc = json.loads(out)
    assert code == 0
    assert doc == {"result": "success",
                   "mgu": {"Y": "f(f(a))", "X": "f(a)", "W": "f(a)", "Z": "f(f(a))"},
                   "truncated": False}
    assert list(doc["mgu"]) == ["Y", "X", "W", "Z"]


def test_json_with_table():
    code, out, _ = run("--json", "--table", PAPER_X, PAPER_Y)
    doc = json.loads(out)
    assert len(doc["table"]) == 12
    assert doc["table"][11]["components"] == [9, 10, 8]


def test_json_failure():
    code, out, _ = run("--json", "f(a)", "f(b)")
    doc = json.loads(out)
    assert code == 1
    assert doc["result"] == "fail" and doc["cause"] == "clash"
    assert "table" not in doc


def test_cyclic_guarded_write():
    code, out, _ = run("--depth", "3", "f(X)", "X")
    assert (code, out) == (0, "X=f(f(f(...)))\n")
    code, out, _ = run("--json", "f(X)", "X")
    doc = json.loads(out)
    assert doc["truncated"] is True
    assert doc["mgu"]["X"].count("f(") == 10


def test_occur_check_flag():
    assert run("--occur-check", "f(X)", "X") == (1, "fail: occur-check\n", "")
    doc = json.loads(run("--json", "--occur-check", "f(X)", "X")[1])
    assert doc["cause"] == "occur-check"


def test_stdin_terms():
    code, out, _ = run("-", "-", stdin=f"{PAPER_X}\n{PAPER_Y}\n")
    assert code == 0 and out.startswith("Y=f(f(a))\n")
    code, out, _ = run("f(X)", "-", stdin="f(a)\n")
    assert (code, out) == (0, "X=a\n")


def test_stdin_missing():
    code, _, err = run("-", "-", stdin="f(a)\n")
    assert code == 2 and "standard input" in err


@pytest.mark.parametrize("args", [
    [], ["a"], ["a", "b", "c"], ["--depth", "0", "a", "a"], ["--depth", "x", "a", "a"], ["--bogus", "a", "a"],
])
def test_usage_errors(args):
    code, out, err = run(*args)
    assert code == 2 and "usage" in err


def test_help():
    code, out, _ = run("--help")
    assert code == 0 and "ut-unify" in out


def test_empty_substitution_prints_nothing():
    assert run("f(a)", "f(a)") == (0, "", "")


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "utunify", "f(X)", "f(a)"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "X=a\n"
