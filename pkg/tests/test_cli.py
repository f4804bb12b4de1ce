import io
import json
import subprocess
import sys

import pytest

from weyl_toric.cli import main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_poincare_closed():
    assert run("poincare", "--n", "2", "--method", "closed") == (0, "6t^2 + 5t + 1\n")


@pytest.mark.parametrize("method", ["macmeikan", "points", "tutte"])
def test_poincare_each_method(method):
    code, out = run("poincare", "--n", "3", "--method", method)
    assert code == 0 and out.strip() == "24t^3 + 26t^2 + 9t + 1"


def test_poincare_all_text_and_json():
    code, out = run("poincare", "--n", "1", "--method", "all")
    assert code == 0 and "agree" in out
    code, out = run("poincare", "--n", "2", "--method", "all", "--format", "json")
    doc = json.loads(out)
    assert code == 0
    assert doc == {
        "n": 2,
        "closed_form": "6t^2 + 5t + 1",
        "macmeikan": "6t^2 + 5t + 1",
        "point_count": "6t^2 + 5t + 1",
        "tutte": "6t^2 + 5t + 1",
        "agree": True,
        "euler_at_1": 12,
    }


def test_poincare_caps(capsys):
    assert run("poincare", "--n", "9", "--method", "tutte")[0] == 1
    err = capsys.readouterr().err
    assert "6" in err and "--unsafe-n" in err
    assert run("poincare", "--n", "9", "--method", "closed")[0] == 1
    assert run("poincare", "--n", "8", "--method", "closed")[0] == 0
    assert run("poincare", "--n", "0")[0] == 1
    code, out = run("poincare", "--n", "9", "--method", "closed", "--unsafe-n")
    assert code == 0 and out.startswith("3628800t^9")


def test_usage_errors():
    assert run()[0] == 1
    assert run("poincare", "--n", "2", "--method", "bogus")[0] == 1
    assert run("poset", "--n", "2", "--format", "xml")[0] == 1


def test_character_text():
    code, out = run("character", "--n", "2")
    assert code == 0
    assert "theorem1: pass" in out
    assert all(c in out for c in ("(3)", "(2,1)", "(1,1,1)"))
    assert "2(n-1)!" in out


def test_character_n1():
    code, out = run("character", "--n", "1")
    assert code == 0 and "(2)" in out and "(1,1)" in out and "pass" in out


def test_character_json_schema():
    code, out = run("character", "--n", "2", "--format", "json")
    doc = json.loads(out)
    assert code == 0
    assert set(doc) == {"n", "classes", "total", "regular", "induced", "theorem1", "irreducible_multiplicities"}
    assert doc["classes"] == ["(3)", "(2,1)", "(1,1,1)"]
    assert doc["total"] == [0, 2, 12]
    assert doc["regular"] == [0, 0, 6]
    assert doc["induced"] == [0, 1, 3]
    assert doc["theorem1"] is True
    assert doc["irreducible_multiplicities"] == {"(3)": 3, "(2,1)": 4, "(1,1,1)": 1}


def test_character_range():
    assert run("character", "--n", "8")[0] == 1


def test_poset_dot_file(tmp_path):
    path = tmp_path / "a2.dot"
    code, out = run("poset", "--n", "2", "--format", "dot", "-o", str(path))
    assert code == 0
    assert "5 elements, all saturated" in out
    text = path.read_text()
    assert text.count("[label=") == 5 and text.count("->") == 6


def test_poset_json_stdout(capsys):
    code, out = run("poset", "--n", "1", "--format", "json", "-o", "-")
    assert code == 0
    doc = json.loads(out)
    assert len(doc["elements"]) == 2 and doc["covers"] == [[0, 1]]
    assert "2 elements" in capsys.readouterr().err


def test_poset_default_json_n3(tmp_path):
    code, out = run("poset", "--n", "3", "-o", str(tmp_path / "p.json"))
    assert code == 0 and out.strip() == "15 elements, all saturated"
    assert len(json.loads((tmp_path / "p.json").read_text())["elements"]) == 15


def test_poset_unwritable(tmp_path):
    assert run("poset", "--n", "2", "-o", str(tmp_path / "missing" / "x.json"))[0] == 1


@pytest.mark.parametrize("max_n", [1, 3])
def test_verify(max_n):
    code, out = run("verify", "--max-n", str(max_n))
    assert code == 0
    lines = out.strip().splitlines()
    assert all(line.startswith("PASS") for line in lines)
    assert len(lines) == 2 * max_n + 3 * min(max_n, 3)


def test_verify_range():
    assert run("verify", "--max-n", "7")[0] == 1


def test_deterministic_output():
    assert run("poset", "--n", "3", "-o", "-") == run("poset", "--n", "3", "-o", "-")
    assert run("character", "--n", "4", "--format", "json") == run("character", "--n", "4", "--format", "json")


def test_threads_do_not_change_output(monkeypatch):
    base = run("poincare", "--n", "4", "--method", "tutte")
    assert run("poincare", "--n", "4", "--method", "tutte", "--threads", "2") == base
    monkeypatch.setenv("WEYL_TORIC_THREADS", "2")
    assert run("poincare", "--n", "4", "--method", "tutte") == base


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "weyl_toric", "poincare", "--n", "2"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0 and proc.stdout == "6t^2 + 5t + 1\n"
