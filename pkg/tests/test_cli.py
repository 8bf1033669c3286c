import io
import json
import subprocess
import sys

import pytest

from forkalg.algebra import import_json
from forkalg.cli import main
from conftest import algebra


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_enumerate_small_block():
    code, text = run("enumerate", "3", "2")
    assert code == 0
    assert [line.split()[0] for line in text.splitlines()[1:4]] == ["v^^", "^v^", "^^v"]
    assert "dim A_3,2 = 28" in text


def test_enumerate_large_block_lists_the_worked_encoding():
    code, text = run("enumerate", "8", "4", "--format", "tsv")
    assert code == 0
    row = next(line for line in text.splitlines() if line.startswith("^^v^vv^v\t"))
    assert row.split("\t")[3:] == ["(0,0,1,3)", "(2,1,1,0)", "(4,3,3,2,2,2,1,1)"]


def test_enumerate_single_weight():
    code, text = run("enumerate", "--n", "1", "--k", "0", "--format", "json")
    data = json.loads(text)
    assert code == 0 and [w["weight"] for w in data["weights"]] == ["v"] and data["basis_size"] == 1


def test_mult_idempotents():
    e = "(lower=^v^ eta=^v^ sigma=1,2 upper=^v^)"
    f = "(lower=v^^ eta=v^^ sigma=1,2 upper=v^^)"
    assert run("mult", e, e) == (0, "1 * " + e + "\n")
    code, text = run("mult", e, f)
    assert code == 0 and text.startswith("0") and "differs" in text
    code, text = run("mult", e, e, "--format", "json")
    assert json.loads(text) == {"terms": [[1, e]], "note": None}


def test_mult_rejects_bad_input():
    assert run("mult", "(lower=^v eta=^v)", "(x)")[0] == 2
    assert run("mult", "(lower=^v^ eta=v^^ sigma=1,2 upper=^v^)", "(lower=^v^ eta=^v^ sigma=1,2 upper=^v^)")[0] == 2


def test_verify_suites():
    code, text = run("verify", "cellular", "3", "2")
    assert code == 0 and "0 failed" in text
    code, text = run("verify", "--suite", "hecke", "--n", "4", "--format", "tsv")
    assert code == 0 and all(line.startswith("pass") for line in text.splitlines()[1:])
    code, text = run("verify", "all", "2")
    assert code == 0


def test_usage_errors():
    assert run("verify", "nonsense", "2")[0] == 2
    assert run("export", "9", "2")[0] == 2
    assert run("enumerate", "3", "5")[0] == 2
    assert run("verify", "polyring", "3", "--n", "4")[0] == 2
    with pytest.raises(SystemExit) as exc:
        run("frobnicate")
    assert exc.value.code == 2


def test_cap_from_environment(monkeypatch):
    monkeypatch.setenv("FORKALG_CAP", "2")
    assert run("export", "3", "1")[0] == 2
    monkeypatch.setenv("FORKALG_CAP", "3")
    assert run("export", "3", "1")[0] == 0


def test_export_round_trip_and_determinism(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert run("export", "3", "2", "--out", str(a))[0] == 0
    assert run("export", "3", "2", "--out", str(b), "--jobs", "2")[0] == 0
    assert a.read_bytes() == b.read_bytes()
    assert import_json(a.read_text()).same_as(algebra(3, 2))
    code, text = run("export", "1", "1")
    assert len(json.loads(text)["basis"]) == 1


def test_matrices_and_tables():
    code, text = run("cartan", "3", "1")
    rows = [line.split("\t") for line in text.splitlines()]
    assert code == 0 and rows[0] == ["", "vv^", "v^v", "^vv"]
    assert rows[1][1] == "1+v^2"
    code, text = run("decomposition", "3", "1")
    assert code == 0 and text.splitlines()[3].split("\t")[1:] == ["0", "0", "1"]
    code, text = run("kl", "3")
    assert code == 0 and text.splitlines()[0] == "w\ty\tcoefficient"
    code, text = run("center", "3", "--format", "json")
    assert code == 0 and [r["status"] for r in json.loads(text)] == ["pass"] * 3


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "forkalg", "enumerate", "2", "1"], capture_output=True, text=True
    )
    assert proc.returncode == 0 and "v^" in proc.stdout
