import json
import subprocess
import sys
from pathlib import Path

import pytest

from invchev.cli import main

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_expand_sl2(capsys):
    code, out, _ = run(capsys, "expand", "--type", "A1", "--weight", "eps:1", "--elt", "1")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("# ") and "y_word=[1]" in lines[0]
    assert sorted(lines[1:]) == sorted(["(1) [O(1)(-1)]", "(-q) [O(1 t(1))(1)]", "(q) [O(e t(1))(1)]"])


def test_expand_json_golden(capsys):
    code, out, _ = run(capsys, "expand", "--type", "A2", "--weight", "w:1,0", "--elt", "w0", "--format", "json")
    assert code == 0
    assert out == (GOLDEN / "expand_A2_w1_w0.json").read_text()


def test_expand_zero_echoes(capsys):
    code, out, _ = run(capsys, "expand", "--type", "A1", "--weight", "w:0", "--elt", "1",
                       "--translation", "1", "--bundle", "-1")
    assert code == 0
    assert out.strip() == "(1) [O(1 t(1))(-1)]"


def test_expand_general_weight(capsys):
    code, out, _ = run(capsys, "expand", "--type", "A2", "--weight", "w:1,1", "--elt", "e", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["metadata"]["parts"] and data["terms"]


@pytest.mark.parametrize("argv", [
    ["expand", "--type", "B2", "--weight", "w:1,0", "--elt", "e"],
    ["expand", "--type", "A2", "--weight", "w:1", "--elt", "e"],
    ["expand", "--type", "A2", "--weight", "w:a,b", "--elt", "e"],
    ["expand", "--type", "D4", "--weight", "eps:1", "--elt", "e"],
    ["expand", "--type", "E8", "--weight", "w:1,0,0,0,0,0,0,0", "--elt", "e"],
    ["expand", "--type", "A2", "--weight", "w:1,0"],
    ["walks", "--type", "A0", "--weight", "w:1", "--elt", "e"],
    ["verify", "--type", "D4", "--scope", "toda"],
    ["verify", "--type", "A2", "--scope", "nonsense"],
])
def test_usage_errors(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        sys.exit(main(argv))
    assert exc.value.code == 1


def test_verify_a2_all(capsys):
    code, out, _ = run(capsys, "verify", "--type", "A2", "--scope", "all")
    assert code == 0
    rep = json.loads(out)
    assert rep["ok"] and [c["scope"] for c in rep["checks"]] == ["row", "theorems", "toda", "propL"]


def test_verify_toda_a1(capsys):
    assert run(capsys, "verify", "--type", "A1", "--scope", "toda")[0] == 0


def test_verify_d4_sample_deterministic(capsys):
    argv = ["verify", "--type", "D4", "--scope", "row", "--samples", "25", "--seed", "7"]
    code, out1, _ = run(capsys, *argv)
    assert code == 0
    _, out2, _ = run(capsys, *argv, "--jobs", "2")
    assert out1 == out2
    assert json.loads(out1)["checks"][0]["count"] == 25


def test_verify_single_row(capsys):
    code, out, _ = run(capsys, "verify", "--type", "A3", "--scope", "theorems", "--weight", "w:0,1,0",
                       "--elt", "2 1 3")
    assert code == 0 and json.loads(out)["checks"][0]["count"] == 1


def test_verify_mismatch_exit_code(capsys, monkeypatch):
    import invchev.cli as cli
    monkeypatch.setattr(cli, "_theorem_task", lambda t, lam, key: (False, {}))
    assert run(capsys, "verify", "--type", "A1", "--scope", "theorems")[0] == 2


def test_internal_error_exit_code(capsys, monkeypatch):
    import invchev.cli as cli
    from invchev.oracle import NegativeOrderError

    def boom(*a):
        raise NegativeOrderError("forced")
    monkeypatch.setattr(cli, "_row_task", boom)
    code, _, err = run(capsys, "verify", "--type", "A1", "--scope", "row")
    assert code == 3 and "forced" in err


def test_qbg_formats(capsys):
    code, out, _ = run(capsys, "qbg", "--type", "A1")
    assert code == 0 and out == (GOLDEN / "qbg_A1.dot").read_text()
    _, out, _ = run(capsys, "qbg", "--type", "A2", "--format", "json")
    assert json.loads(out) == json.loads((GOLDEN / "qbg_A2.json").read_text())
    _, out, _ = run(capsys, "qbg", "--type", "A3", "--format", "text")
    assert out == (GOLDEN / "qbg_A3.txt").read_text()


def test_walks_counts(capsys):
    _, out, _ = run(capsys, "walks", "--type", "A1", "--weight", "w:1", "--elt", "e", "--format", "json")
    data = json.loads(out)
    assert len(data["walks"]) == 2
    _, out, _ = run(capsys, "walks", "--type", "A1", "--weight", "w:1", "--elt", "1", "--format", "json")
    data = json.loads(out)
    assert len(data["walks"]) == 2
    assert sum(len(w["decorations"]) for w in data["walks"]) == 3


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "invchev", "qbg", "--type", "A1", "--format", "text"],
                       capture_output=True, text=True)
    assert r.returncode == 0 and r.stdout.strip() == "A1: 2 edges (1 Bruhat, 1 quantum)"
