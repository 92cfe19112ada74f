import json
import subprocess
import sys

import pytest

from clusterwb.cli import EXIT_INPUT, EXIT_MISMATCH, EXIT_OK, data_path, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_mutate_text(capsys):
    code, out, _ = run(capsys, "mutate", "-q", "a3cyclic", "-w", "1")
    assert code == EXIT_OK
    assert "y'1 = (y2 + y3) / y1" in out
    assert out.splitlines()[0] == "word: 1"


def test_mutate_json(capsys):
    code, out, _ = run(capsys, "mutate", "-q", "a3cyclic", "-w", "1,2", "--json")
    data = json.loads(out)
    assert code == EXIT_OK and data["word"] == [1, 2] and data["n"] == 3
    assert data["matrix"] == [[-r for r in row] for row in zip(*data["matrix"])]


def test_enumerate_with_golden(capsys, tmp_path):
    gold = data_path("golden", "a3cyclic.txt")
    code, out, _ = run(capsys, "enumerate", "-q", "a3cyclic", "--closure", "--golden", str(gold))
    assert code == EXIT_OK and "golden: PASS" in out and "clusters: 14" in out
    bad = tmp_path / "bad.txt"
    bad.write_text("y1\n(y1 + 1) / y2\n")
    code, out, _ = run(capsys, "enumerate", "-q", "a3cyclic", "--closure", "--golden", str(bad))
    assert code == EXIT_MISMATCH and "missing (y1 + 1) / y2" in out


def test_enumerate_open_golden_is_containment(capsys):
    gold = data_path("golden", "a2tilde.txt")
    code, out, _ = run(capsys, "enumerate", "-q", "a2tilde-gamma", "--depth", "4", "--golden", str(gold))
    assert code == EXIT_OK and "closed: no (depth 4)" in out


def test_enumerate_closure_refused(capsys):
    code, _, err = run(capsys, "enumerate", "-q", "kronecker", "--closure")
    assert code == EXIT_INPUT and "closure refused" in err


@pytest.mark.parametrize(
    "argv",
    [
        ["mutate", "-q", "no-such-quiver"],
        ["mutate", "-q", "a2", "-w", "3"],
        ["mutate", "-q", "a2", "-w", "x"],
        ["enumerate", "-q", "a2", "--depth", "-1"],
        ["verify", "main3", "-q", "a2tilde-q"],
        ["verify", "main2", "-q", "a2tilde-q", "--tc-word", "9"],
        ["frobnicate"],
    ],
)
def test_input_errors(capsys, argv):
    assert run(capsys, *argv)[0] == EXIT_INPUT


def test_bad_quiver_file(capsys, tmp_path):
    p = tmp_path / "bad.quiver"
    p.write_text("2\n1 2 1\n2 1 1\n")
    code, _, err = run(capsys, "mutate", "-q", str(p))
    assert code == EXIT_INPUT and "2-cycle" in err


def test_verify_main3(capsys):
    code, out, _ = run(capsys, "verify", "main3", "-q", "a3cyclic")
    assert code == EXIT_OK and "#verdicts: 126" in out and out.rstrip().endswith("PASS")


def test_verify_main2_json(capsys):
    code, out, _ = run(capsys, "verify", "main2", "-q", "a2tilde-q", "--tc-word", "2", "--depth", "4", "--json")
    rep = json.loads(out)
    assert code == EXIT_OK and rep["pass"]
    assert set(rep) >= {"theorem", "instance", "depth", "verdicts", "witnesses"}
    assert rep["verdicts"]["b"] is False and rep["verdicts"]["c"] is False


@pytest.mark.parametrize("theorem", ["t-all", "oldc3", "lcm"])
def test_verify_edge_suites(capsys, theorem):
    code, out, _ = run(capsys, "verify", theorem, "-q", "a2tilde-q", "--tc-word", "2", "--depth", "3")
    assert code == EXIT_OK and out.rstrip().endswith("PASS")


def test_examples(capsys):
    code, out, _ = run(capsys, "example", "a3")
    assert code == EXIT_OK and out.rstrip().endswith("PASS")
    code, out, _ = run(capsys, "example", "a2tilde", "--emit-f")
    assert code == EXIT_OK
    assert "f = y1^4 + y1^3*y3 + 2*y1^2*y2 + y1*y2*y3 + y2*y3^2 + y2^2" in out
    assert "dim End_C(M) = 2" in out


def test_module_entry_point_is_deterministic():
    cmd = [sys.executable, "-m", "clusterwb", "enumerate", "-q", "a2tilde-q", "--depth", "3", "--json"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and json.loads(a)["clusters"] > 0
