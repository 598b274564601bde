import json
from pathlib import Path

import pytest

from oddarc.chronology import reversed_choice
from oddarc.cli import main

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


@pytest.mark.parametrize("kind", ["odd", "even", "twisted"])
@pytest.mark.parametrize("side", ["a", "b"])
def test_golden_tables(capsys, kind, side):
    code, out = run(capsys, "table", "--n", "2", "--kind", kind, "--side", side)
    assert code == 0
    assert out == (GOLDEN / f"table_{kind}_{side}.txt").read_text()
    code, out = run(capsys, "table", "--n", "2", "--kind", kind, "--side", side, "--format", "json")
    assert out == (GOLDEN / f"table_{kind}_{side}.json").read_text()


def test_output_is_deterministic(capsys):
    first = run(capsys, "center", "--n", "2")
    second = run(capsys, "center", "--n", "2")
    assert first == second and first[0] == 0


def test_enumerate(capsys):
    code, out = run(capsys, "enumerate", "--n", "3")
    assert code == 0 and len(out.splitlines()) == 5


def test_multiply_by_name(capsys):
    code, out = run(capsys, "multiply", "--n", "2", "_b1_a", "_a1_b")
    assert code == 0
    assert json.loads(out)["product"] == [[1, 1, 1, -1], [1, 1, 2, 1]]


def test_usage_errors(capsys):
    assert main(["nonsense"]) == 2
    assert main(["center", "--n", "0"]) == 2
    assert main(["multiply", "--n", "2", "q"]) == 2
    assert main(["twist", "--n", "4"]) == 2
    assert main(["table", "--n", "2", "--choice", "/no/such/file"]) == 2
    capsys.readouterr()


def test_twist_roundtrip(capsys, tmp_path):
    path = tmp_path / "tau.json"
    assert main(["twist", "--n", "2", "--out", str(path)]) == 0
    code, out = run(capsys, "verify-twist", "--n", "2", "--tau", str(path))
    assert code == 0 and json.loads(out)["coboundary"]["ok"]


def test_explicit_twist_fails_off_basis_degrees(capsys, tmp_path):
    path = tmp_path / "tau.json"
    assert main(["twist", "--n", "2", "--explicit", "--out", str(path)]) == 0
    assert run(capsys, "verify-twist", "--n", "2", "--tau", str(path), "--degrees", "even")[0] == 0
    code, out = run(capsys, "verify-twist", "--n", "2", "--tau", str(path))
    assert code == 1 and "witness" in json.loads(out)["coboundary"]


def test_choice_file(capsys, tmp_path):
    path = tmp_path / "choice.json"
    path.write_text(json.dumps(reversed_choice(2).to_json()))
    code, out = run(capsys, "associator", "--n", "2", "--choice", str(path))
    assert code == 0 and json.loads(out)["cocycle"]["ok"]


def test_classify(capsys):
    code, out = run(capsys, "classify", "--n", "2")
    assert code == 0 and json.loads(out)["twisted"]["status"] == "isomorphic"


def test_springer_and_iso(capsys):
    code, out = run(capsys, "springer", "--n", "2", "--relations")
    rep = json.loads(out)
    assert code == 0 and rep["polynomial"] == "1 + 3q^2 + 2q^4"
    assert run(capsys, "verify-iso", "--n", "2")[0] == 0


def test_twisted_centers(capsys):
    code, out = run(capsys, "center", "--n", "2", "--twisted")
    assert code == 0 and json.loads(out)["odd_center_rank"] == {"0": 1, "2": 2, "4": 2}


def test_verify_all_n2(capsys):
    code, out = run(capsys, "verify-all", "--n", "2")
    assert code == 0 and json.loads(out)["ok"]
