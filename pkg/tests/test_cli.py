import io
import json
import subprocess
import sys

import pytest

from cycbrauer.cli import main
from cycbrauer.diagrams import concatenate


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_mul_diagram_pair_symbolic(diagram_pair, tmp_path):
    x, y = diagram_pair
    right = tmp_path / "y.json"
    right.write_text(y.to_json(), encoding="utf-8")
    code, text = run("mul", x.to_json(), f"@{right}", "--m", "6", "--p", "3", "--n", "6",
                     "--symbolic")
    assert code == 0
    data = json.loads(text)
    assert data["coefficient"] == "d3" and data["loops"] == [3]
    assert data["diagram"] == concatenate(x, y)[0].to_dict()


def test_mul_numeric_and_zero(diagram_pair):
    x, y = diagram_pair
    code, text = run("mul", x.to_json(), y.to_json(), "--m", "6", "--p", "3", "--n", "6",
                     "--delta", "5", "7")
    assert code == 0 and json.loads(text)["coefficient"] == "7"
    code, text = run("mul", y.to_json(), y.to_json(), "--m", "6", "--p", "3", "--n", "6",
                     "--symbolic")
    assert code == 0 and json.loads(text)["coefficient"] == "0"


def test_basis_count():
    assert run("basis", "--count", "--m", "2", "--p", "2", "--n", "2") == (0, "6\n")
    assert run("basis", "--count", "--verify", "--m", "3", "--p", "1", "--n", "3") == (0, "405\n")
    code, text = run("basis", "--m", "2", "--p", "2", "--n", "2")
    assert code == 0 and len(text.splitlines()) == 6


def test_decomp_generic_and_special():
    code, text = run("decomp", "--m", "2", "--p", "2", "--n", "3", "--compact")
    data = json.loads(text)
    assert code == 0 and data["diff"] == []
    rows = data["oracle"]["matrix"]
    assert all(v == (i == j) for i, row in enumerate(rows) for j, v in enumerate(row))
    code, text = run("decomp", "--m", "2", "--p", "2", "--n", "3", "--delta", "2", "--csv")
    assert code == 0 and "# differences: 0" in text


def test_verify():
    code, text = run("verify", "--m", "2", "--p", "2", "--n", "3", "--delta", "2")
    assert code == 0
    lines = text.splitlines()
    assert lines and all(line.startswith("PASS") for line in lines)


def test_act_standard_simple_homdim():
    code, text = run("act", "--m", "2", "--p", "2", "--n", "3", "--delta", "2",
                     "--label", "[[1],[]]#r0", "--gen", "e12")
    assert code == 0 and json.loads(text)["dim"] == 6
    code, text = run("standard", "--m", "2", "--n", "3", "--label", "[[1],[]]", "--head",
                     "--delta", "2", "0")
    assert code == 0 and "generators" in json.loads(text)
    code, text = run("simple", "--m", "2", "--p", "2", "--n", "2", "--label", "[[1],[1]]#r1")
    data = json.loads(text)
    assert code == 0 and data["dim"] == 1 and set(data["generators"]) == {"tp", "sstar", "s1"}
    assert run("homdim", "--m", "2", "--p", "2", "--n", "3", "--delta", "2",
               "--source", "[[1],[]]", "--target", "[[1],[]]") == (0, "1\n")


def test_determinism():
    args = ("standard", "--m", "3", "--n", "3", "--label", "[[1],[],[]]", "--seed", "5")
    assert run(*args) == run(*args)


@pytest.mark.parametrize("argv", [
    ["mul", "{\"n\": 1,", "{}", "--m", "1", "--n", "1"],
    ["act", "--m", "2", "--n", "3", "--label", "[[1]]", "--gen", "t1"],
    ["act", "--m", "2", "--n", "3", "--label", "[[1],[]]", "--gen", "q7"],
    ["act", "--m", "2", "--p", "2", "--n", "3", "--label", "[[1],[]]#r5", "--gen", "t1"],
    ["decomp", "--m", "4", "--p", "3", "--n", "2"],
    ["decomp", "--m", "2", "--p", "2", "--n", "2", "--delta", "1", "2"],
    ["basis"],
])
def test_usage_errors(argv, capsys):
    assert run(*argv)[0] == 2


def test_json_error_has_location(capsys):
    code, _ = run("mul", "{\"n\": 1,\n", "{}", "--m", "1", "--n", "1")
    assert code == 2
    assert "line" in capsys.readouterr().err


def test_caps():
    assert run("basis", "--m", "3", "--n", "4", "--cap-basis", "10")[0] == 3
    assert run("act", "--m", "2", "--n", "4", "--label", "[[],[]]", "--gen", "t1",
               "--cap-dim", "5")[0] == 3


def test_console_script():
    proc = subprocess.run([sys.executable, "-m", "cycbrauer.cli", "basis", "--count", "--m", "1",
                           "--n", "3"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "15\n"
