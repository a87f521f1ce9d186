import io
import json
import subprocess
import sys
from fractions import Fraction as F

import pytest

from ratconfig.arith import parse_rational
from ratconfig.cli import run
from ratconfig.three_distance import three_distance_squares


def call(*argv):
    buf = io.StringIO()
    code = run(list(argv), buf)
    return code, buf.getvalue()


def test_classify_split():
    assert call("classify", "--eta", "3,4,-4,3") == (0, "SingularSplit λ=5\n")


def test_classify_json():
    code, text = call("classify", "--eta", "1,5,0,3", "--json")
    rec = json.loads(text)
    assert code == 0 and rec["class"] == "Nonsingular" and rec["lambda"] is None


def test_torsion():
    code, text = call("torsion", "--r", "0", "--s", "2")
    assert code == 0 and text.splitlines()[0] == "Order2"
    code, text = call("torsion", "--r", "15/4", "--s", "4", "--json")
    rec = json.loads(text)
    assert rec["verdict"] == "Order8" and len(rec["chain"]) == 8 and rec["chain"][-1] == "O"


def test_reduce():
    code, text = call("reduce", "--eta", "0,1,2,-7", "--point", "0:2:1", "--json")
    rec = json.loads(text)
    assert code == 0 and (rec["r"], rec["s"]) == ("-7/2", "-1/2")


def test_verify():
    code, text = call("verify", "--eta", "1,5,0,3", "--point", "0:1:1", "--json")
    assert code == 0 and json.loads(text)["degenerate"] is True


def test_three_distance_json():
    code, text = call("three-distance", "--t", "2", "--n-max", "5", "--json")
    lines = text.splitlines()
    assert code == 0 and len(lines) >= 4
    for line in lines:
        rec = json.loads(line)
        assert set(rec) == {"t", "n", "x", "y", "d1", "d2", "d3"}
        x, y = parse_rational(rec["x"]), parse_rational(rec["y"])
        ds = [parse_rational(rec[k]) ** 2 for k in ("d1", "d2", "d3")]
        assert tuple(ds) == three_distance_squares(x, y)


def test_decompose_json():
    code, text = call("decompose", "--mode", "three-product", "--target", "1", "--count", "3", "--json")
    lines = [json.loads(l) for l in text.splitlines()]
    assert code == 0 and len(lines) == 3
    for rec in lines:
        xs = [parse_rational(v) for v in rec["slopes"]]
        ws = [parse_rational(v) for v in rec["witnesses"]]
        assert xs[0] * xs[1] * xs[2] == 1 and xs[2] == F(11, 60)
        assert all(w * w == x * x + 1 for x, w in zip(xs, ws))


def test_census_summary_line():
    code, text = call("census", "--x", "1", "--json")
    lines = [json.loads(l) for l in text.splitlines()]
    assert code == 0 and lines[-1]["summary"] is True
    assert len(lines) - 1 == lines[-1]["invertible"]


def test_exit_codes():
    assert call("bogus")[0] == 2
    assert call("torsion", "--r", "1/0", "--s", "2")[0] == 2
    assert call("classify", "--eta", "1,2,2,4")[0] == 2
    assert call("torsion", "--r", "0", "--s", "1")[0] == 1
    assert call("verify", "--eta", "1,5,0,3", "--point", "1:1:1")[0] == 1
    assert call("decompose", "--mode", "sum", "--target", "7", "--count", "2")[0] == 1
    assert call("three-distance", "--t", "2", "--n-max", "100")[0] == 1


def test_absent_results_exit_zero():
    code, text = call("three-distance", "--t", "2", "--n-max", "0", "--json")
    assert code == 0 and text == ""


@pytest.mark.parametrize("argv", [
    ("census", "--x", "3", "--sample", "50", "--seed", "9", "--json"),
    ("three-distance", "--t", "1/2", "--n-max", "4"),
])
def test_deterministic(argv):
    assert call(*argv) == call(*argv)


def test_round_trip_of_printed_rationals():
    code, text = call("three-distance", "--t", "3", "--n-max", "3", "--json")
    for line in text.splitlines():
        for k, v in json.loads(line).items():
            if k != "n":
                assert str(parse_rational(v)).replace(" ", "") == v


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "ratconfig", "classify", "--eta", "3,4,-4,3"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout == "SingularSplit λ=5\n"
