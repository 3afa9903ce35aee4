import json
import math
import os
import pathlib

import pytest

import dyndeg

JOBS = pathlib.Path(os.environ.get("DYNDEG_JOBS_DIR", pathlib.Path(__file__).resolve().parents[2] / "jobs"))


def load(name):
    return json.loads((JOBS / name).read_text())


def test_lambda_sequences():
    assert dyndeg.lambda_sequence([[2, 1], [1, 1]], 1, 4) == [2, 5, 13, 34, 89]
    assert dyndeg.lambda_sequence([[2, 0], [1, 3]], 1, 5) == [2 * 3**n for n in range(6)]
    assert dyndeg.b_sequence([[2, 0], [1, 3]], 1, 1, 5) == [3 ** (n + 1) for n in range(6)]
    big = dyndeg.lambda_sequence([[5, 0], [0, 5]], 2, 40)
    assert big[-1] == 2 * 25**40


def test_relative_and_a():
    a = [[1, 2, 0], [-1, 1, 0], [2, 0, 3]]
    assert dyndeg.a_sequence(a, 2, 1, 1, 8) == dyndeg.relative_sequence(a, 2, 1, 8)


def test_oracle():
    d = dyndeg.eigen_degrees([[2, 1], [1, 1]])
    assert d[1] == pytest.approx((3 + math.sqrt(5)) / 2, rel=1e-10)
    assert dyndeg.characteristic_polynomial([[2, 1], [1, 1]]) == [1, -3, 1]
    assert dyndeg.compound([[1, 2], [3, 4]], 2) == [[-2]]


def test_estimate():
    e = dyndeg.estimate([2 * 6**n for n in range(20)])
    assert e["converged"]
    assert e["chosen"] == pytest.approx(6.0)


def test_errors():
    with pytest.raises(dyndeg.FibrationError):
        dyndeg.relative_sequence([[2, 1], [1, 1]], 1, 1, 3)
    with pytest.raises(ValueError):
        dyndeg.lambda_sequence([[1, 2], [2, 4]], 1, 3)
    with pytest.raises(dyndeg.InvalidArgument):
        dyndeg.degrees({"type": "monomial", "matrix": [[1]], "bogus": 1})


def test_degrees_report():
    r = dyndeg.degrees(load("golden.json"))
    assert r["report"] == "degrees"
    assert r["oracle"]["degrees"][1] == pytest.approx(2.6180339887, rel=1e-9)
    assert "CONVERGED" in dyndeg.render_table(r)


def test_verify_product():
    r = dyndeg.verify_product(load("fibered.json"))
    assert r["verdict"] == "PASS"
    row = r["oracle_level"]["rows"][1]
    assert row["argmax"] == [0]
    assert row["lhs"] == pytest.approx(3.0)
    skew = dyndeg.verify_product(load("skew.json"))
    assert skew["verdict"] == "PASS"
    assert skew["estimate_level"]["rows"][1]["lhs"] == pytest.approx(3.0, rel=5e-2)


def test_rational():
    out = dyndeg.rational_degrees([2], [["x1*x2", "x0*x2", "x0*x1"]], 6)
    assert out["lambda1"][1:] == [2, 1, 2, 1, 2, 1]
    assert dyndeg.variable_names([1, 1]) == ["x0", "x1", "y0", "y1"]


def test_sequence_csv():
    r = dyndeg.sequence(load("golden.json"))
    csv = dyndeg.sequence_csv(r)
    assert csv.startswith("p,n,lambda_p,root_est,ratio_est")


def test_suite_deterministic():
    a = dyndeg.suite({"count": 10, "seed": 11})
    b = dyndeg.suite({"count": 10, "seed": 11})
    assert a == b
    assert a["ok"]
    assert a["seed"] == 11
