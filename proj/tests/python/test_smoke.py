import json
import pathlib
from fractions import Fraction

import pytest

import hyperwalk

DATA = pathlib.Path(__file__).resolve().parents[2] / "data"


def load(name):
    return json.loads((DATA / name).read_text())


def test_counts():
    assert hyperwalk.count_schedules(load("triple.json")) == 48
    assert hyperwalk.count_schedules(load("k4.json")) == 1680384


def test_k4_reference_exponent():
    pattern = load("k4.json")
    schedule = load("schedules/k4_reference.json")["schedule"]
    params = load("params/k4_reference.json")
    assert hyperwalk.is_valid_schedule(pattern, schedule)
    assert hyperwalk.cost_exponent(pattern, schedule, params) == Fraction(241, 128)
    assert hyperwalk.schedule_lp(pattern, schedule) == Fraction(241, 128)


def test_invalid_input_raises():
    with pytest.raises(hyperwalk.HyperwalkError):
        hyperwalk.count_schedules({"kappa": 3, "triples": [[1, 1, 2]]})
    assert not hyperwalk.is_valid_schedule(load("triple.json"), ["p12", "v1", "v2"])


def test_run_commands():
    code, report = hyperwalk.run("schedules", "--pattern", DATA / "k4.json", "--count-only")
    assert code == 0 and report["count"] == 1680384
    code, report = hyperwalk.run("optimize", "--pattern", DATA / "triple.json", "--exhaustive")
    assert code == 0
    assert Fraction(report["exponent"]) == hyperwalk.schedule_lp(
        load("triple.json"), report["schedule"])
    code, report = hyperwalk.run("assoc", "check", "--table", DATA / "operators" / "mod3.json")
    assert code == 0 and report["associative"] is True
    code, report = hyperwalk.run("simulate", "--check", "lambda-claim", "--trials", "200")
    assert code == 0 and report["failures"] == 0
    code, _ = hyperwalk.run("optimize")
    assert code == 2
