"""Python bindings for the hyperwalk core."""

import json
from fractions import Fraction

from . import _core
from ._core import DEFAULT_SEED, HyperwalkError

__all__ = [
    "DEFAULT_SEED",
    "HyperwalkError",
    "count_schedules",
    "is_valid_schedule",
    "cost_exponent",
    "schedule_lp",
    "run",
]


def _pattern(pattern):
    if isinstance(pattern, str):
        return pattern
    return json.dumps(pattern)


def count_schedules(pattern):
    """Number of complete valid loading schedules of a pattern dict."""
    return _core.count_schedules(_pattern(pattern))


def is_valid_schedule(pattern, schedule):
    return _core.is_valid_schedule(_pattern(pattern), list(schedule))


def cost_exponent(pattern, schedule, params):
    text = params if isinstance(params, str) else json.dumps(params)
    return Fraction(_core.cost_exponent(_pattern(pattern), list(schedule), text))


def schedule_lp(pattern, schedule):
    """Exact optimum of the exponent LP for a fixed schedule."""
    return Fraction(_core.schedule_lp(_pattern(pattern), list(schedule)))


def run(*args):
    """Runs a CLI command, e.g. run("schedules", "--pattern", path, "--count-only").

    Returns (exit_code, report_dict).
    """
    code, text = _core.run([str(a) for a in args])
    return code, json.loads(text)
