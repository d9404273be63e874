"""Python access to the g5rp pipeline. Problems and certificates travel as JSON."""

import json

from ._g5rp import InputError, MathError, has_qp_point, squarefree_part, table
from ._g5rp import example_names as _example_names
from ._g5rp import example_json as _example_json
from ._g5rp import run_json as _run_json
from ._g5rp import sa_json as _sa_json

__all__ = ["InputError", "MathError", "examples", "example", "run", "table", "sa",
           "squarefree_part", "has_qp_point"]


def examples():
    return list(_example_names())


def example(name):
    return json.loads(_example_json(name))


def run(problem, height=None, primes=None, workers=1):
    """problem: example name, dict, or JSON text. Returns the certificate as a dict."""
    if isinstance(problem, dict):
        text = json.dumps(problem)
    elif isinstance(problem, str) and problem.lstrip().startswith("{"):
        text = problem
    else:
        text = _example_json(problem)
    return json.loads(_run_json(text, height, primes, workers))


def sa(a):
    return json.loads(_sa_json(str(a)))
