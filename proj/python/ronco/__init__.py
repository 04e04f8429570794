"""Python bindings for the ronco library.

Algebras travel as the JSON structure-constant documents used by the CLI;
the helpers below decode them into plain dicts and Fractions.
"""

import json
from fractions import Fraction

from . import _ronco
from ._ronco import (
    DEFAULT_MAX_DEGREE,
    DegreeOverflow,
    Error,
    SyntaxError,
    VerificationFailure,
    graded_dim,
    lyndon_words,
    parse_term,
    run_cli,
    witt_dim,
)

__all__ = [
    "DEFAULT_MAX_DEGREE",
    "DegreeOverflow",
    "Error",
    "SyntaxError",
    "VerificationFailure",
    "convert",
    "free_nil2",
    "graded_dim",
    "graded_kernel",
    "homology",
    "leib_eval",
    "lyndon_words",
    "parse_term",
    "ronco_eval",
    "run_cli",
    "truncate",
    "verify",
    "witt_dim",
]


def _dumps(algebra):
    return algebra if isinstance(algebra, str) else json.dumps(algebra)


def leib_eval(expr, gens, max_degree=DEFAULT_MAX_DEGREE):
    """Evaluate a bracket term in Leib(V); returns {word: Fraction}."""
    return {w: Fraction(c) for w, c in _ronco.leib_eval(expr, gens, max_degree)}


def ronco_eval(expr, gens, max_degree=DEFAULT_MAX_DEGREE):
    """Evaluate a bracket term in the free Ronco algebra.

    Returns {"degree1": {gen: Fraction}, "higher": {(lyndon, gen): Fraction}}.
    """
    raw = json.loads(_ronco.ronco_eval_json(expr, gens, max_degree))
    return {
        "degree1": {g: Fraction(c) for g, c in raw["degree1"]},
        "higher": {(w, g): Fraction(c) for w, g, c in raw["higher"]},
    }


def graded_kernel(d, n, max_degree=DEFAULT_MAX_DEGREE):
    return json.loads(_ronco.graded_kernel_json(d, n, max_degree))


def truncate(d, max_degree_of_algebra, max_degree=DEFAULT_MAX_DEGREE):
    return json.loads(_ronco.truncate_json(d, max_degree_of_algebra, max_degree))


def free_nil2(d):
    return json.loads(_ronco.free_nil2_json(d))


def verify(algebra, variety):
    return json.loads(_ronco.verify_json(_dumps(algebra), variety))


def convert(algebra, to):
    return json.loads(_ronco.convert_json(_dumps(algebra), to))


def homology(algebra, which):
    return json.loads(_ronco.homology_json(_dumps(algebra), which))
