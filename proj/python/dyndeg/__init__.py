"""Dynamical degrees of monomial and multihomogeneous rational maps.

The command functions take a job (dict or JSON text, same schema as the CLI
input) and return the machine report as a dict.
"""

import json

from ._dyndeg import (
    ComputationError,
    DegenerateComposition,
    FibrationError,
    InvalidArgument,
    a_sequence,
    b_sequence,
    characteristic_polynomial,
    compound,
    eigen_degrees,
    estimate,
    lambda_sequence,
    rational_degrees,
    relative_sequence,
    variable_names,
)
from . import _dyndeg

__all__ = [
    "ComputationError",
    "DegenerateComposition",
    "FibrationError",
    "InvalidArgument",
    "a_sequence",
    "b_sequence",
    "characteristic_polynomial",
    "compound",
    "degrees",
    "eigen_degrees",
    "estimate",
    "lambda_sequence",
    "rational_degrees",
    "relative_sequence",
    "render_table",
    "sequence",
    "sequence_csv",
    "suite",
    "variable_names",
    "verify_product",
]


def _text(job):
    return job if isinstance(job, str) else json.dumps(job)


def degrees(job):
    return json.loads(_dyndeg._degrees(_text(job)))


def verify_product(job):
    return json.loads(_dyndeg._verify_product(_text(job)))


def sequence(job):
    return json.loads(_dyndeg._sequence(_text(job)))


def suite(job=None):
    return json.loads(_dyndeg._suite(_text(job if job is not None else {})))


def render_table(report):
    return _dyndeg._render_table(_text(report))


def sequence_csv(report):
    return _dyndeg._sequence_csv(_text(report))
