"""Exact fixed point computations for Hamiltonian circle actions.

Fixed point data is passed as a dict in the same shape as the CLI input
documents: ``{"n": 3, "points": [{"id": "p", "weights": [1, 1, -2]}, ...]}``.
Integers come back as ``int`` and rationals as ``fractions.Fraction``.
"""

import json
from fractions import Fraction

from ._eqfix import (
    EqfixError,
    default_offset,
    predict_counts,
    reduced_cohomology,
    run_cli,
    search,
    vandermonde_complete,
    vandermonde_kernel,
)
from . import _eqfix

__all__ = [
    "EqfixError",
    "check",
    "consistency_check",
    "counts",
    "default_offset",
    "hypercube_data",
    "integrate_chern",
    "predict_counts",
    "reduced_cohomology",
    "ring_document",
    "ring_roundtrip",
    "run_cli",
    "search",
    "solve",
    "vandermonde_complete",
    "vandermonde_kernel",
]


def _encode(value):
    if isinstance(value, Fraction):
        return str(value)
    raise TypeError(f"cannot encode {type(value).__name__}")


def _dump(data):
    return json.dumps(data, default=_encode)


def counts(data):
    return _eqfix._counts(_dump(data))


def integrate_chern(data, exponents):
    """Integral of c_1^e_1 ... c_n^e_n as (numerator, denominator) coefficient lists in x."""
    return _eqfix._integrate_chern(_dump(data), list(exponents))


def consistency_check(data, max_degree=None):
    if max_degree is None:
        max_degree = data["n"]
    return _eqfix._consistency_check(_dump(data), max_degree)


def check(data, max_degree=None):
    """Moment equations (semifree data only) and integrality, as one bool."""
    report = consistency_check(data, max_degree)
    ok = report["passed"]
    semifree = all(abs(w) == 1 for p in data["points"] for w in p["weights"])
    if semifree:
        ok = ok and _eqfix._moment_equations(_dump(data))[0]
    return ok


def hypercube_data(n, c=None):
    return _eqfix._hypercube_data(n, None if c is None else str(c))


def solve(data):
    return _eqfix._solve(_dump(data))


def ring_document(n):
    return json.loads(_eqfix._ring_document(n))


def ring_roundtrip(document):
    return _eqfix._ring_roundtrip(json.dumps(document))
