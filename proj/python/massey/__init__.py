"""Exact Massey products and their transfer along circle actions.

The command functions return the structured report as a dict with keys
``command``, ``status``, ``exit_code``, ``payload`` and ``trail``.
"""

import json

from . import _massey
from ._massey import (
    Algebra,
    CapOverflow,
    MasseyError,
    ParseError,
    PremiseViolated,
    ValidationError,
    load_model,
    massey_tally,
    parse_model,
)

__all__ = [
    "Algebra",
    "CapOverflow",
    "MasseyError",
    "ParseError",
    "PremiseViolated",
    "ValidationError",
    "cohomology",
    "euler",
    "lemma32",
    "load_model",
    "massey",
    "massey_product",
    "massey_tally",
    "parse_model",
    "render_human",
    "scan",
    "theorem11",
    "transfer",
]


def _report(text):
    return json.loads(text)


def cohomology(path, cap=None, max_degree=None):
    return _report(_massey.cohomology(str(path), cap, max_degree))


def massey(path, a, b, c, cap=None):
    return _report(_massey.massey(str(path), [a, b, c], cap))


def euler(path, bundles=(), cap=None):
    return _report(_massey.euler(str(path), list(bundles), cap))


def lemma32(path, a, b, c, bundles=(), cap=None):
    return _report(_massey.lemma32(str(path), [a, b, c], list(bundles), cap))


def transfer(path, triple=None, bundles=(), cap=None):
    t = list(triple) if triple is not None else None
    return _report(_massey.transfer(str(path), t, list(bundles), cap))


def theorem11(path, a, b, c, bundles=(), cap=None):
    return _report(_massey.theorem11(str(path), [a, b, c], list(bundles), cap))


def scan(path, budget=0):
    return _report(_massey.scan(str(path), budget))


def massey_product(algebra, a, b, c):
    """Triple Massey product on an Algebra, as a dict."""
    return json.loads(algebra.massey_json(a, b, c))


def render_human(report):
    return _massey.render_human(json.dumps(report))
