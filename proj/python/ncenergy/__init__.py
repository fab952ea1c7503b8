"""Non-commuting graph spectra and energies of finite groups."""

import json

from . import _core
from ._core import AbelianGroup, NegativeInput, ParameterOutOfTheoremRange, SpecParseError

__all__ = [
    "AbelianGroup",
    "NegativeInput",
    "ParameterOutOfTheoremRange",
    "SpecParseError",
    "analyze",
    "closed_form",
    "graph_edges",
    "is_perfect_square",
    "square_sequence",
    "square_value",
    "theorem_ids",
    "verify",
]


def analyze(spec, tol=1e-9):
    """Spectra, energies and flags of the non-commuting graph of a group spec."""
    return json.loads(_core.analyze_json(spec, tol))


def verify(selector, small=True, threads=1):
    """Run a verification suite; returns outcomes plus a summary."""
    return json.loads(_core.verify_json(selector, small, threads))


def closed_form(family, *params):
    """Closed-form Q-spectrum and energies, e.g. closed_form("Dihedral", 5)."""
    return json.loads(_core.closed_form_json(family, list(params)))


def square_sequence(kind, bound, threads=1):
    """All (n, root) with n <= bound whose discriminant of the given kind is a square."""
    return [(n, int(root)) for n, root in _core.square_sequence(kind, bound, threads)]


def square_value(kind, n):
    return int(_core.square_value(kind, n))


def is_perfect_square(k):
    """Integer square root of k, or None."""
    root = _core.is_perfect_square(str(k))
    return None if root is None else int(root)


def theorem_ids():
    return list(_core.theorem_ids())


def graph_edges(spec):
    """(vertex count, edge list) of the non-commuting graph."""
    n, edges = _core.graph_edges(spec)
    return n, [tuple(e) for e in edges]
