"""Python interface to the hatkit core."""

import json

from ._hatkit import (
    Graph,
    HatError,
    __version__,
    automorphism_generators,
    automorphism_group_order as _aut_order,
    bipartite_double,
    canonical_certificate,
    census,
    girth,
    is_bipartite,
    is_isomorphic,
    line_graph,
    parse_graph6,
    resolve,
    wreath_graph,
    write_graph6,
)
from . import _hatkit

__all__ = [
    "Graph",
    "HatError",
    "alternating_cycles",
    "analyze",
    "automorphism_generators",
    "automorphism_group_order",
    "bipartite_double",
    "canonical_certificate",
    "census",
    "cover_pipeline",
    "dart_graph",
    "girth",
    "is_bipartite",
    "is_isomorphic",
    "line_graph",
    "parse_graph6",
    "resolve",
    "transitivity",
    "verify",
    "wreath_graph",
    "write_graph6",
]


def automorphism_group_order(graph):
    return int(_aut_order(graph))


def transitivity(graph, generators=None):
    return json.loads(_hatkit.transitivity_json(graph, generators))


def alternating_cycles(graph, generators=None):
    """Radius, attachment, cycles and the induced orientation (full group by default)."""
    return json.loads(_hatkit.alternating_json(graph, generators))


def dart_graph(graph):
    """Returns (Dart(graph), report)."""
    dart, report = _hatkit.dart_graph(graph)
    return dart, json.loads(report)


def cover_pipeline(graph, generators=None):
    return json.loads(_hatkit.cover_json(graph, generators))


def analyze(input, census="builtin", strict=False):
    return json.loads(_hatkit.analyze_json(input, census, strict))


def verify(suite="all", census="builtin", jobs=1, strict=False):
    return json.loads(_hatkit.verify_json(suite, census, jobs, strict))
