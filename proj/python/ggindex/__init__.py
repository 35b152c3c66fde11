"""GG, NGG and ABC indices of connected graphs, graph families and extremal checks."""

import json

from ._core import (
    EnumerationRefused,
    FamilyError,
    Graph,
    GraphError,
    ParseError,
    abc_index,
    are_isomorphic,
    count_graphs,
    edge_splits,
    enumerate_graph6,
    family,
    gg_index,
    ngg_closed_form,
    ngg_index,
    read_graphs,
)
from ._core import verify_json as _verify_json

__all__ = [
    "EnumerationRefused",
    "FamilyError",
    "Graph",
    "GraphError",
    "ParseError",
    "abc_index",
    "are_isomorphic",
    "count_graphs",
    "edge_splits",
    "enumerate_graphs",
    "enumerate_graph6",
    "family",
    "gg_index",
    "indices",
    "ngg_closed_form",
    "ngg_index",
    "read_graphs",
    "verify",
]


def indices(graph):
    return {"gg": gg_index(graph), "ngg": ngg_index(graph), "abc": abc_index(graph)}


def enumerate_graphs(n, **constraints):
    return [Graph.from_graph6(s) for s in enumerate_graph6(n, **constraints)]


def verify(claim, ns, *, epsilon=1e-9, workers=0, max_n=None, delta=3):
    """Run a verification and return the report as a dict.

    delta applies to the conjecture probes; pass "n-1" for the n-dependent bound.
    """
    if delta == "n-1":
        text = _verify_json(claim, list(ns), epsilon, workers, max_n, None, True)
    else:
        text = _verify_json(claim, list(ns), epsilon, workers, max_n, delta, False)
    return json.loads(text)
