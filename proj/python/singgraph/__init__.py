"""Deformation invariants of rational surface singularities from resolution dual graphs.

Thin wrapper around the C++ extension: graph documents go in as JSON text,
reports come back as dicts.
"""

import json

from ._core import (  # noqa: F401
    GraphDomainError,
    GraphSchemaError,
    GraphValidationError,
    InternalError,
    __version__,
    check,
    dot,
    gen_catalog,
    gen_chain,
    gen_cyclic,
    negative_definite,
    rational,
    report_json,
    report_text,
)
from ._core import fundamental_cycle_json as _fundamental_cycle_json


def report(graph_text, tower=False):
    """Full invariant report as a dict."""
    return json.loads(report_json(graph_text, tower))


def fundamental_cycle(graph_text):
    """Fundamental cycle as an {id: multiplicity} dict."""
    return json.loads(_fundamental_cycle_json(graph_text))


__all__ = [
    "GraphDomainError",
    "GraphSchemaError",
    "GraphValidationError",
    "InternalError",
    "__version__",
    "check",
    "dot",
    "fundamental_cycle",
    "gen_catalog",
    "gen_chain",
    "gen_cyclic",
    "negative_definite",
    "rational",
    "report",
    "report_json",
    "report_text",
]
