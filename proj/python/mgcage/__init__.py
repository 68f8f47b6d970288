"""Construct, verify, bound, and search [z,r;g]-mixed graphs.

Graphs are passed around as mg-format text; `verify` unpacks one into a
plain dict. The heavy lifting lives in the compiled ``_core`` module.
"""

from ._core import (
    MgError,
    biaffine,
    bounds,
    cage_10_3_5,
    canonical,
    certify_minimum,
    circulant_graph,
    export_dot,
    g5,
    gcopies,
    girth,
    lower_bound_general,
    lower_bound_z1,
    mixed_distance,
    moore_bound,
    nonalternating_girth_cycle,
    search,
    verify,
)

__all__ = [
    "MgError",
    "biaffine",
    "bounds",
    "cage_10_3_5",
    "canonical",
    "certify_minimum",
    "circulant_graph",
    "export_dot",
    "g5",
    "gcopies",
    "girth",
    "lower_bound_general",
    "lower_bound_z1",
    "mixed_distance",
    "moore_bound",
    "nonalternating_girth_cycle",
    "search",
    "verify",
]
