"""Sombor index toolkit.

Exact degree-based indices on small graphs, flow-based connectivity, an
exhaustive extremal scan over connectivity-bounded classes and linear QSPR
fits for a homologous series.
"""

from .connectivity import edge_connectivity, in_class_e, in_class_v, vertex_connectivity
from .graph import (
    Graph,
    complete,
    cycle,
    disjoint_union,
    empty,
    g_split,
    join,
    k_n_k,
    parse_graph6,
    path,
    star,
    write_graph6,
)
from .invariants import index_with, sombor, sombor_knk_closed, sombor_path_closed, sombor_star_closed

__all__ = [
    "Graph", "complete", "cycle", "disjoint_union", "empty", "g_split", "join", "k_n_k",
    "parse_graph6", "path", "star", "write_graph6",
    "edge_connectivity", "in_class_e", "in_class_v", "vertex_connectivity",
    "index_with", "sombor", "sombor_knk_closed", "sombor_path_closed", "sombor_star_closed",
]
