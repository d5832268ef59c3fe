"""Exact tmc, mc, mvc and leaf numbers for small connected graphs."""

from ._monoconn import (
    ColoringError,
    Graph,
    GraphError,
    SolverRangeError,
    bounds,
    builtin_corpus,
    check,
    complement,
    construct_complete,
    construct_multipartite,
    construct_tree_based,
    construct_wheel,
    diameter,
    generate,
    hunt,
    is_connected,
    leaf_number,
    max_leaf,
    mc,
    mvc,
    parse_edge_list,
    parse_graph6,
    sufficient_conditions,
    survey,
    tmc,
    tmc_naive,
    verify,
    vertex_connectivity,
)

__all__ = [name for name in dir() if not name.startswith("_")]
