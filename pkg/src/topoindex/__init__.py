"""Topological indices of molecular graphs, with ev-degree and ve-degree variants.

The public surface re-exported here covers everyday use; the submodules hold
the rest (enumeration, verification, the CLI).
"""

from .estimators import TopologicalIndexTransformer, check_graphs
from .graph import (
    DisconnectedGraphError,
    Graph,
    GraphError,
    all_pairs_distance,
    closed_neighborhood,
    degree,
    ev_degree,
    from_edge_list,
    is_connected,
    is_tree,
    triangle_count,
    ve_degree,
)
from .indices import (
    IndexVector,
    ev_zagreb,
    first_zagreb,
    forgotten,
    index_vector,
    randic,
    second_zagreb,
    total_ev_degree,
    ve_randic,
    ve_zagreb_alpha,
    ve_zagreb_beta,
    ve_zagreb_mu,
    wiener,
)
from .octanes import MoleculeRecord, golden_index_table, octane_isomers
from .smiles import SmilesError, parse_alkane, render_alkane
from .stats import CorrelationTable, pearson
from .trees import tree_canonical_form

__all__ = [
    "CorrelationTable",
    "DisconnectedGraphError",
    "Graph",
    "GraphError",
    "IndexVector",
    "MoleculeRecord",
    "SmilesError",
    "TopologicalIndexTransformer",
    "all_pairs_distance",
    "check_graphs",
    "closed_neighborhood",
    "degree",
    "ev_degree",
    "ev_zagreb",
    "first_zagreb",
    "forgotten",
    "from_edge_list",
    "golden_index_table",
    "index_vector",
    "is_connected",
    "is_tree",
    "octane_isomers",
    "parse_alkane",
    "pearson",
    "randic",
    "render_alkane",
    "second_zagreb",
    "total_ev_degree",
    "tree_canonical_form",
    "triangle_count",
    "ve_degree",
    "ve_randic",
    "ve_zagreb_alpha",
    "ve_zagreb_beta",
    "ve_zagreb_mu",
    "wiener",
]
