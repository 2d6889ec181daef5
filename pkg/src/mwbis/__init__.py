"""Budgeted weighted independent set (MWBIS) and independent vertex coverage (MIVC) toolkit."""

from .graph import (
    Bipartition,
    Coloring,
    Graph,
    GraphError,
    Solution,
    WeightedInstance,
    bipartition,
    build_graph,
    covered_edges,
    degeneracy_coloring,
    degeneracy_order,
    degree_weights,
    greedy_coloring,
    is_independent,
    set_weight,
)
from .solvers import (
    SearchConfig,
    color_class_approx,
    exact_mwbis,
    greedy_bipartite,
    mwis_bipartite_exact,
    truncate_to_budget,
    truncated_mwis,
)

__version__ = "0.1.0"
