"""Optimal recoloring for proper connectivity of monochromatic graphs.

The package computes the minimum cost (recolored edges plus new colors, or
edges alone) of making a monochromatic connected graph properly connected:
exactly by iterative-deepening search, and constructively for trees,
complete bipartite graphs, graphs of independence number at most 2, and
graphs with a good edge or a spanning complete bipartite subgraph. Every
constructive result is validated against the ground-truth checker and
packaged as a re-checkable certificate.
"""

from .coloring import (
    ConnectivityReport,
    EdgeColoring,
    Recoloring,
    apply_recoloring,
    exists_pc_path,
    is_properly_colored,
    is_properly_connected,
    pc_walk_reachable,
)
from .construct import (
    BoundsResult,
    GoodEdgeWitness,
    TreePlan,
    bounds,
    construct_certificate,
    find_good_edge,
    recolor_alpha2,
    recolor_complete_bipartite,
    recolor_complete_bipartite_graph,
    recolor_good_edge,
    recolor_spanning_bipartite,
    recolor_tree,
    theorem_certificate,
)
from .errors import (
    BudgetError,
    InternalConsistencyError,
    NoCutError,
    NotApplicableError,
    ParameterError,
    ParseError,
    PcOptError,
    PreconditionError,
)
from .families import (
    all_labeled_trees,
    clique_cycle_blowup,
    complete_bipartite,
    complete_graph,
    complete_multipartite,
    cycle_graph,
    enumerate_connected_graphs,
    generate,
    path_graph,
    prufer_decode,
    random_connected,
    random_tree,
    star_graph,
)
from .graphs import (
    CutStructure,
    Edge,
    Graph,
    GraphStats,
    InducedPathWitness,
    Matching,
    alpha_at_most_2,
    build_graph,
    compute_stats,
    find_induced_p4,
    is_connected,
    is_forest,
    is_tree,
    maximum_matching,
    min_vertex_cut,
    p4free_spanning_bipartition,
    spanning_trees,
)
from .search import (
    Certificate,
    SearchBudget,
    enumerate_recolorings,
    feasible,
    pc_opt_exact,
    pc_opt_prime_exact,
    verify_certificate,
)

__version__ = "0.1.0"
