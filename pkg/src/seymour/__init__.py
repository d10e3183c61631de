"""Second-neighborhood toolkit for digon-free digraphs.

Computes first/second out-neighborhood statistics, checks the necessary
conditions a minimal counterexample to Seymour's Second Neighborhood
Conjecture must satisfy, builds the counterexample-multiplying graph
product, and searches small digraph spaces exhaustively or at random.
"""
from .digraph import Digraph, NeighborhoodProfile, from_edges
from .errors import DigraphError
from .filtering import (
    EVALUATION_ORDER,
    ConditionVerdict,
    FilterReport,
    avoiding_reach,
    check_condition,
    run_filter,
)
from .product import (
    PredictedProfile,
    ProductLabeling,
    build_product,
    is_valid_second_factor,
    predicted_profile,
)
from .search import (
    DEFAULT_CEILING,
    SearchReport,
    SearchSpec,
    enumerate_digon_free,
    graph_at_index,
    random_acyclic,
    random_digon_free,
    random_tournament,
    random_triangle_free,
    run_search,
    space_size,
)
from .structure import (
    INFINITE_GIRTH,
    DiamondWitness,
    diamond_base_targets,
    diamond_witnesses,
    has_directed_cycle,
    has_transitive_triangle,
    is_strongly_connected,
    min_outdegree_vertex,
    triangle_base_count,
    underlying_girth,
)
from .textio import parse_digraph, write_digraph
from .version import __version__

__all__ = [
    "Digraph",
    "NeighborhoodProfile",
    "from_edges",
    "DigraphError",
    "EVALUATION_ORDER",
    "ConditionVerdict",
    "FilterReport",
    "avoiding_reach",
    "check_condition",
    "run_filter",
    "PredictedProfile",
    "ProductLabeling",
    "build_product",
    "is_valid_second_factor",
    "predicted_profile",
    "DEFAULT_CEILING",
    "SearchReport",
    "SearchSpec",
    "enumerate_digon_free",
    "graph_at_index",
    "random_acyclic",
    "random_digon_free",
    "random_tournament",
    "random_triangle_free",
    "run_search",
    "space_size",
    "INFINITE_GIRTH",
    "DiamondWitness",
    "diamond_base_targets",
    "diamond_witnesses",
    "has_directed_cycle",
    "has_transitive_triangle",
    "is_strongly_connected",
    "min_outdegree_vertex",
    "triangle_base_count",
    "underlying_girth",
    "parse_digraph",
    "write_digraph",
    "__version__",
]
