"""Topological containment engine for W4 and K5-minus-an-edge subdivisions.

Detects H-subdivisions in simple undirected graphs and, for any input graph,
extracts either a verified K5-minus certificate or a witness that the graph
is not 4-connected.
"""

from .graphs import (
    Graph,
    GraphError,
    MalformedEncoding,
    OutOfRange,
    SelfLoop,
    build_graph,
    induced_subgraph,
    parse_edge_list,
    parse_graph6,
    write_edge_list,
    write_graph6,
)
from .connectivity import (
    PathSystem,
    Separator,
    fan,
    find_separator,
    max_disjoint_paths,
    vertex_connectivity,
)
from .patterns import C4, K5, K5_MINUS, W4, Embedding, Pattern, verify_embedding
from .finder import (
    BudgetExceeded,
    BudgetTracker,
    SearchBudget,
    backend_for,
    compiled_available,
    find_subdivision,
)
from .oracle import TooLarge, oracle_contains

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "GraphError",
    "MalformedEncoding",
    "OutOfRange",
    "SelfLoop",
    "build_graph",
    "induced_subgraph",
    "parse_graph6",
    "write_graph6",
    "parse_edge_list",
    "write_edge_list",
    "PathSystem",
    "Separator",
    "fan",
    "find_separator",
    "max_disjoint_paths",
    "vertex_connectivity",
    "Pattern",
    "Embedding",
    "verify_embedding",
    "W4",
    "K5",
    "K5_MINUS",
    "C4",
    "SearchBudget",
    "BudgetExceeded",
    "BudgetTracker",
    "find_subdivision",
    "backend_for",
    "compiled_available",
    "oracle_contains",
    "TooLarge",
    "__version__",
]
