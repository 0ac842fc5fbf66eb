"""Dense subgraphs that stay well connected.

Exact densest subgraph, vertex/edge connectivity with certificates,
Mader-type subgraph extraction and approximation algorithms for the densest
k-vertex-connected and k-edge-connected subgraph problems.
"""

from .connectivity import (
    ConnectivityReport,
    CutCertificate,
    SeparatorCertificate,
    connectivity_report,
    edge_connectivity,
    maximal_k_edge_connected,
    maximal_k_vertex_connected,
    most_connected_edge,
    most_connected_vertex,
    vertex_connectivity,
)
from .densest import DensestResult, densest_exact, densest_greedy
from .errors import (
    DenseAnchorError,
    DomainError,
    GraphParseError,
    GraphValidationError,
    InternalInvariantError,
    OracleBudgetError,
    ParameterError,
)
from .graph import (
    VertexSet,
    WeightedGraph,
    connected_components,
    density,
    extreme_weights,
    induced,
    min_weighted_degree,
    weighted_degree,
)
from .io import MultiEdgeWeightWarning, export_dot, export_edgelist, load_edge_list
from .mader import MaderResult, MaderThreshold, mader_edge_subgraph, mader_subgraph, peel
from .solvers import (
    Guarantee,
    Mode,
    ProblemSpec,
    SolveOutcome,
    Status,
    approx_edge,
    approx_vertex,
    bicriteria_edge,
    bicriteria_vertex,
    solve,
)

__version__ = "0.1.0"

__all__ = [
    "ConnectivityReport",
    "CutCertificate",
    "DenseAnchorError",
    "DensestResult",
    "DomainError",
    "GraphParseError",
    "GraphValidationError",
    "Guarantee",
    "InternalInvariantError",
    "MaderResult",
    "MaderThreshold",
    "Mode",
    "MultiEdgeWeightWarning",
    "OracleBudgetError",
    "ParameterError",
    "ProblemSpec",
    "SeparatorCertificate",
    "SolveOutcome",
    "Status",
    "VertexSet",
    "WeightedGraph",
    "approx_edge",
    "approx_vertex",
    "bicriteria_edge",
    "bicriteria_vertex",
    "connected_components",
    "connectivity_report",
    "densest_exact",
    "densest_greedy",
    "density",
    "edge_connectivity",
    "export_dot",
    "export_edgelist",
    "extreme_weights",
    "induced",
    "load_edge_list",
    "mader_edge_subgraph",
    "mader_subgraph",
    "maximal_k_edge_connected",
    "maximal_k_vertex_connected",
    "min_weighted_degree",
    "most_connected_edge",
    "most_connected_vertex",
    "peel",
    "solve",
    "vertex_connectivity",
    "weighted_degree",
]
