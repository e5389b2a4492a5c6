"""Exact solvers and theorem checks for majority out-dominating sets in digraphs."""
from .bounds import BoundEntry, BoundReport, bound_report, longest_directed_cycle, longest_directed_path
from .digraph import (
    Digraph,
    Graph,
    Orientation,
    closed_out_neighborhood,
    induced_subdigraph,
    private_out_neighbors,
)
from .errors import (
    GraphError,
    LimitExceeded,
    MajdomError,
    NotAMODSError,
    ParseError,
)
from .families import make_family
from .io import format_instance, load_instance, parse_instance
from .orientation import (
    check_conjecture,
    check_dom1_bipartite,
    check_ivt,
    construct_named_orientation,
    dom_via_theorem,
    spectrum,
    upper_orientable,
)
from .perturbation import critical_arcs, is_critical_arc_characterized, is_critical_arc_direct, perturb
from .solver import (
    SolveResult,
    coverage_loss,
    enumerate_minimal_mods,
    enumerate_minimum_mods,
    gamma_m_plus,
    gamma_m_undirected,
    gamma_plus,
    is_minimal_mods_by_loss,
    is_minimal_mods_characterized,
    is_minimal_mods_direct,
    is_mods,
    majority_threshold,
)
from .vertexset import VertexSet

__version__ = "0.1.0"

__all__ = [
    "BoundEntry", "BoundReport", "Digraph", "Graph", "GraphError", "LimitExceeded", "MajdomError",
    "NotAMODSError", "Orientation", "ParseError", "SolveResult", "VertexSet", "bound_report",
    "check_conjecture", "check_dom1_bipartite", "check_ivt", "closed_out_neighborhood",
    "construct_named_orientation", "coverage_loss", "critical_arcs", "dom_via_theorem",
    "enumerate_minimal_mods", "enumerate_minimum_mods", "format_instance", "gamma_m_plus",
    "gamma_m_undirected", "gamma_plus", "induced_subdigraph", "is_critical_arc_characterized",
    "is_critical_arc_direct", "is_minimal_mods_by_loss", "is_minimal_mods_characterized",
    "is_minimal_mods_direct", "is_mods", "load_instance", "longest_directed_cycle",
    "longest_directed_path", "majority_threshold", "make_family", "parse_instance", "perturb",
    "private_out_neighbors", "spectrum", "upper_orientable",
]
