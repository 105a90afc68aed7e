"""Exact positivity analysis of graph-associated 2-step nilpotent Lie algebras."""

from .coherence import coherent_decomposition, reduced_system, similar_edge_classes, solve_reduced
from .errors import (
    EmptySystem,
    GraphError,
    NilgraphError,
    ParseError,
    QTooSmall,
    SingularMatrix,
    TheoremViolation,
    UnknownFamily,
    UnsupportedRegime,
)
from .families import FAMILIES, get_family, realize
from .graph import Graph, is_connected, lie_type, parse_edge_list
from .kernels import BACKEND
from .linalg import RationalMatrix, leading_principal_minors, solve
from .positivity import PositivityReport, Verdict, check_positive, edge_weights, positivity_matrix
from .theorem import run_theorem

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "FAMILIES", "EmptySystem", "Graph", "GraphError", "NilgraphError", "ParseError",
    "PositivityReport", "QTooSmall", "RationalMatrix", "SingularMatrix", "TheoremViolation",
    "UnknownFamily", "UnsupportedRegime", "Verdict", "check_positive", "coherent_decomposition",
    "edge_weights", "get_family", "is_connected", "leading_principal_minors", "lie_type",
    "parse_edge_list", "positivity_matrix", "realize", "reduced_system", "run_theorem",
    "similar_edge_classes", "solve", "solve_reduced",
]
