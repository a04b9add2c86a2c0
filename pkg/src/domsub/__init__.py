"""Exact domination, subdivision and multisubdivision numbers of small graphs."""

from .domination import (
    DominatingSet,
    GammaResult,
    gamma,
    gamma_bruteforce,
    gamma_forced,
    gamma_tree,
    is_dominating,
    no_gamma_set_vertices,
)
from .errors import (
    DomsubError,
    EdgeNotPresentError,
    InputError,
    NotATreeError,
    NotConnectedError,
    PreconditionError,
    SolverTimeout,
    TheoremViolation,
)
from .graph import Graph, parse_edge_list, read_edge_list, format_edge_list, subdivide, subdivide_edges, to_dot
from .reduction import CnfFormula, build_reduction, parse_dimacs, verify_biconditional
from .subdivision import MsdReport, SdReport, msd, msd_edge, sd
from .trees import (
    Status,
    TreeClassification,
    TreeStatusLabeling,
    build_family_f,
    classify_tree,
    recognize_family_f,
    verify_labeling,
)

__version__ = "0.1.0"

__all__ = [
    "CnfFormula",
    "DominatingSet",
    "DomsubError",
    "EdgeNotPresentError",
    "GammaResult",
    "Graph",
    "InputError",
    "MsdReport",
    "NotATreeError",
    "NotConnectedError",
    "PreconditionError",
    "SdReport",
    "SolverTimeout",
    "Status",
    "TheoremViolation",
    "TreeClassification",
    "TreeStatusLabeling",
    "build_family_f",
    "build_reduction",
    "classify_tree",
    "format_edge_list",
    "gamma",
    "gamma_bruteforce",
    "gamma_forced",
    "gamma_tree",
    "is_dominating",
    "msd",
    "msd_edge",
    "no_gamma_set_vertices",
    "parse_dimacs",
    "parse_edge_list",
    "read_edge_list",
    "recognize_family_f",
    "sd",
    "subdivide",
    "subdivide_edges",
    "to_dot",
    "verify_biconditional",
    "verify_labeling",
]
