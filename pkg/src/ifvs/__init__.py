"""Exact solvers for the independent feedback vertex set problem.

The package decides, for a graph ``G`` and budget ``k``, whether some
vertex set of size at most ``k`` is simultaneously independent and a
feedback vertex set, and produces a certificate when one exists.  Plain
feedback vertex set instances are handled through the edge-subdivision
reduction.  Brute-force oracles back the differential test suite.
"""

from .binarize import (
    BinaryForest,
    BinaryNode,
    NotAForestError,
    RootedForest,
    binarize,
    contract_white_chains,
    dump_forest,
    root_forest,
)
from .compression import SolveOutcome, SolveStats, decide_prefix_chain, solve_ifvs
from .extension import (
    INFEASIBLE,
    Candidate,
    DpSolveResult,
    DpTables,
    ExtensionOutcome,
    InvalidForestError,
    NotAnFvsError,
    compute_tables,
    direct_component_links,
    dp_solve,
    enumerate_candidates,
    min_ifvs_given_fvs,
)
from .generator import generate
from .graph import Graph, GraphError, bits, mask_of
from .io import ParseError, format_edgelist, load_graph, parse_dimacs, parse_edgelist
from .oracle import (
    TooLargeError,
    brute_min_fvs,
    brute_min_ifvs,
    brute_min_ifvs_extension,
)
from .reduction import SubdivisionMap, solve_fvs, subdivide

__version__ = "0.1.0"

__all__ = [
    "BinaryForest",
    "BinaryNode",
    "Candidate",
    "DpSolveResult",
    "DpTables",
    "ExtensionOutcome",
    "Graph",
    "GraphError",
    "INFEASIBLE",
    "InvalidForestError",
    "NotAForestError",
    "NotAnFvsError",
    "ParseError",
    "RootedForest",
    "SolveOutcome",
    "SolveStats",
    "SubdivisionMap",
    "TooLargeError",
    "binarize",
    "bits",
    "brute_min_fvs",
    "brute_min_ifvs",
    "brute_min_ifvs_extension",
    "compute_tables",
    "contract_white_chains",
    "decide_prefix_chain",
    "direct_component_links",
    "dp_solve",
    "dump_forest",
    "enumerate_candidates",
    "format_edgelist",
    "generate",
    "load_graph",
    "mask_of",
    "min_ifvs_given_fvs",
    "parse_dimacs",
    "parse_edgelist",
    "root_forest",
    "solve_fvs",
    "solve_ifvs",
    "subdivide",
]
