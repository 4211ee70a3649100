"""Exact and simulated path homology of acyclic digraphs."""

from .chain import (
    ChainComplex,
    GammaBasis,
    build_complex,
    hodge_laplacian_gamma,
    projection_matrix,
    verify_dual_commutation,
)
from .digraph import Digraph, parse_digraph, parse_edge_list, parse_json
from .oracle import betti_omega
from .paths import Chain, boundary, enumerate_allowed, enumerate_regular
from .qsim import (
    PhaseEstimationConfig,
    QubitEncoding,
    complexity_report,
    run_phase_estimation,
)
from .spectral import betti_numbers, hodge_decomposition_check

__version__ = "0.1.0"

__all__ = [
    "Chain",
    "ChainComplex",
    "Digraph",
    "GammaBasis",
    "PhaseEstimationConfig",
    "QubitEncoding",
    "betti_numbers",
    "betti_omega",
    "boundary",
    "build_complex",
    "complexity_report",
    "enumerate_allowed",
    "enumerate_regular",
    "hodge_decomposition_check",
    "hodge_laplacian_gamma",
    "parse_digraph",
    "parse_edge_list",
    "parse_json",
    "projection_matrix",
    "run_phase_estimation",
    "verify_dual_commutation",
]
