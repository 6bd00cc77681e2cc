"""Proper Hamiltonian cycles in edge-colored multigraphs: data model, exact
search, constructive solvers, extremal families and a verification harness."""

from .constructive import (
    check_hypotheses,
    degree_one_lemma,
    lemma_cycle_insertion,
    lift_cycle,
    reduce_color_count,
    solve_2col_edges,
    solve_2col_rainbow,
    solve_ccol_edges,
    solve_ccol_rainbow,
)
from .errors import HypothesisViolation, InputError, LiftError, NoAdmissibleMerge
from .exact import (
    Budget,
    SearchConstraints,
    SolveOutcome,
    Status,
    find_ham_cycle_simple,
    find_proper_cycle_of_length,
    find_proper_ham_cycle,
    find_proper_path,
    has_perfect_matching_in_color,
)
from .extremal import generate, rainbow_complete
from .graph import (
    ColoredMultigraph,
    ContractionRule,
    CycleCertificate,
    PathCertificate,
    colored_degree,
    complement,
    contract,
    merge_colors,
    rainbow_degree,
    rainbow_degree_graph,
    verify_proper_cycle,
    verify_proper_path,
)
from .io import export_dot, parse_graph_json, serialize_graph_json

__all__ = [
    "check_hypotheses",
    "degree_one_lemma",
    "lemma_cycle_insertion",
    "lift_cycle",
    "reduce_color_count",
    "solve_2col_edges",
    "solve_2col_rainbow",
    "solve_ccol_edges",
    "solve_ccol_rainbow",
    "HypothesisViolation",
    "InputError",
    "LiftError",
    "NoAdmissibleMerge",
    "Budget",
    "SearchConstraints",
    "SolveOutcome",
    "Status",
    "find_ham_cycle_simple",
    "find_proper_cycle_of_length",
    "find_proper_ham_cycle",
    "find_proper_path",
    "has_perfect_matching_in_color",
    "generate",
    "rainbow_complete",
    "ColoredMultigraph",
    "ContractionRule",
    "CycleCertificate",
    "PathCertificate",
    "colored_degree",
    "complement",
    "contract",
    "merge_colors",
    "rainbow_degree",
    "rainbow_degree_graph",
    "verify_proper_cycle",
    "verify_proper_path",
    "export_dot",
    "parse_graph_json",
    "serialize_graph_json",
]

__version__ = "0.1.0"
