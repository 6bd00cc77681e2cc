from ._common import FALLBACK_TAG
from .hypotheses import THEOREMS, HypothesisReport, check_hypotheses, cycle_length, edge_threshold
from .lemmas import admissible_merges, lemma_cycle_insertion, lift_cycle, reduce_color_count, splice_edge
from .many_colors import GEN_TAGS, RD3_TAGS, degree_one_lemma, solve_ccol_edges, solve_ccol_rainbow
from .two_colors import RD2_TAGS, S1_TAGS, solve_2col_edges, solve_2col_rainbow

SOLVERS = {
    "s1": solve_2col_edges,
    "2colrd2": solve_2col_rainbow,
    "3colgen": solve_ccol_edges,
    "3colrd3": solve_ccol_rainbow,
}

TAGS = {"s1": S1_TAGS, "2colrd2": RD2_TAGS, "3colgen": GEN_TAGS, "3colrd3": RD3_TAGS}

__all__ = [
    "FALLBACK_TAG", "THEOREMS", "HypothesisReport", "check_hypotheses", "cycle_length", "edge_threshold",
    "admissible_merges", "lemma_cycle_insertion", "lift_cycle", "reduce_color_count", "splice_edge",
    "GEN_TAGS", "RD3_TAGS", "RD2_TAGS", "S1_TAGS", "SOLVERS", "TAGS",
    "degree_one_lemma", "solve_ccol_edges", "solve_ccol_rainbow", "solve_2col_edges", "solve_2col_rainbow",
]
