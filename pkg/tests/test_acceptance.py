"""Acceptance criteria 1-10, each at its stated size and time limit.

Every criterion prints one PASS/FAIL line (also repeated in the pytest
terminal summary).  Run alone with ``pytest tests/test_acceptance.py -s``.
"""

import random
import time
from functools import lru_cache
from itertools import product
from math import comb

import pytest

from acceptance_log import record
from instances import insertion_instance, merge_instance
from oracles import brute_proper_cycle, naive_verify, nx_biconnected, nx_connected, nx_perfect_matching
from propercycles.constructive import (
    check_hypotheses,
    cycle_length,
    lemma_cycle_insertion,
    lift_cycle,
    reduce_color_count,
    solve_2col_edges,
    solve_2col_rainbow,
    solve_ccol_edges,
    solve_ccol_rainbow,
)
from propercycles.errors import HypothesisViolation
from propercycles.exact import Budget, find_proper_cycle_of_length, find_proper_ham_cycle
from propercycles.extremal import (
    extremal_2col_edges,
    extremal_2col_rainbow,
    extremal_ccol_edges,
    extremal_ccol_rainbow,
    extremal_conjecture,
)
from propercycles.graph import ColoredMultigraph, rainbow_degree_graph, verify_proper_cycle
from propercycles.harness import STYLES, CorpusSpec, sample_graph

pytestmark = pytest.mark.acceptance

SOLVER = {"s1": solve_2col_edges, "2colrd2": solve_2col_rainbow, "3colgen": solve_ccol_edges, "3colrd3": solve_ccol_rainbow}
PAIRS = [(5, 3), (6, 3), (6, 4)]


def _split(total):
    """Per-style sample counts adding up to ``total``."""
    base = [total // len(STYLES)] * len(STYLES)
    for i in range(total - sum(base)):
        base[i] += 1
    return dict(zip(STYLES, base))


@lru_cache(maxsize=None)
def positive_sweep(theorem, n, c, total, seed=2024):
    """Solve every instance of a mixed-style corpus and cross-check it.

    Returns (instances, problems, traces, c=2 cycle lengths, seconds).
    """
    start = time.perf_counter()
    problems, traces, lengths, count = [], [], [], 0
    for style, samples in _split(total).items():
        spec = CorpusSpec(theorem, (n,), (c,), samples, seed, style=style)
        for i in range(samples):
            g = sample_graph(spec, i)
            count += 1
            tag = f"{style}#{i}"
            if not check_hypotheses(g, theorem).satisfied:
                problems.append(f"{tag}: sampled graph misses the hypotheses")
                continue
            out = SOLVER[theorem](g)
            exact = find_proper_cycle_of_length(g, cycle_length(theorem, n))
            traces.append(out.trace)
            if not out.found:
                problems.append(f"{tag}: solver returned {out.status.value}")
                continue
            cert = out.certificate
            if not naive_verify(g, list(cert.vertices), list(cert.edge_colors), closed=True):
                problems.append(f"{tag}: certificate rejected by the reference verifier")
            if len(cert) != cycle_length(theorem, n):
                problems.append(f"{tag}: length {len(cert)}")
            if not exact.found:
                problems.append(f"{tag}: exact solver says {exact.status.value}")
            if c == 2:
                lengths.append(len(cert))
    return count, tuple(problems), tuple(traces), tuple(lengths), time.perf_counter() - start


def _tight(g, spec, theorem, expected_m, budget=None):
    """(edge count ok, one below the bound, exact infeasible, seconds)."""
    start = time.perf_counter()
    out = find_proper_cycle_of_length(g, cycle_length(theorem, g.n), budget)
    return (
        g.m == expected_m,
        not check_hypotheses(g, theorem).satisfied,
        out.status.value == "infeasible",
        time.perf_counter() - start,
    )


def test_criterion_1_s1_tightness():
    start = time.perf_counter()
    bad = []
    for n in (4, 6, 8):
        g, spec = extremal_2col_edges(n)
        m_ok, below, infeasible, _ = _tight(g, spec, "s1", 2 * comb(n - 1, 2) + n - 1)
        brute_agrees = n > 6 or not brute_proper_cycle(g)  # permutation check where affordable
        if not (m_ok and below and infeasible and brute_agrees):
            bad.append(n)
    seconds = time.perf_counter() - start
    ok = not bad and seconds < 30
    record(1, ok, f"s1 extremal n=4,6,8 exact edge counts and no PHC; bad={bad}; {seconds:.2f}s (< 30 s)")
    assert ok


def test_criterion_2_s1_positive_sweep():
    total_seconds, bad, count = 0.0, [], 0
    for n in (4, 5, 6, 7, 8):
        k, problems, _, _, seconds = positive_sweep("s1", n, 2, 300)
        count += k
        total_seconds += seconds
        bad += [f"n={n} {p}" for p in problems]
    ok = not bad and count == 1500 and total_seconds < 300
    record(2, ok, f"s1 sweep {count} instances, {len(bad)} problems; {total_seconds:.1f}s (< 300 s)")
    assert ok, bad[:5]


def test_criterion_3_2colrd2():
    g, spec = extremal_2col_rainbow(10)
    m_ok, below, infeasible, seconds = _tight(g, spec, "2colrd2", 75)
    shape = m_ok and rainbow_degree_graph(g) == 2 and not nx_perfect_matching(g, 2)
    bad, count = [], 0
    for n in (9, 10):
        k, problems, _, _, secs = positive_sweep("2colrd2", n, 2, 100)
        count += k
        seconds += secs
        bad += [f"n={n} {p}" for p in problems]
    ok = shape and below and infeasible and not bad and seconds < 300
    record(3, ok, f"2colrd2 extremal(10) m={g.m}, rd=2, no blue matching, infeasible={infeasible}; "
                  f"{count} positives, {len(bad)} problems; {seconds:.1f}s (< 300 s)")
    assert ok, bad[:5]


def _many_colors(theorem, builder, expected_m, extra):
    start = time.perf_counter()
    bad, count, traces = [], 0, []
    for n, c in PAIRS:
        g, spec = builder(n, c)
        m_ok, below, infeasible, _ = _tight(g, spec, theorem, expected_m(n, c))
        if not (m_ok and below and infeasible and extra(g, c)):
            bad.append(f"extremal ({n},{c})")
        k, problems, tr, _, _ = positive_sweep(theorem, n, c, 200)
        count += k
        traces += tr
        bad += [f"({n},{c}) {p}" for p in problems]
    return bad, count, traces, time.perf_counter() - start


def test_criterion_4_3colgen():
    bad, count, _, seconds = _many_colors(
        "3colgen", extremal_ccol_edges, lambda n, c: c * comb(n - 1, 2) + n - 1, lambda g, c: True
    )
    ok = not bad and count == 600 and seconds < 600
    record(4, ok, f"3colgen extremal (5,3),(6,3),(6,4) tight; {count} positives, {len(bad)} problems; {seconds:.1f}s (< 600 s)")
    assert ok, bad[:5]


def test_criterion_5_3colrd3():
    bad, count, traces, seconds = _many_colors(
        "3colrd3", extremal_ccol_rainbow, lambda n, c: c * comb(n - 1, 2) + c,
        lambda g, c: rainbow_degree_graph(g) == c and not nx_biconnected(g),
    )
    lemma_hits = sum(any(t.endswith("degree-one-lemma") for t in trace) for trace in traces)
    ok = not bad and count == 600 and lemma_hits >= 5 and seconds < 600
    record(5, ok, f"3colrd3 extremal tight, rd=c, not 2-connected; {count} positives, {len(bad)} problems, "
                  f"{lemma_hits} through the degree-one lemma (>= 5); {seconds:.1f}s (< 600 s)")
    assert ok, bad[:5]


def test_criterion_6_cycle_insertion():
    start = time.perf_counter()
    bad = 0
    for seed in range(1000):
        g, cyc, x, y, color, _ = insertion_instance(random.Random(seed), True)
        grown = lemma_cycle_insertion(g, cyc, x, y, color)
        vs, cs = list(grown.vertices), list(grown.edge_colors)
        pos = vs.index(x)
        through = y in (vs[pos - 1], vs[(pos + 1) % len(vs)])
        if not (len(vs) == len(cyc) + 2 and naive_verify(g, vs, cs, closed=True) and through):
            bad += 1
    for seed in range(1000, 2000):
        g, cyc, x, y, color, count = insertion_instance(random.Random(seed), False)
        try:
            lemma_cycle_insertion(g, cyc, x, y, color)
            bad += 1
        except HypothesisViolation as exc:
            bad += exc.witness["sum"] != count
    seconds = time.perf_counter() - start
    ok = bad == 0 and seconds < 60
    record(6, ok, f"cycle insertion 1000 satisfied + 1000 violating, {bad} problems; {seconds:.1f}s (< 60 s)")
    assert ok


def test_criterion_7_color_merge():
    start = time.perf_counter()
    rng = random.Random(7)
    bad, lifts = 0, 0
    for _ in range(500):
        c = rng.choice([4, 5])
        g, ell = merge_instance(rng, rng.randint(5, 6), c)
        rd = rainbow_degree_graph(g)
        merged, rec = reduce_color_count(g, ell)
        fine = nx_connected(merged) and merged.m >= (c - 1) * ell + 1 and merged.c == c - 1
        if rd == c:
            fine = fine and rainbow_degree_graph(merged) == c - 1
        out = find_proper_ham_cycle(merged)
        if out.found:
            lifted = lift_cycle(rec, g, out.certificate)
            lifts += 1
            fine = fine and naive_verify(g, list(lifted.vertices), list(lifted.edge_colors), closed=True)
        bad += not fine
    seconds = time.perf_counter() - start
    ok = bad == 0 and lifts > 0 and seconds < 120
    record(7, ok, f"color merge 500 instances, {bad} problems, {lifts} lifts verified; {seconds:.1f}s (< 120 s)")
    assert ok


def test_criterion_8_parity():
    lengths = []
    for n in (4, 5, 6, 7, 8):
        lengths += positive_sweep("s1", n, 2, 300)[3]
    for n in (9, 10):
        lengths += positive_sweep("2colrd2", n, 2, 100)[3]
    odd = sum(L % 2 for L in lengths)
    ok = odd == 0 and len(lengths) == 1700
    record(8, ok, f"{len(lengths)} two-colored certificates, {odd} of odd length")
    assert ok


def test_criterion_9_conjecture_construction():
    g, spec = extremal_conjecture(10, 3)
    start = time.perf_counter()
    out = find_proper_ham_cycle(g, Budget(max_seconds=120))
    seconds = time.perf_counter() - start
    ok = g.m == 96 and rainbow_degree_graph(g) == 3 and nx_biconnected(g) and out.status.value == "infeasible"
    record(9, ok, f"conjecture extremal (10,3) m={g.m}, rd=3, 2-connected, {out.status.value} in {seconds:.2f}s (budget 120 s)")
    assert ok


def test_criterion_10_exhaustive_n4():
    start = time.perf_counter()
    slots = [(u, v, k) for u in range(4) for v in range(u + 1, 4) for k in (1, 2)]
    bad, count = 0, 0
    for mask in product((False, True), repeat=len(slots)):
        g = ColoredMultigraph(4, 2, [e for e, keep in zip(slots, mask) if keep])
        count += 1
        out = find_proper_ham_cycle(g)
        if out.found != brute_proper_cycle(g):
            bad += 1
        elif out.found and not verify_proper_cycle(g, out.certificate):
            bad += 1
    seconds = time.perf_counter() - start
    ok = bad == 0 and count == 4096 and seconds < 120
    record(10, ok, f"all {count} two-colored multigraphs on 4 vertices, {bad} disagreements with brute force; {seconds:.1f}s (< 120 s)")
    assert ok
