import random

import pytest
from hypothesis import given, settings, strategies as st

from propercycles.constructive import (
    FALLBACK_TAG,
    SOLVERS,
    TAGS,
    check_hypotheses,
    cycle_length,
    degree_one_lemma,
    edge_threshold,
    solve_2col_edges,
    solve_2col_rainbow,
    solve_ccol_edges,
    solve_ccol_rainbow,
)
from propercycles.errors import InputError
from propercycles.exact import Status, find_proper_cycle_of_length
from propercycles.extremal import (
    extremal_2col_edges,
    extremal_2col_rainbow,
    extremal_ccol_edges,
    extremal_ccol_rainbow,
    rainbow_complete,
)
from propercycles.graph import ColoredMultigraph, colored_degree, verify_proper_cycle
from propercycles.harness import (
    CorpusSpec,
    branch_coverage,
    coverage_graphs,
    parallel_class_graph,
    sample_graph,
    scarce_color_graph,
)


def assert_sound(g, theorem, out):
    assert out.status is Status.FOUND, out
    cert = out.certificate
    assert verify_proper_cycle(g, cert)
    assert len(cert) == cycle_length(theorem, g.n)
    if g.c == 2:
        assert len(cert) % 2 == 0
    assert out.trace and set(t.split(":")[-1] for t in out.trace) <= set().union(*TAGS.values())
    assert FALLBACK_TAG not in out.trace


# -- hypotheses ---------------------------------------------------------------


def test_hypothesis_examples():
    rep = check_hypotheses(extremal_2col_edges(6)[0], "s1")
    assert not rep.satisfied
    assert rep.violations == (("edge-count", {"required": 26, "actual": 25}),)
    assert check_hypotheses(rainbow_complete(6, 2), "s1").satisfied
    rep = check_hypotheses(extremal_ccol_rainbow(5, 3)[0], "3colrd3")
    assert [name for name, _ in rep.violations] == ["edge-count"]
    assert rep.violations[0][1] == {"required": 22, "actual": 21}


def test_hypothesis_report_shape():
    rep = check_hypotheses(ColoredMultigraph(4, 2, [(0, 1, 1)]), "3colrd3")
    names = [name for name, _ in rep.violations]
    assert names == ["color-count", "edge-count", "rainbow-degree", "connected"]
    assert rep.to_dict()["satisfied"] is False
    assert check_hypotheses(rainbow_complete(10, 3), "conjecture").violations == ()


def test_c_range_enforced_per_statement():
    assert not check_hypotheses(rainbow_complete(5, 5), "3colgen").satisfied
    assert check_hypotheses(rainbow_complete(5, 5), "3colrd3").satisfied


def test_unknown_theorem():
    with pytest.raises(InputError):
        check_hypotheses(rainbow_complete(4, 2), "s2")


@pytest.mark.parametrize("theorem,n,c,value", [
    ("s1", 6, 2, 26), ("2colrd2", 10, 2, 76), ("3colgen", 5, 3, 23), ("3colrd3", 5, 3, 22), ("conjecture", 10, 3, 97),
])
def test_thresholds(theorem, n, c, value):
    assert edge_threshold(theorem, n, c) == value


# -- solvers ------------------------------------------------------------------


@pytest.mark.parametrize("theorem,n,c", [("s1", 6, 2), ("s1", 7, 2), ("2colrd2", 10, 2), ("2colrd2", 11, 2),
                                         ("3colgen", 5, 3), ("3colgen", 6, 4), ("3colrd3", 5, 3), ("3colrd3", 6, 4)])
def test_seeded_samples_are_solved(theorem, n, c):
    spec = CorpusSpec(theorem, (n,), (c,), 15, seed=17)
    for i in range(len(spec)):
        g = sample_graph(spec, i)
        out = SOLVERS[theorem](g)
        assert_sound(g, theorem, out)
        assert find_proper_cycle_of_length(g, cycle_length(theorem, n)).found


def test_odd_orders_give_short_even_cycles():
    out = solve_2col_edges(sample_graph(CorpusSpec("s1", (7,), samples=1), 0))
    assert len(out.certificate) == 6
    out = solve_2col_rainbow(sample_graph(CorpusSpec("2colrd2", (11,), samples=1), 0))
    assert len(out.certificate) == 10


@pytest.mark.parametrize("solver,g", [
    (solve_2col_edges, extremal_2col_edges(6)[0]),
    (solve_2col_rainbow, extremal_2col_rainbow(10)[0]),
    (solve_ccol_edges, extremal_ccol_edges(5, 3)[0]),
    (solve_ccol_rainbow, extremal_ccol_rainbow(5, 3)[0]),
])
def test_extremal_graphs_violate(solver, g):
    out = solver(g)
    assert out.status is Status.HYPOTHESIS_VIOLATION
    assert out.witness["violations"][0]["hypothesis"] == "edge-count"


def test_color_merge_route():
    g = sample_graph(CorpusSpec("3colgen", (6,), (4,), 1, seed=3), 0)
    out = solve_ccol_edges(g)
    assert_sound(g, "3colgen", out)
    assert out.trace[0] == "merge-color"


@pytest.mark.parametrize("pendant", [True, False])
@pytest.mark.parametrize("n,c", [(5, 4), (7, 5)])
def test_parallel_class_branches(n, c, pendant):
    g = parallel_class_graph(n, c, pendant)
    out = solve_ccol_edges(g)
    assert_sound(g, "3colgen", out)
    assert out.trace == ("not-2connected-branch" if pendant else "2connected-branch",)


@pytest.mark.parametrize("case", "abc")
def test_scarce_color_cases(case):
    g = scarce_color_graph(11, case)
    out = solve_2col_rainbow(g)
    assert_sound(g, "2colrd2", out)
    assert out.trace == ("contract-2colrd2", "rd-drop", f"case-{case}")


def test_degree_one_route_through_rainbow_solver():
    spec = CorpusSpec("3colrd3", (6,), (3,), 60, seed=0, offsets=(0, 1), style="degree-one")
    hits = [i for i in range(len(spec)) if "degree-one-lemma" in solve_ccol_rainbow(sample_graph(spec, i)).trace]
    assert len(hits) >= 3


def test_degree_one_lemma_direct():
    full = rainbow_complete(6, 3)
    # vertex 0 keeps one red edge, to 1
    g = ColoredMultigraph(6, 3, [e for e in full.edges if not (e[0] == 0 and e[2] == 1 and e[1] != 1)])
    assert colored_degree(g, 0, 1) == 1
    out = degree_one_lemma(g, 0, 1)
    assert_sound(g, "3colrd3", out)
    assert out.trace[:2] == ("degree-one-lemma", "lemma-contract")
    with pytest.raises(InputError):
        degree_one_lemma(g, 0, 2)


@pytest.mark.parametrize("theorem", sorted(SOLVERS))
def test_every_branch_is_reached(theorem):
    cov = branch_coverage(theorem, coverage_graphs(theorem))
    assert cov.unhit == (), cov.counts
    assert FALLBACK_TAG not in cov.counts


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(["s1", "3colgen", "3colrd3"]), st.integers(0, 2**32), st.sampled_from(["uniform", "star", "degree-one"]))
def test_soundness_and_agreement(theorem, seed, style):
    rng = random.Random(seed)
    n = rng.randint(4, 8) if theorem == "s1" else rng.randint(5, 7)
    c = 2 if theorem == "s1" else rng.choice([3, 4])
    g = sample_graph(CorpusSpec(theorem, (n,), (c,), 1, seed, (0, 4), style), 0)
    out = SOLVERS[theorem](g)
    assert_sound(g, theorem, out)
