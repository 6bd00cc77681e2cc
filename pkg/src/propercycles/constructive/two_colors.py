"""Constructions for two-colored multigraphs (colors 1 and 2).

Both follow an induction on ``n`` that contracts three vertices into one,
solves the smaller instance and expands the contracted vertex again.  On odd
``n`` the promised cycle has length ``n - 1``, and when the smaller cycle
misses the contracted vertex an edge among the three is spliced in instead.
"""

from __future__ import annotations

from math import ceil

from ..errors import HypothesisViolation, LiftError
from ..exact import Budget, SolveOutcome
from ..graph import (
    ColoredMultigraph,
    ContractionRule,
    CycleCertificate,
    colored_degree,
    contract_triple,
    lift_contracted_cycle,
    rainbow_degree,
)
from ._common import ProofGap, Run, anchored_cycle, finish, violation
from .hypotheses import check_hypotheses, cycle_length
from .lemmas import lemma_cycle_insertion, splice_edge

S1_TAGS = frozenset({"base-case-exact", "abou-degree-condition", "contract-s1", "lemma-s0-insert"})
RD2_TAGS = frozenset({
    "base-case-exact", "abou-degree-condition", "contract-2colrd2", "odd-cycle-extend",
    "rd-drop", "case-a", "case-b", "case-c",
})


def _deficient(g: ColoredMultigraph) -> tuple[int, int] | None:
    """Lowest (vertex, color) whose colored degree misses ``ceil((n+1)/2)``."""
    need = ceil((g.n + 1) / 2)
    for x in range(g.n):
        for k in (1, 2):
            if colored_degree(g, x, k) < need:
                return x, k
    return None


def _two_distinct(g, x, a, b):
    """Lowest ``y != z`` with ``c(xy) = a`` and ``c(xz) = b``."""
    for y in g.neighbors(x, a):
        for z in g.neighbors(x, b):
            if z != y:
                return y, z
    raise ProofGap(f"vertex {x} lacks distinct neighbors in both colors")


def _expand_or_none(g, con, sub):
    if con.new_vertex not in sub.vertices:
        return None
    try:
        return lift_contracted_cycle(g, con, sub)
    except LiftError as exc:
        raise ProofGap(str(exc)) from exc


def _restrict(con, sub):
    return CycleCertificate([con.labels[v] for v in sub.vertices], sub.edge_colors)


# -- edge-count bound ---------------------------------------------------------


def solve_2col_edges(g: ColoredMultigraph, budget: Budget | None = None) -> SolveOutcome:
    """Proper Hamiltonian cycle (even ``n``) or proper ``(n-1)``-cycle (odd
    ``n``) in a two-colored multigraph with ``m >= 2*C(n-1,2) + n``."""
    bad = violation(g, "s1")
    if bad is not None:
        return bad
    run = Run(budget)
    return finish(g, "s1", run, lambda: _s1(g, run))


def _s1(g: ColoredMultigraph, run: Run) -> CycleCertificate:
    n = g.n
    if n <= 5:
        run.tag("base-case-exact")
        return run.exact_cycle(g, cycle_length("s1", n))
    low = _deficient(g)
    if low is None:
        run.tag("abou-degree-condition")
        return run.exact_cycle(g, cycle_length("s1", n))
    x, a = low
    b = 3 - a
    y, z = _two_distinct(g, x, a, b)
    run.tag("contract-s1")
    con = contract_triple(g, x, y, z, ContractionRule.crossed(x, y, a, z, b, 2))
    if not check_hypotheses(con.graph, "s1").satisfied:
        raise ProofGap("contracted graph falls below the edge bound")
    sub = _s1(con.graph, run)
    lifted = _expand_or_none(g, con, sub)
    if lifted is not None:
        return lifted
    base = _restrict(con, sub)
    for p, q, k in ((x, y, a), (x, z, b)):
        try:
            grown = lemma_cycle_insertion(g, base, p, q, k)
        except HypothesisViolation:
            continue
        run.tag("lemma-s0-insert")
        return grown
    raise ProofGap("neither xy nor xz can be inserted into the shorter cycle")


# -- rainbow-degree bound -----------------------------------------------------


def solve_2col_rainbow(g: ColoredMultigraph, budget: Budget | None = None) -> SolveOutcome:
    """Same conclusion for rainbow degree 2 and ``m >= C(n,2) + C(n-2,2) + 3``, ``n >= 9``."""
    bad = violation(g, "2colrd2")
    if bad is not None:
        return bad
    run = Run(budget)
    return finish(g, "2colrd2", run, lambda: _rd2(g, run))


def _rd2(g: ColoredMultigraph, run: Run) -> CycleCertificate:
    n = g.n
    length = cycle_length("2colrd2", n)
    if n <= 10:
        run.tag("base-case-exact")
        return run.exact_cycle(g, length)
    low = _deficient(g)
    if low is None:
        run.tag("abou-degree-condition")
        return run.exact_cycle(g, length)
    v, a = low
    b = 3 - a
    w, u = _two_distinct(g, v, a, b)
    run.tag("contract-2colrd2")
    con = contract_triple(g, v, w, u, ContractionRule.crossed(v, w, a, u, b, 2))
    h = con.graph
    if check_hypotheses(h, "2colrd2").satisfied:
        sub = _rd2(h, run)
        lifted = _expand_or_none(g, con, sub)
        if lifted is not None:
            return lifted
        base = _restrict(con, sub)
        for p, q in ((u, v), (u, w), (v, w)):
            for k in g.colors_between(p, q):
                grown = splice_edge(g, base, p, q, k)
                if grown is not None:
                    run.tag("odd-cycle-extend")
                    return grown
        raise ProofGap("no edge among the contracted vertices extends the shorter cycle")
    run.tag("rd-drop")
    return _rd2_direct(g, con, v, a, u, w, length, run)


def _scarce_color(g, x):
    for k in (1, 2):
        if colored_degree(g, x, k) <= 2:
            return k
    return None


def _rd2_direct(g, con, v, a, u, w, length, run) -> CycleCertificate:
    """The contraction lost rainbow degree (or edges), which pins a vertex
    with only one or two edges of some color; route the cycle through one of
    those edges and complete it with a constrained proper path."""
    h = con.graph
    weak = [x for x in range(h.n) if rainbow_degree(h, x) < 2]
    x = None
    if weak:
        if weak[0] == con.new_vertex:
            if not h.neighbor_mask(con.new_vertex, a):
                x = u
            elif not h.neighbor_mask(con.new_vertex, 3 - a):
                x = w
        else:
            x = con.labels[weak[0]]
    if x is None or _scarce_color(g, x) is None:
        x = next((y for y in range(g.n) if y != v and _scarce_color(g, y) is not None), None)
    if x is None:
        raise ProofGap("no vertex with colored degree at most two")
    k = _scarce_color(g, x)
    if x == u:
        run.tag("case-a")
        prefer = [v]
    elif x == w:
        run.tag("case-b")
        prefer = [u]
    else:
        run.tag("case-c")
        prefer = [v]
    cert = anchored_cycle(g, x, k, prefer, length, run)
    if cert is None and length < g.n:
        rest, labels = g.without([x])
        try:
            sub = run.exact_cycle(rest, length)
        except ProofGap:
            sub = None
        if sub is not None:
            cert = CycleCertificate([labels[y] for y in sub.vertices], sub.edge_colors)
    if cert is None:
        raise ProofGap(f"no proper cycle through the scarce edges at {x}")
    return cert
