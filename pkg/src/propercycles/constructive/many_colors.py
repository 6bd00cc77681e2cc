"""Constructions for multigraphs on three or more colors.

With four or more colors, two color classes are merged until three remain.
The three-color arguments contract a pair (or triple) of vertices, recurse
and expand the contracted vertex.  When a vertex keeps only a single edge of
some color the degree-one routine takes over.
"""

from __future__ import annotations

from itertools import combinations, permutations
from math import comb

from ..errors import InputError, LiftError
from ..exact import Budget, SolveOutcome, Status, find_ham_cycle_simple
from ..graph import (
    ColoredMultigraph,
    ContractionRule,
    CycleCertificate,
    colored_degree,
    contract,
    is_2connected,
    lift_contracted_cycle,
    rainbow_degree,
    rainbow_degree_graph,
)
from ._common import OutOfBudget, ProofGap, Run, close_through_segment, finish, join_vertex, violation
from .hypotheses import check_hypotheses, edge_threshold
from .lemmas import admissible_merges, lift_cycle, reduce_color_count

GEN_TAGS = frozenset({
    "merge-color", "not-2connected-branch", "2connected-branch",
    "base-case-exact", "high-degree-vertex", "contract-vw",
})
RD3_TAGS = frozenset({
    "merge-color", "base-case-exact", "all-degrees-large", "high-degree-vertex",
    "contract-vw", "degree-one-lemma", "lemma-contract", "remove-vw-path", "no-triple-contract",
})


def _lift(g, con, sub):
    try:
        return lift_contracted_cycle(g, con, sub)
    except LiftError as exc:
        raise ProofGap(str(exc)) from exc


def _triple_pair(g: ColoredMultigraph, among=None):
    """Lowest pair joined in all three colors (optionally containing ``among``)."""
    for v in range(g.n):
        if among is not None and v != among:
            continue
        for w in range(g.n):
            if w != v and len(g.colors_between(v, w)) == 3 and (among is not None or v < w):
                return v, w
    return None


def _pair_rules(v, w):
    """All ways to hand colors 1..3 to ``v``, ``w`` and their intersection;
    the first one is the assignment written in the argument."""
    roles = [(v,), (w,), (v, w)]
    for perm in permutations(roles):
        yield ContractionRule({1: perm[0], 2: perm[1], 3: perm[2]})


# -- edge-count bound ---------------------------------------------------------


def solve_ccol_edges(g: ColoredMultigraph, budget: Budget | None = None) -> SolveOutcome:
    """Proper Hamiltonian cycle when ``3 <= c < n`` and ``m >= c*C(n-1,2) + n``."""
    bad = violation(g, "3colgen")
    if bad is not None:
        return bad
    run = Run(budget)
    return finish(g, "3colgen", run, lambda: _gen(g, run))


def _gen(g: ColoredMultigraph, run: Run) -> CycleCertificate:
    n, c = g.n, g.c
    if c >= 4:
        target = edge_threshold("3colgen", n, c - 1)
        for merged, record in admissible_merges(g, target, keep_rainbow=False):
            run.tag("merge-color")
            return lift_cycle(record, g, _gen(merged, run))
        return _gen_parallel_classes(g, run)
    if n <= 4:
        run.tag("base-case-exact")
        return run.exact_cycle(g, n)
    pair = _triple_pair(g)
    if pair is None:
        raise ProofGap("no pair of vertices carries all three colors")
    v, w = pair
    for x in (v, w):
        if g.degree(x) >= 3 * n - 4:
            run.tag("high-degree-vertex")
            return join_vertex(g, x, run)
    run.tag("contract-vw")
    for rule in _pair_rules(v, w):
        con = contract(g, (v, w), rule)
        if check_hypotheses(con.graph, "3colgen").satisfied:
            return _lift(g, con, _gen(con.graph, run))
    raise ProofGap("no contraction of the triple pair keeps the edge bound")


def _gen_parallel_classes(g: ColoredMultigraph, run: Run) -> CycleCertificate:
    """No merge keeps the bound, so every two color classes share at least
    ``C(n-1,2) + 1`` vertex pairs.  Work in the simple graph of pairs carrying
    both colors ``j`` and ``l``; the pendant case needs the right pair, so
    pairs are tried in order."""
    n = g.n
    for j, l in combinations(range(1, g.c + 1), 2):
        both = [(u, v, 1) for u in range(n) for v in range(u + 1, n) if g.has_edge(u, v, j) and g.has_edge(u, v, l)]
        if len(both) < comb(n - 1, 2) + 1:
            continue
        simple = ColoredMultigraph(n, 1, both)
        if is_2connected(simple):
            cert = _parallel_cycle(g, simple, j, l, run)
        else:
            cert = _parallel_pendant(g, simple, j, l)
        if cert is not None:
            run.tag("2connected-branch" if is_2connected(simple) else "not-2connected-branch")
            return cert
    raise ProofGap("no pair of colors gives a usable shared-pair graph")


def _alternate(j, l, count):
    return [j if i % 2 == 0 else l for i in range(count)]


def _parallel_pendant(g, simple, j, l):
    """``simple`` is a clique on all but a pendant ``v``: leave ``v`` through
    two colors outside ``{j, l}`` and cross the clique alternating ``j, l``."""
    n = g.n
    for v in range(n):
        rest = [u for u in range(n) if u != v]
        full = sum(1 << u for u in rest)
        if any((simple.neighbor_mask(a) | 1 << a) & full != full for a in rest):
            continue
        ends = [(x, k) for x in rest for k in g.colors_between(v, x) if k not in (j, l)]
        for x, kx in ends:
            for y, ky in ends:
                if x != y and kx != ky:
                    path = [x] + [u for u in rest if u not in (x, y)] + [y]
                    return CycleCertificate([v] + path, [kx] + _alternate(j, l, n - 2) + [ky])
    return None


def _parallel_cycle(g, simple, j, l, run):
    n = g.n
    out = find_ham_cycle_simple(simple, run.budget)
    if out.status is Status.TIMEOUT:
        raise OutOfBudget
    if not out.found:
        raise ProofGap("the shared-pair graph has no Hamiltonian cycle")
    cyc = list(out.certificate.vertices)
    if n % 2 == 0:
        return CycleCertificate(cyc, _alternate(j, l, n))
    for k in range(1, g.c + 1):
        if k in (j, l):
            continue
        for i in range(n):
            if g.has_edge(cyc[i], cyc[(i + 1) % n], k):
                order = cyc[i + 1:] + cyc[: i + 1]
                return CycleCertificate(order, _alternate(j, l, n - 1) + [k])
    return None


# -- rainbow-degree bound -----------------------------------------------------


def solve_ccol_rainbow(g: ColoredMultigraph, budget: Budget | None = None) -> SolveOutcome:
    """Proper Hamiltonian cycle when ``rd = c >= 3`` and ``m >= c*C(n-1,2) + c + 1``."""
    bad = violation(g, "3colrd3")
    if bad is not None:
        return bad
    run = Run(budget)
    return finish(g, "3colrd3", run, lambda: _rd3(g, run))


def _rd3(g: ColoredMultigraph, run: Run) -> CycleCertificate:
    n, c = g.n, g.c
    if c >= 4:
        merged, record = reduce_color_count(g, comb(n - 1, 2) + 1)
        run.tag("merge-color")
        return lift_cycle(record, g, _rd3(merged, run))
    if n <= 5:
        run.tag("base-case-exact")
        return run.exact_cycle(g, n)
    degree = [g.degree(x) for x in range(n)]
    if min(degree) >= 3 * n - 6:
        run.tag("all-degrees-large")
        if not check_hypotheses(g, "3colgen").satisfied:
            raise ProofGap("large degrees did not give the edge-count bound")
        return _gen(g, run.nested("3colgen"))
    v = next(x for x in range(n) if degree[x] <= 3 * n - 7)
    for w in range(n):
        if w != v and degree[w] >= 3 * n - 4:
            run.tag("high-degree-vertex")
            return join_vertex(g, w, run)
    pair = _triple_pair(g, among=v)
    if pair is not None:
        return _rd3_triple(g, v, pair[1], run)
    run.tag("no-triple-contract")
    return _rd3_no_triple(g, v, run)


def _rd3_triple(g, v, w, run) -> CycleCertificate:
    n = g.n
    target = 3 * comb(n - 2, 2) + 4
    for rule in _pair_rules(v, w):
        con = contract(g, (v, w), rule)
        if con.graph.m >= target:
            break
    else:
        raise ProofGap("no contraction of v and w keeps the edge bound")
    h = con.graph
    if rainbow_degree_graph(h) == 3:
        run.tag("contract-vw")
        return _lift(g, con, _rd3(h, run))
    x = next(y for y in range(h.n) if rainbow_degree(h, y) < 3)
    if x != con.new_vertex:
        x = con.labels[x]
        k = next((k for k in (1, 2, 3) if colored_degree(g, x, k) == 1), None)
        if k is None:
            raise ProofGap(f"vertex {x} lost a color without having degree one in it")
        return _degree_one(g, x, k, run)
    for p in (v, w):
        for k in (1, 2, 3):
            if colored_degree(g, p, k) == 1:
                return _degree_one(g, p, k, run)
    run.tag("remove-vw-path")
    return _remove_pair_path(g, v, w, run)


def _remove_pair_path(g, v, w, run) -> CycleCertificate:
    """``v w`` carries all three colors and ``g - {v, w}`` is nearly rainbow
    complete: pick exits ``v'`` and ``w'``, a proper path between them, and
    close through an edge ``vw`` whose color differs from both exits."""
    exits_v = [(x, k) for x in g.neighbors(v) if x != w for k in g.colors_between(v, x)]
    exits_w = [(x, k) for x in g.neighbors(w) if x != v for k in g.colors_between(w, x)]
    for x, kx in exits_v:
        for y, ky in exits_w:
            if x == y:
                continue
            for kvw in g.colors_between(v, w):
                if kvw in (kx, ky):
                    continue
                cert = close_through_segment(g, [x, v, w, y], [kx, kvw, ky], g.n, run)
                if cert is not None:
                    return cert
                break
    raise ProofGap("no exits of v and w close into a proper cycle")


def _rd3_no_triple(g, v, run) -> CycleCertificate:
    """No neighbor of ``v`` carries three parallel edges; contract ``v`` with
    two neighbors as in the degree-one routine and apply the edge bound."""
    for con in _triple_contractions(g, v):
        if check_hypotheses(con.graph, "3colgen").satisfied:
            return _lift(g, con, _gen(con.graph, run.nested("3colgen")))
    raise ProofGap("no contraction around v keeps the edge bound")


def _triple_contractions(g, v):
    centers = [v] + g.neighbors(v)
    for center in centers:
        exits = [(x, k) for x in g.neighbors(center) for k in g.colors_between(center, x)]
        for a, alpha in exits:
            for b, beta in exits:
                if a == b or alpha == beta:
                    continue
                if center != v and v not in (a, b):
                    continue
                rule = ContractionRule.crossed(center, a, alpha, b, beta, 3)
                yield contract(g, (center, a, b), rule)


# -- degree-one lemma -----------------------------------------------------------


def degree_one_lemma(
    g: ColoredMultigraph, x: int, color: int, budget: Budget | None = None
) -> SolveOutcome:
    """Proper Hamiltonian cycle of a three-colored graph meeting the
    rainbow-degree bound in which ``x`` has exactly one edge of ``color``."""
    bad = violation(g, "3colrd3")
    if bad is not None:
        return bad
    if g.c != 3:
        raise InputError("the degree-one routine works on three colors")
    if colored_degree(g, x, color) != 1:
        raise InputError(f"vertex {x} has {colored_degree(g, x, color)} edges of color {color}, not one")
    run = Run(budget)
    return finish(g, "3colrd3", run, lambda: _degree_one(g, x, color, run))


def _degree_one(g, x, a, run) -> CycleCertificate:
    run.tag("degree-one-lemma")
    if g.n <= 5:
        run.tag("base-case-exact")
        return run.exact_cycle(g, g.n)
    (z,) = g.neighbors(x, a)
    for y in g.neighbors(x):
        if y == z:
            continue
        for b in g.colors_between(x, y):
            if b == a:
                continue
            con = contract(g, (x, z, y), ContractionRule.crossed(x, z, a, y, b, 3))
            if check_hypotheses(con.graph, "3colgen").satisfied:
                run.tag("lemma-contract")
                return _lift(g, con, _gen(con.graph, run.nested("3colgen")))
    raise ProofGap(f"no contraction at {x} keeps the edge bound")
