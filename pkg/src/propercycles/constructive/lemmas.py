"""Two reusable proof devices: growing a two-colored cycle by one edge, and
folding one color class into another."""

from __future__ import annotations

from itertools import permutations

from ..errors import HypothesisViolation, InputError, NoAdmissibleMerge
from ..graph import (
    ColoredMultigraph,
    CycleCertificate,
    MergeRecord,
    is_connected,
    merge_colors,
    rainbow_degree_graph,
    verify_proper_cycle,
)


def splice_edge(
    g: ColoredMultigraph, cycle: CycleCertificate, x: int, y: int, color: int
) -> CycleCertificate | None:
    """Insert the edge ``xy`` of ``color`` into a proper cycle.

    A cycle edge ``pq`` of some other color ``k`` is swapped for the path
    ``p x y q`` (or ``p y x q``) whose outer edges both have color ``k``.
    Returns ``None`` when no cycle edge admits the swap.
    """
    vs, cs = cycle.vertices, cycle.edge_colors
    L = len(vs)
    for i in range(L):
        k = cs[i]
        if k == color:
            continue
        p, q = vs[i], vs[(i + 1) % L]
        for a, b in ((x, y), (y, x)):
            if g.has_edge(p, a, k) and g.has_edge(b, q, k):
                new_vs = vs[: i + 1] + (a, b) + vs[i + 1:]
                new_cs = cs[:i] + (k, color, k) + cs[i + 1:]
                return CycleCertificate(new_vs, new_cs)
    return None


def lemma_cycle_insertion(
    g: ColoredMultigraph, cycle: CycleCertificate, x: int, y: int, color: int | None = None
) -> CycleCertificate:
    """Grow a proper cycle of a two-colored graph by two vertices through ``xy``.

    ``xy`` must be an edge of ``color`` (when omitted, the lowest color on the
    pair).  With ``other`` the remaining color, the insertion is guaranteed
    once ``d_C^other(x) + d_C^other(y) > |C|``: every vertex of the cycle
    lies on exactly one ``other``-colored cycle edge, so some such edge
    ``pq`` sees three ``other``-colored edges towards ``{x, y}``.
    """
    if g.c != 2:
        raise InputError("cycle insertion works on two-colored graphs")
    verdict = verify_proper_cycle(g, cycle)
    if not verdict:
        raise InputError(f"cycle is not proper: {verdict.reason}")
    on_cycle = set(cycle.vertices)
    if x == y or x in on_cycle or y in on_cycle:
        raise InputError("x and y must be distinct vertices off the cycle")
    if len(cycle) > g.n - 2:
        raise InputError("cycle must leave room for two more vertices")
    if color is None:
        present = g.colors_between(x, y)
        if not present:
            raise InputError(f"({x}, {y}) is not an edge")
        color = present[0]
    elif not g.has_edge(x, y, color):
        raise InputError(f"({x}, {y}) has no edge in color {color}")
    other = 3 - color
    cmask = sum(1 << v for v in on_cycle)
    total = (g.neighbor_mask(x, other) & cmask).bit_count() + (g.neighbor_mask(y, other) & cmask).bit_count()
    if total <= len(cycle):
        raise HypothesisViolation(
            "degree-sum",
            {"sum": total, "cycle_length": len(cycle), "color": other},
        )
    grown = splice_edge(g, cycle, x, y, color)
    if grown is None:
        raise RuntimeError("insertion failed although the degree sum exceeds the cycle length")
    return grown


def admissible_merges(g: ColoredMultigraph, min_edges: int, keep_rainbow: bool):
    """Yield ``(merged, record)`` for every ordered color pair whose merge
    stays connected and keeps at least ``min_edges`` edges; with
    ``keep_rainbow`` a graph of full rainbow degree must stay so."""
    full_rd = keep_rainbow and g.n and rainbow_degree_graph(g) == g.c
    for j, t in permutations(range(1, g.c + 1), 2):
        merged, record = merge_colors(g, j, t)
        if merged.m < min_edges or not is_connected(merged):
            continue
        if full_rd and rainbow_degree_graph(merged) != merged.c:
            continue
        yield merged, record


def reduce_color_count(g: ColoredMultigraph, ell: int) -> tuple[ColoredMultigraph, MergeRecord]:
    """Merge two colors keeping ``m' >= (c-1)*ell + 1``, connectivity and full
    rainbow degree; the first qualifying ordered pair wins."""
    if g.c < 4:
        raise InputError(f"color reduction needs c >= 4, got c={g.c}")
    if ell < 1:
        raise InputError("ell must be a positive integer")
    if g.m < g.c * ell + 1:
        raise InputError(f"need m >= {g.c * ell + 1}, got {g.m}")
    if not is_connected(g):
        raise InputError("graph must be connected")
    for found in admissible_merges(g, (g.c - 1) * ell + 1, keep_rainbow=True):
        return found
    raise NoAdmissibleMerge(f"no color merge keeps {(g.c - 1) * ell + 1} edges")


def lift_cycle(
    record: MergeRecord, original: ColoredMultigraph, cert: CycleCertificate
) -> CycleCertificate:
    """Recolor a proper cycle of the merged graph back into ``original``."""
    merged, _ = merge_colors(original, record.merged_color, record.target_color)
    verdict = verify_proper_cycle(merged, cert)
    if not verdict:
        raise InputError(f"cycle is not proper in the merged graph: {verdict.reason}")
    t = record.target_color
    colors = []
    for u, v, k in cert.steps():
        old = record.original_color(k)
        if old == t and not original.has_edge(u, v, t):
            old = record.merged_color
        colors.append(old)
    lifted = CycleCertificate(cert.vertices, colors)
    verdict = verify_proper_cycle(original, lifted)
    if not verdict:
        raise RuntimeError(f"lifted cycle is not proper: {verdict.reason}")
    return lifted
