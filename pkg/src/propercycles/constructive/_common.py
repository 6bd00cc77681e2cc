from __future__ import annotations

from itertools import combinations

from ..exact import (
    Budget,
    SearchConstraints,
    SolveOutcome,
    Status,
    find_proper_cycle_of_length,
    find_proper_path,
)
from ..graph import ColoredMultigraph, CycleCertificate, verify_proper_cycle
from .hypotheses import check_hypotheses, cycle_length

FALLBACK_TAG = "exact-fallback"


class ProofGap(Exception):
    """A step the argument claims cannot fail did fail on this instance."""


class OutOfBudget(Exception):
    pass


class Run:
    """Trace and budget shared by one constructive solve, including nested
    calls into other theorems (whose tags carry a ``theorem:`` prefix)."""

    def __init__(self, budget: Budget | None, trace: list[str] | None = None, prefix: str = ""):
        self.budget = budget
        self.trace = [] if trace is None else trace
        self.prefix = prefix

    def tag(self, name: str) -> None:
        self.trace.append(self.prefix + name)

    def nested(self, theorem: str) -> "Run":
        return Run(self.budget, self.trace, f"{self.prefix}{theorem}:")

    def exact_cycle(self, g: ColoredMultigraph, length: int) -> CycleCertificate:
        out = find_proper_cycle_of_length(g, length, self.budget)
        if out.status is Status.TIMEOUT:
            raise OutOfBudget
        if not out.found:
            raise ProofGap(f"no proper cycle of length {length}")
        return out.certificate

    def exact_path(self, g: ColoredMultigraph, cons: SearchConstraints):
        out = find_proper_path(g, cons, self.budget)
        if out.status is Status.TIMEOUT:
            raise OutOfBudget
        return out.certificate if out.found else None


def finish(g: ColoredMultigraph, theorem: str, run: Run, build) -> SolveOutcome:
    """Run a construction, falling back to exhaustive search (and tagging it)
    if a proof step fails, then verify the result."""
    length = cycle_length(theorem, g.n)
    try:
        try:
            cert = build()
        except ProofGap:
            run.tag(FALLBACK_TAG)
            cert = run.exact_cycle(g, length)
    except OutOfBudget:
        return SolveOutcome(Status.TIMEOUT, trace=tuple(run.trace))
    verdict = verify_proper_cycle(g, cert)
    if not verdict or len(cert) != length:
        raise RuntimeError(
            f"{theorem} construction returned a bad cycle: {verdict.reason or f'length {len(cert)}'}"
        )
    return SolveOutcome(Status.FOUND, cert, trace=tuple(run.trace))


def violation(g: ColoredMultigraph, theorem: str) -> SolveOutcome | None:
    report = check_hypotheses(g, theorem)
    if report.satisfied:
        return None
    return SolveOutcome(Status.HYPOTHESIS_VIOLATION, witness=report.to_dict())


def close_through_segment(
    g: ColoredMultigraph,
    segment: list[int],
    colors: list[int],
    length: int,
    run: Run,
) -> CycleCertificate | None:
    """Complete the proper path ``segment`` into a proper cycle on ``length``
    vertices by searching a path back from its last vertex to its first
    that avoids the segment's interior."""
    interior = segment[1:-1]
    h, labels = g.without(interior)
    index = {v: i for i, v in enumerate(labels)}
    cons = SearchConstraints(
        length - len(interior),
        required_start=index[segment[-1]],
        required_end=index[segment[0]],
        first_color_in=frozenset(k for k in range(1, g.c + 1) if k != colors[-1]),
        last_color_in=frozenset(k for k in range(1, g.c + 1) if k != colors[0]),
    )
    if cons.target_length < 2 or cons.target_length > h.n:
        return None
    path = run.exact_path(h, cons)
    if path is None:
        return None
    middle = [labels[v] for v in path.vertices[1:-1]]
    return CycleCertificate(list(segment) + middle, list(colors) + list(path.edge_colors))


def join_vertex(g: ColoredMultigraph, w: int, run: Run) -> CycleCertificate:
    """Proper Hamiltonian cycle through a vertex missing few edges: take a
    proper Hamiltonian path of ``g - w`` and hook ``w`` onto its ends."""
    h, labels = g.without([w])
    path = run.exact_path(h, SearchConstraints(h.n))
    if path is not None:
        vs = [labels[v] for v in path.vertices]
        a, b = vs[0], vs[-1]
        first, last = path.edge_colors[0], path.edge_colors[-1]
        for ka in g.colors_between(w, a):
            for kb in g.colors_between(b, w):
                if ka != first and kb != last and ka != kb:
                    return CycleCertificate([w] + vs, [ka] + list(path.edge_colors) + [kb])
    ends = [(a, k) for a in g.neighbors(w) for k in g.colors_between(w, a)]
    for (a, ka), (b, kb) in combinations(ends, 2):
        if a == b or ka == kb:
            continue
        cert = close_through_segment(g, [a, w, b], [ka, kb], g.n, run)
        if cert is not None:
            return cert
    raise ProofGap(f"vertex {w} cannot be joined to a proper Hamiltonian path")


def anchored_cycle(
    g: ColoredMultigraph, x: int, color: int, prefer: list[int], length: int, run: Run
) -> CycleCertificate | None:
    """Search a proper cycle that uses one of the few ``color`` edges at ``x``,
    trying the preferred partners first."""
    partners = g.neighbors(x, color)
    order = [p for p in prefer if p in partners] + [p for p in partners if p not in prefer]
    for q in order:
        cert = close_through_segment(g, [q, x], [color], length, run)
        if cert is not None:
            return cert
    return None
