"""Exhaustive backtracking search for proper cycles and paths.

The search extends a path from its most constrained end and prunes with
cheap necessary conditions: color alternation, connectivity of what is left
to visit, and a per-vertex check that every unvisited vertex still has two
usable edges in two different colors.  A run that hits its budget reports
``timeout``; only an exhausted search reports ``infeasible``.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from itertools import combinations
from typing import Iterable

from .errors import InputError
from .graph import (
    ColoredMultigraph,
    CycleCertificate,
    PathCertificate,
    _bits,
    is_connected,
    verify_proper_cycle,
    verify_proper_path,
)


class Status(str, Enum):
    FOUND = "found"
    INFEASIBLE = "infeasible"
    HYPOTHESIS_VIOLATION = "hypothesis-violation"
    TIMEOUT = "timeout"


@dataclass
class SolveOutcome:
    status: Status
    certificate: CycleCertificate | PathCertificate | None = None
    witness: dict | None = None
    trace: tuple[str, ...] = ()
    nodes: int = 0

    @property
    def found(self) -> bool:
        return self.status is Status.FOUND

    def to_dict(self) -> dict:
        out = {"status": self.status.value}
        if self.certificate is not None:
            out["certificate"] = self.certificate.to_dict()
        if self.witness is not None:
            out["witness"] = self.witness
        if self.trace:
            out["trace"] = list(self.trace)
        out["nodes"] = self.nodes
        return out


@dataclass(frozen=True)
class Budget:
    """Caps on node expansions and wall-clock seconds; ``None`` disables a cap."""

    max_nodes: int | None = 50_000_000
    max_seconds: float | None = 600.0


DEFAULT_BUDGET = Budget()


@dataclass(frozen=True)
class SearchConstraints:
    target_length: int
    required_start: int | None = None
    required_end: int | None = None
    first_color_in: frozenset[int] | None = None
    last_color_in: frozenset[int] | None = None
    first_equals_last_color: bool = False

    def __post_init__(self):
        for name in ("first_color_in", "last_color_in"):
            value = getattr(self, name)
            if value is not None:
                object.__setattr__(self, name, frozenset(value))

    def reversed(self) -> "SearchConstraints":
        return SearchConstraints(
            self.target_length,
            self.required_end,
            self.required_start,
            self.last_color_in,
            self.first_color_in,
            self.first_equals_last_color,
        )


class _Timeout(Exception):
    pass


class _Search:
    """Private mutable search state; one instance per query."""

    def __init__(self, g: ColoredMultigraph, budget: Budget | None, proper: bool = True):
        budget = budget or DEFAULT_BUDGET
        self.n = g.n
        self.proper = proper
        if proper:
            self.colors = tuple(range(1, g.c + 1))
            self.adj = [None] + [list(g._adj[k]) for k in self.colors]
        else:
            self.colors = (1,)
            self.adj = [None, list(g._any)]
        self.any = list(g._any)
        self.nodes = 0
        self.max_nodes = budget.max_nodes
        self.deadline = None if budget.max_seconds is None else time.monotonic() + budget.max_seconds

    def tick(self) -> None:
        self.nodes += 1
        if self.max_nodes is not None and self.nodes > self.max_nodes:
            raise _Timeout
        if self.deadline is not None and not self.nodes & 1023 and time.monotonic() > self.deadline:
            raise _Timeout

    def options(self, v: int, within: int) -> int:
        return sum((self.adj[k][v] & within).bit_count() for k in self.colors)

    def connected_from(self, source: int, within: int) -> int:
        seen = 1 << source
        frontier = seen
        anyadj = self.any
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= anyadj[v]
            frontier = nxt & within & ~seen
            seen |= frontier
        return seen

    # -- cycles ---------------------------------------------------------

    def cycle(self, within: int) -> tuple[list[int], list[int]] | None:
        verts = list(_bits(within))
        if len(verts) < 3:
            return None
        if self.connected_from(verts[0], within) != within:
            return None
        for v in verts:
            if not self._vertex_can_pass(v, within, None, 0, None, 0):
                return None
        if self.proper and len(self.colors) == 2:
            for k in self.colors:
                if not _perfect_matching(tuple(self.adj[k]), within):
                    return None
        start = min(verts, key=lambda v: (self.options(v, within), v))
        self.start = start
        self.start_bit = 1 << start
        path, cols = [start], []
        closing = self._cycle_step(start, 0, 0, within & ~self.start_bit, path, cols)
        if closing is None:
            return None
        cols.append(closing)
        return path, cols

    def _vertex_can_pass(self, w, free, a, acol, b, bcol) -> bool:
        """Can ``w`` still sit inside a proper cycle?  Its usable edges go to
        ``free`` vertices, to ``a`` in any color but ``acol`` and to ``b`` in
        any color but ``bcol``."""
        nbrs = 0
        ncolors = 0
        abit = 0 if a is None else 1 << a
        bbit = 0 if b is None else 1 << b
        proper = self.proper
        for k in self.colors:
            row = self.adj[k][w]
            mk = row & free
            if not proper or k != acol:
                mk |= row & abit
            if not proper or k != bcol:
                mk |= row & bbit
            if mk:
                ncolors += 1
                nbrs |= mk
        if nbrs.bit_count() < 2:
            return False
        return ncolors >= 2 or not proper

    def _cycle_step(self, end, last, first, unvisited, path, cols):
        self.tick()
        start = self.start
        if not unvisited:
            for k in self.colors:
                if self.proper and (k == last or k == first):
                    continue
                if self.adj[k][end] >> start & 1:
                    return k
            return None
        cands = []
        anyadj = self.any
        for k in self.colors:
            if self.proper and k == last:
                continue
            for u in _bits(self.adj[k][end] & unvisited):
                cands.append(((anyadj[u] & unvisited).bit_count(), u, k))
        cands.sort()
        for _, u, k in cands:
            rest = unvisited & ~(1 << u)
            f = first or k
            if not self._cycle_feasible(u, k, f, rest):
                continue
            path.append(u)
            cols.append(k)
            closing = self._cycle_step(u, k, f, rest, path, cols)
            if closing is not None:
                return closing
            path.pop()
            cols.pop()
        return None

    def _cycle_feasible(self, end, last, first, rest) -> bool:
        start = self.start
        if not rest:
            return any(
                self.adj[k][end] >> start & 1
                for k in self.colors
                if not self.proper or (k != last and k != first)
            )
        if not any(self.adj[k][start] & rest for k in self.colors if not self.proper or k != first):
            return False
        if self.connected_from(end, rest | (1 << end)) & rest != rest:
            return False
        for w in _bits(rest):
            if not self._vertex_can_pass(w, rest, end, last, start, first):
                return False
        return True

    # -- paths ----------------------------------------------------------

    def path(self, within: int, cons: SearchConstraints) -> tuple[list[int], list[int]] | None:
        verts = list(_bits(within))
        if cons.required_start is None and cons.required_end is not None:
            found = self.path(within, cons.reversed())
            if found is None:
                return None
            p, cl = found
            return p[::-1], cl[::-1]
        if len(verts) == 1:
            if cons.required_end not in (None, verts[0]) or cons.required_start not in (None, verts[0]):
                return None
            return [verts[0]], []
        if self.connected_from(verts[0], within) != within:
            return None
        self.cons = cons
        if cons.required_start is not None:
            starts = [cons.required_start]
        else:
            starts = sorted(verts, key=lambda v: (self.options(v, within), v))
        for s in starts:
            if s == cons.required_end:
                continue
            path, cols = [s], []
            if self._path_step(s, 0, 0, within & ~(1 << s), path, cols):
                return path, cols
        return None

    def _path_step(self, end, last, first, unvisited, path, cols) -> bool:
        self.tick()
        cons = self.cons
        cands = []
        anyadj = self.any
        for k in self.colors:
            if self.proper and k == last:
                continue
            if not cols and cons.first_color_in is not None and k not in cons.first_color_in:
                continue
            for u in _bits(self.adj[k][end] & unvisited):
                cands.append(((anyadj[u] & unvisited).bit_count(), u, k))
        cands.sort()
        for _, u, k in cands:
            rest = unvisited & ~(1 << u)
            if rest:
                if u == cons.required_end:
                    continue
                if not self._path_feasible(u, k, rest):
                    continue
            else:
                if cons.required_end is not None and u != cons.required_end:
                    continue
                if cons.last_color_in is not None and k not in cons.last_color_in:
                    continue
                if cons.first_equals_last_color and k != (first or k):
                    continue
            path.append(u)
            cols.append(k)
            if not rest or self._path_step(u, k, first or k, rest, path, cols):
                return True
            path.pop()
            cols.pop()
        return False

    def _path_feasible(self, end, last, rest) -> bool:
        if self.connected_from(end, rest | (1 << end)) & rest != rest:
            return False
        endbit = 1 << end
        req_end = self.cons.required_end
        dead_ends = 0
        for w in _bits(rest):
            usable = 0
            for k in self.colors:
                row = self.adj[k][w]
                usable |= row & rest
                if not self.proper or k != last:
                    usable |= row & endbit
            count = usable.bit_count()
            if count == 0:
                return False
            if count == 1:
                if req_end is not None and w != req_end:
                    return False
                dead_ends += 1
                if dead_ends > 1:
                    return False
        return True


@lru_cache(maxsize=4096)
def _perfect_matching(adj: tuple[int, ...], within: int) -> bool:
    @lru_cache(maxsize=None)
    def match(mask: int) -> bool:
        if not mask:
            return True
        low = mask & -mask
        v = low.bit_length() - 1
        rest = mask ^ low
        for u in _bits(adj[v] & rest):
            if match(rest & ~(1 << u)):
                return True
        return False

    if within.bit_count() % 2:
        return False
    return match(within)


def _mask(vertices: Iterable[int]) -> int:
    out = 0
    for v in vertices:
        out |= 1 << v
    return out


def _cycle_outcome(g, search, found) -> SolveOutcome:
    if found is None:
        return SolveOutcome(Status.INFEASIBLE, nodes=search.nodes)
    cert = CycleCertificate(*found)
    verdict = verify_proper_cycle(g, cert) if search.proper else _verify_simple_cycle(g, cert)
    if not verdict:
        raise RuntimeError(f"exact search produced an invalid cycle: {verdict.reason}")
    return SolveOutcome(Status.FOUND, cert, nodes=search.nodes)


def _verify_simple_cycle(g, cert):
    from .graph import Verdict

    vs = cert.vertices
    if len(set(vs)) != len(vs) or len(vs) < 3:
        return Verdict(False, "not a simple cycle")
    for u, v, _ in cert.steps():
        if not g.neighbor_mask(u) >> v & 1:
            return Verdict(False, f"({u}, {v}) is not adjacent")
    return Verdict(True)


def _cycle_on_subsets(g, search, L) -> tuple[list[int], list[int]] | None:
    full = (1 << g.n) - 1
    if L == g.n:
        return search.cycle(full)
    # highest ids go first: contracted vertices sit at the top, so recursive
    # callers see cycles that skip them and must take their splice branches
    for dropped in combinations(range(g.n - 1, -1, -1), g.n - L):
        found = search.cycle(full & ~_mask(dropped))
        if found is not None:
            return found
    return None


def find_proper_ham_cycle(g: ColoredMultigraph, budget: Budget | None = None) -> SolveOutcome:
    """Proper Hamiltonian cycle by exhaustive search."""
    if g.n < 3 or not is_connected(g):
        return SolveOutcome(Status.INFEASIBLE)
    if g.c == 2 and g.n % 2:
        return SolveOutcome(Status.INFEASIBLE, witness={"reason": "odd length with two colors"})
    search = _Search(g, budget)
    try:
        found = search.cycle((1 << g.n) - 1)
    except _Timeout:
        return SolveOutcome(Status.TIMEOUT, nodes=search.nodes)
    return _cycle_outcome(g, search, found)


def find_proper_cycle_of_length(
    g: ColoredMultigraph, L: int, budget: Budget | None = None
) -> SolveOutcome:
    """Proper cycle through exactly ``L`` distinct vertices (every vertex subset is tried)."""
    if not isinstance(L, int) or not 3 <= L <= g.n:
        raise InputError(f"cycle length must lie in 3..{g.n}, got {L!r}")
    if L == g.n:
        return find_proper_ham_cycle(g, budget)
    if g.c == 2 and L % 2:
        return SolveOutcome(Status.INFEASIBLE, witness={"reason": "odd length with two colors"})
    search = _Search(g, budget)
    try:
        found = _cycle_on_subsets(g, search, L)
    except _Timeout:
        return SolveOutcome(Status.TIMEOUT, nodes=search.nodes)
    return _cycle_outcome(g, search, found)


def find_ham_cycle_simple(g: ColoredMultigraph, budget: Budget | None = None) -> SolveOutcome:
    """Hamiltonian cycle of the underlying simple graph; colors are ignored.

    The certificate records, for each step, the lowest color on that pair.
    """
    if g.n < 3 or not is_connected(g):
        return SolveOutcome(Status.INFEASIBLE)
    search = _Search(g, budget, proper=False)
    try:
        found = search.cycle((1 << g.n) - 1)
    except _Timeout:
        return SolveOutcome(Status.TIMEOUT, nodes=search.nodes)
    if found is None:
        return SolveOutcome(Status.INFEASIBLE, nodes=search.nodes)
    verts = found[0]
    L = len(verts)
    cols = [g.colors_between(verts[i], verts[(i + 1) % L])[0] for i in range(L)]
    return _cycle_outcome(g, search, (verts, cols))


def _check_constraints(g: ColoredMultigraph, cons: SearchConstraints) -> None:
    if not isinstance(cons.target_length, int) or not 1 <= cons.target_length <= g.n:
        raise InputError(f"path length must lie in 1..{g.n}, got {cons.target_length!r}")
    for v in (cons.required_start, cons.required_end):
        if v is not None and not 0 <= v < g.n:
            raise InputError(f"endpoint {v} outside the graph")
    if cons.required_start is not None and cons.required_start == cons.required_end:
        raise InputError("a path cannot start and end at the same vertex")
    if cons.target_length == 1 and (
        cons.required_start is not None and cons.required_end is not None
    ):
        raise InputError("a single-vertex path has one endpoint")
    for colors in (cons.first_color_in, cons.last_color_in):
        if colors is not None and any(not 1 <= k <= g.c for k in colors):
            raise InputError(f"color constraint {sorted(colors)} outside 1..{g.c}")
    if (
        cons.first_equals_last_color
        and cons.first_color_in is not None
        and cons.last_color_in is not None
        and not cons.first_color_in & cons.last_color_in
    ):
        raise InputError("first and last colors must agree but their allowed sets are disjoint")


def find_proper_path(
    g: ColoredMultigraph, constraints: SearchConstraints, budget: Budget | None = None
) -> SolveOutcome:
    """Proper path on exactly ``target_length`` vertices honoring every constraint."""
    _check_constraints(g, constraints)
    search = _Search(g, budget)
    full = (1 << g.n) - 1
    L = constraints.target_length
    pinned = {v for v in (constraints.required_start, constraints.required_end) if v is not None}
    free = [v for v in range(g.n) if v not in pinned]
    found = None
    try:
        for dropped in combinations(free, g.n - L):
            found = search.path(full & ~_mask(dropped), constraints)
            if found is not None:
                break
    except _Timeout:
        return SolveOutcome(Status.TIMEOUT, nodes=search.nodes)
    if found is None:
        return SolveOutcome(Status.INFEASIBLE, nodes=search.nodes)
    cert = PathCertificate(*found)
    verdict = verify_proper_path(g, cert)
    if not verdict or not _honors(cert, constraints):
        raise RuntimeError(f"exact search produced an invalid path: {verdict.reason or 'constraints'}")
    return SolveOutcome(Status.FOUND, cert, nodes=search.nodes)


def _honors(cert: PathCertificate, cons: SearchConstraints) -> bool:
    vs, cs = cert.vertices, cert.edge_colors
    if len(vs) != cons.target_length:
        return False
    if cons.required_start is not None and vs[0] != cons.required_start:
        return False
    if cons.required_end is not None and vs[-1] != cons.required_end:
        return False
    if cs:
        if cons.first_color_in is not None and cs[0] not in cons.first_color_in:
            return False
        if cons.last_color_in is not None and cs[-1] not in cons.last_color_in:
            return False
        if cons.first_equals_last_color and cs[0] != cs[-1]:
            return False
    return True


def has_perfect_matching_in_color(g: ColoredMultigraph, i: int) -> bool:
    """Whether the color-``i`` spanning subgraph has a perfect matching."""
    if not 1 <= i <= g.c:
        raise InputError(f"color {i} outside 1..{g.c}")
    return _perfect_matching(tuple(g.neighbor_mask(v, i) for v in range(g.n)), (1 << g.n) - 1)
