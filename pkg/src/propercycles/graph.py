"""Edge-colored multigraphs and the structural queries the constructions rely on.

Vertices are the integers ``0..n-1`` and colors the integers ``1..c``.  Two
edges may join the same pair of vertices as long as their colors differ.
Graphs never change after construction; every surgery returns a new graph
together with a record that is enough to carry a certificate back.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations, product
from typing import Iterable, Iterator, Mapping, NamedTuple, Sequence

from .errors import InputError, LiftError

Edge = tuple[int, int, int]


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class ColoredMultigraph:
    """An immutable ``c``-edge-colored multigraph on ``n`` vertices.

    Per-vertex, per-color neighbor bitmasks are built once so that edge
    queries are O(1) and colored degrees are a popcount.
    """

    __slots__ = ("_n", "_c", "_edges", "_adj", "_any")

    def __init__(self, n: int, c: int, edges: Iterable[Sequence[int]] = ()) -> None:
        if not isinstance(n, int) or n < 0:
            raise InputError(f"vertex count must be a nonnegative integer, got {n!r}")
        if not isinstance(c, int) or c < 1:
            raise InputError(f"color count must be a positive integer, got {c!r}")
        adj = [[0] * n for _ in range(c + 1)]
        normalized = set()
        for edge in edges:
            if len(edge) != 3:
                raise InputError(f"edge must be a (u, v, color) triple, got {edge!r}")
            u, v, k = (int(t) for t in edge)
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge {edge!r} references a vertex outside 0..{n - 1}")
            if u == v:
                raise InputError(f"loop at vertex {u} is not allowed")
            if not 1 <= k <= c:
                raise InputError(f"edge {edge!r} has color outside 1..{c}")
            key = (min(u, v), max(u, v), k)
            if key in normalized:
                raise InputError(f"duplicate edge {key!r}: parallel edges must differ in color")
            normalized.add(key)
            adj[k][u] |= 1 << v
            adj[k][v] |= 1 << u
        any_adj = [0] * n
        for k in range(1, c + 1):
            for v in range(n):
                any_adj[v] |= adj[k][v]
        object.__setattr__(self, "_n", n)
        object.__setattr__(self, "_c", c)
        object.__setattr__(self, "_edges", frozenset(normalized))
        object.__setattr__(self, "_adj", tuple(tuple(row) for row in adj))
        object.__setattr__(self, "_any", tuple(any_adj))

    def __setattr__(self, name, value):
        raise AttributeError("ColoredMultigraph is immutable")

    @property
    def n(self) -> int:
        return self._n

    @property
    def c(self) -> int:
        return self._c

    @property
    def m(self) -> int:
        return len(self._edges)

    @property
    def edges(self) -> frozenset[Edge]:
        """Edges as ``(u, v, k)`` with ``u < v``."""
        return self._edges

    def sorted_edges(self) -> list[Edge]:
        return sorted(self._edges)

    def has_edge(self, u: int, v: int, k: int) -> bool:
        return 1 <= k <= self._c and bool(self._adj[k][u] >> v & 1)

    def colors_between(self, u: int, v: int) -> list[int]:
        return [k for k in range(1, self._c + 1) if self._adj[k][u] >> v & 1]

    def neighbor_mask(self, x: int, k: int | None = None) -> int:
        """Bitmask of neighbors of ``x``, in color ``k`` or in any color."""
        return self._any[x] if k is None else self._adj[k][x]

    def neighbors(self, x: int, k: int | None = None) -> list[int]:
        return list(_bits(self.neighbor_mask(x, k)))

    def degree(self, x: int) -> int:
        """Number of edges incident to ``x``, parallel edges counted separately."""
        return sum(self._adj[k][x].bit_count() for k in range(1, self._c + 1))

    def without(self, removed: Iterable[int]) -> tuple["ColoredMultigraph", list[int]]:
        """Delete vertices; returns the relabeled graph and new-id -> old-id labels."""
        drop = set(removed)
        return self.subgraph(v for v in range(self._n) if v not in drop)

    def subgraph(self, keep: Iterable[int]) -> tuple["ColoredMultigraph", list[int]]:
        labels = sorted(set(keep))
        index = {v: i for i, v in enumerate(labels)}
        edges = [
            (index[u], index[v], k)
            for u, v, k in self._edges
            if u in index and v in index
        ]
        return ColoredMultigraph(len(labels), self._c, edges), labels

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ColoredMultigraph):
            return NotImplemented
        return (self._n, self._c, self._edges) == (other._n, other._c, other._edges)

    def __hash__(self) -> int:
        return hash((self._n, self._c, self._edges))

    def __repr__(self) -> str:
        return f"ColoredMultigraph(n={self._n}, c={self._c}, m={self.m})"


def _check_vertex(g: ColoredMultigraph, x: int) -> None:
    if not (isinstance(x, int) and 0 <= x < g.n):
        raise InputError(f"vertex {x!r} outside 0..{g.n - 1}")


def _check_color(g: ColoredMultigraph, i: int) -> None:
    if not (isinstance(i, int) and 1 <= i <= g.c):
        raise InputError(f"color {i!r} outside 1..{g.c}")


# -- degree queries ---------------------------------------------------------


def colored_degree(g: ColoredMultigraph, x: int, i: int) -> int:
    """Number of distinct neighbors joined to ``x`` by an edge of color ``i``."""
    _check_vertex(g, x)
    _check_color(g, i)
    return g.neighbor_mask(x, i).bit_count()


def rainbow_degree(g: ColoredMultigraph, x: int) -> int:
    _check_vertex(g, x)
    return sum(1 for k in range(1, g.c + 1) if g.neighbor_mask(x, k))


def rainbow_degree_graph(g: ColoredMultigraph) -> int:
    if g.n == 0:
        raise InputError("rainbow degree of an empty graph is undefined")
    return min(rainbow_degree(g, x) for x in range(g.n))


# -- derived graphs ---------------------------------------------------------


def complement(g: ColoredMultigraph) -> ColoredMultigraph:
    """Colored complement; ``c`` is kept even when a color is unused."""
    edges = [
        (u, v, k)
        for u in range(g.n)
        for v in range(u + 1, g.n)
        for k in range(1, g.c + 1)
        if not g.has_edge(u, v, k)
    ]
    return ColoredMultigraph(g.n, g.c, edges)


def color_subgraph(g: ColoredMultigraph, i: int) -> ColoredMultigraph:
    """Spanning subgraph keeping only color ``i`` (colors keep their ids)."""
    _check_color(g, i)
    return ColoredMultigraph(g.n, g.c, [e for e in g.edges if e[2] == i])


def is_connected(g: ColoredMultigraph) -> bool:
    """Connectivity of the underlying simple graph."""
    if g.n == 0:
        return True
    return reach(g, 0, (1 << g.n) - 1) == (1 << g.n) - 1


def reach(g: ColoredMultigraph, source: int, within: int) -> int:
    """Bitmask of vertices reachable from ``source`` inside vertex set ``within``."""
    seen = 1 << source
    frontier = seen
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= g.neighbor_mask(v)
        frontier = nxt & within & ~seen
        seen |= frontier
    return seen


def is_2connected(g: ColoredMultigraph) -> bool:
    """At least three vertices, connected, and no cut vertex."""
    if g.n < 3 or not is_connected(g):
        return False
    full = (1 << g.n) - 1
    for v in range(g.n):
        rest = full & ~(1 << v)
        start = 0 if v else 1
        if reach(g, start, rest) != rest:
            return False
    return True


# -- color merge ------------------------------------------------------------


@dataclass(frozen=True)
class MergeRecord:
    """How a color class was folded into another one.

    ``renumbering`` maps every surviving original color to its id in the
    merged graph; ``merged_color`` has no image.
    """

    merged_color: int
    target_color: int
    dropped_duplicates: frozenset[tuple[int, int]]
    renumbering: Mapping[int, int] = field(default_factory=dict)

    def original_color(self, merged_id: int) -> int:
        for old, new in self.renumbering.items():
            if new == merged_id:
                return old
        raise KeyError(merged_id)


def merge_colors(
    g: ColoredMultigraph, j: int, t: int
) -> tuple[ColoredMultigraph, MergeRecord]:
    """Recolor every edge of color ``j`` with ``t`` and drop same-color parallels."""
    _check_color(g, j)
    _check_color(g, t)
    if j == t:
        raise InputError("cannot merge a color into itself")
    if g.c < 3:
        raise InputError("color merge needs at least three colors")
    renumbering = {}
    for old in range(1, g.c + 1):
        if old != j:
            renumbering[old] = len(renumbering) + 1
    edges = set()
    dropped = set()
    for u, v, k in g.edges:
        if k == j:
            if g.has_edge(u, v, t):
                dropped.add((u, v))
                continue
            k = t
        edges.add((u, v, renumbering[k]))
    record = MergeRecord(j, t, frozenset(dropped), renumbering)
    return ColoredMultigraph(g.n, g.c - 1, edges), record


# -- contraction ------------------------------------------------------------


@dataclass(frozen=True)
class ContractionRule:
    """Which contracted vertices supply the new vertex's neighbors, per color.

    ``sources[k] = (a,)`` copies the color-``k`` neighborhood of ``a``;
    ``sources[k] = (a, b)`` takes the intersection.  Colors that are absent
    give the new vertex no edges of that color.  Neighborhoods are always
    taken outside the contracted set.
    """

    sources: Mapping[int, tuple[int, ...]]

    @classmethod
    def crossed(cls, center: int, a: int, alpha: int, b: int, beta: int, c: int) -> "ContractionRule":
        """The rule used around a center with ``c(center a) = alpha`` and
        ``c(center b) = beta``: each of these two colors is inherited from the
        vertex reached by the *other* one, remaining colors by intersection."""
        sources = {alpha: (b,), beta: (a,)}
        for k in range(1, c + 1):
            if k not in sources:
                sources[k] = (a, b)
        return cls(sources)


@dataclass(frozen=True)
class Contraction:
    graph: ColoredMultigraph
    labels: tuple[int | None, ...]
    group: tuple[int, ...]
    new_vertex: int
    removed: int

    def original(self, v: int) -> int | None:
        return self.labels[v]


def contract(g: ColoredMultigraph, group: Sequence[int], rule: ContractionRule) -> Contraction:
    """Replace the vertices of ``group`` by a single new vertex.

    Surviving vertices keep their relative order; the new vertex gets the
    last id.  ``removed`` counts edges of ``g`` that have no counterpart.
    """
    group = tuple(group)
    for v in group:
        _check_vertex(g, v)
    if len(set(group)) != len(group) or len(group) < 2:
        raise InputError(f"contraction needs at least two distinct vertices, got {group!r}")
    for k, src in rule.sources.items():
        _check_color(g, k)
        if not src or any(s not in group for s in src):
            raise InputError(f"rule for color {k} must reference contracted vertices")
    gmask = 0
    for v in group:
        gmask |= 1 << v
    labels: list[int | None] = [v for v in range(g.n) if not gmask >> v & 1]
    index = {v: i for i, v in enumerate(labels)}
    s = len(labels)
    labels.append(None)
    edges = [
        (index[u], index[v], k)
        for u, v, k in g.edges
        if not (gmask >> u & 1) and not (gmask >> v & 1)
    ]
    for k, src in sorted(rule.sources.items()):
        mask = ~gmask
        for a in src:
            mask &= g.neighbor_mask(a, k)
        for y in _bits(mask & ((1 << g.n) - 1)):
            edges.append((index[y], s, k))
    h = ColoredMultigraph(s + 1, g.c, edges)
    return Contraction(h, tuple(labels), group, s, g.m - h.m)


def contract_triple(
    g: ColoredMultigraph, center: int, a: int, b: int, rule: ContractionRule
) -> Contraction:
    """Contract ``{center, a, b}``; passing ``center == a`` contracts two vertices."""
    if center == a:
        if a == b:
            raise InputError("two-vertex contraction needs distinct vertices")
        return contract(g, (a, b), rule)
    if len({center, a, b}) != 3:
        raise InputError(f"vertices {center}, {a}, {b} are not distinct")
    return contract(g, (center, a, b), rule)


# -- certificates -----------------------------------------------------------


@dataclass(frozen=True)
class CycleCertificate:
    vertices: tuple[int, ...]
    edge_colors: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edge_colors", tuple(self.edge_colors))

    def __len__(self) -> int:
        return len(self.vertices)

    def steps(self) -> Iterator[tuple[int, int, int]]:
        L = len(self.vertices)
        for i in range(L):
            yield self.vertices[i], self.vertices[(i + 1) % L], self.edge_colors[i]

    def to_dict(self) -> dict:
        return {"kind": "cycle", "vertices": list(self.vertices), "edge_colors": list(self.edge_colors)}


@dataclass(frozen=True)
class PathCertificate:
    vertices: tuple[int, ...]
    edge_colors: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edge_colors", tuple(self.edge_colors))

    def __len__(self) -> int:
        return len(self.vertices)

    def steps(self) -> Iterator[tuple[int, int, int]]:
        for i in range(len(self.vertices) - 1):
            yield self.vertices[i], self.vertices[i + 1], self.edge_colors[i]

    def to_dict(self) -> dict:
        return {"kind": "path", "vertices": list(self.vertices), "edge_colors": list(self.edge_colors)}


class Verdict(NamedTuple):
    ok: bool
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


def _verify_sequence(g, vertices, colors, closed: bool) -> Verdict:
    L = len(vertices)
    if closed and L < 3:
        return Verdict(False, f"cycle needs at least 3 vertices, got {L}")
    if not closed and L < 1:
        return Verdict(False, "empty path")
    expected = L if closed else L - 1
    if len(colors) != expected:
        return Verdict(False, f"expected {expected} edge colors, got {len(colors)}")
    for v in vertices:
        if not (isinstance(v, int) and 0 <= v < g.n):
            return Verdict(False, f"vertex {v!r} outside the graph")
    if len(set(vertices)) != L:
        return Verdict(False, "repeated vertex")
    for i in range(expected):
        u, v, k = vertices[i], vertices[(i + 1) % L], colors[i]
        if not g.has_edge(u, v, k):
            return Verdict(False, f"missing edge ({u}, {v}) in color {k} at index {i}")
    for i in range(expected if closed else expected - 1):
        if colors[i] == colors[(i + 1) % L]:
            return Verdict(False, f"adjacent edges share color {colors[i]} at index {i}")
    return Verdict(True)


def verify_proper_cycle(g: ColoredMultigraph, cert: CycleCertificate) -> Verdict:
    """Check a proper cycle; Hamiltonicity is not required."""
    return _verify_sequence(g, cert.vertices, cert.edge_colors, closed=True)


def verify_proper_path(g: ColoredMultigraph, cert: PathCertificate) -> Verdict:
    return _verify_sequence(g, cert.vertices, cert.edge_colors, closed=False)


# -- lifting through a contraction -------------------------------------------


def _expansions(g, group, left, lcol, right, rcol):
    """Orderings of ``group`` forming a proper path that attaches to ``left``
    via ``lcol`` and to ``right`` via ``rcol`` (either end may be ``None``)."""
    for order in permutations(group):
        if left is not None and not g.has_edge(left, order[0], lcol):
            continue
        if right is not None and not g.has_edge(order[-1], right, rcol):
            continue
        inner = [g.colors_between(order[i], order[i + 1]) for i in range(len(order) - 1)]
        for colors in product(*inner):
            seq = ([lcol] if left is not None else []) + list(colors) + ([rcol] if right is not None else [])
            if all(seq[i] != seq[i + 1] for i in range(len(seq) - 1)):
                yield order, colors


def lift_contracted_cycle(
    g: ColoredMultigraph, contraction: Contraction, cert: CycleCertificate
) -> CycleCertificate:
    """Carry a proper cycle of the contracted graph back to ``g``.

    When the cycle passes through the new vertex, that vertex is replaced by
    a proper path through the whole contracted group.
    """
    labels = contraction.labels
    verts = list(cert.vertices)
    cols = list(cert.edge_colors)
    s = contraction.new_vertex
    if s not in verts:
        return CycleCertificate([labels[v] for v in verts], cols)
    i = verts.index(s)
    verts = verts[i:] + verts[:i]
    cols = cols[i:] + cols[:i]
    right, rcol = labels[verts[1]], cols[0]
    left, lcol = labels[verts[-1]], cols[-1]
    for order, inner in _expansions(g, contraction.group, left, lcol, right, rcol):
        new_verts = list(order) + [labels[v] for v in verts[1:]]
        new_cols = list(inner) + cols
        return CycleCertificate(new_verts, new_cols)
    raise LiftError(f"contracted vertex cannot be expanded between {left} and {right}")
