"""Generators for the tight examples that sit one edge below each bound.

Labeling is canonical: the special vertices always take the highest ids, and
"red" is color 1, "blue" color 2.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from .errors import InputError
from .graph import ColoredMultigraph

RED, BLUE = 1, 2


@dataclass(frozen=True)
class ExtremalSpec:
    family: str
    n: int
    c: int
    claimed_edges: int
    claims: dict = field(default_factory=dict)
    special: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "family": self.family,
            "n": self.n,
            "c": self.c,
            "claimed_edges": self.claimed_edges,
            "claims": dict(self.claims),
            "special": dict(self.special),
        }


def _rainbow_edges(vertices, c):
    vertices = list(vertices)
    return [
        (u, v, k)
        for i, u in enumerate(vertices)
        for v in vertices[i + 1:]
        for k in range(1, c + 1)
    ]


def rainbow_complete(n: int, c: int) -> ColoredMultigraph:
    if n < 1 or c < 1:
        raise InputError(f"rainbow complete graph needs n >= 1 and c >= 1, got n={n}, c={c}")
    return ColoredMultigraph(n, c, _rainbow_edges(range(n), c))


def extremal_2col_edges(n: int) -> tuple[ColoredMultigraph, ExtremalSpec]:
    """Rainbow complete on ``n-1`` vertices plus ``x = n-1`` joined to all in red only."""
    if n < 4 or n % 2:
        raise InputError(f"family needs an even n >= 4, got {n}")
    x = n - 1
    edges = _rainbow_edges(range(n - 1), 2) + [(v, x, RED) for v in range(n - 1)]
    spec = ExtremalSpec(
        "s1-extremal", n, 2, 2 * comb(n - 1, 2) + n - 1,
        {"phc": False, "rainbow_degree_of_x": 1}, {"x": x},
    )
    return ColoredMultigraph(n, 2, edges), spec


def extremal_2col_rainbow(n: int) -> tuple[ColoredMultigraph, ExtremalSpec]:
    """Blue clique on ``0..n-3`` with pendants ``n-2, n-1`` blue-joined to
    ``v = n-3``, superposed on a red clique on all ``n`` vertices."""
    if n < 10 or n % 2:
        raise InputError(f"family needs an even n >= 10, got {n}")
    v, v1, v2 = n - 3, n - 2, n - 1
    edges = [(a, b, BLUE) for a in range(n - 2) for b in range(a + 1, n - 2)]
    edges += [(v, v1, BLUE), (v, v2, BLUE)]
    edges += [(a, b, RED) for a in range(n) for b in range(a + 1, n)]
    spec = ExtremalSpec(
        "2colrd2-extremal", n, 2, comb(n, 2) + comb(n - 2, 2) + 2,
        {"phc": False, "rainbow_degree": 2, "blue_perfect_matching": False, "red_perfect_matching": True},
        {"v": v, "v1": v1, "v2": v2},
    )
    return ColoredMultigraph(n, 2, edges), spec


def extremal_ccol_edges(n: int, c: int) -> tuple[ColoredMultigraph, ExtremalSpec]:
    """Rainbow complete on ``n-1`` vertices plus ``x = n-1`` joined to all in red only."""
    if not 3 <= c < n:
        raise InputError(f"family needs 3 <= c < n, got n={n}, c={c}")
    x = n - 1
    edges = _rainbow_edges(range(n - 1), c) + [(v, x, RED) for v in range(n - 1)]
    spec = ExtremalSpec(
        "3colgen-extremal", n, c, c * comb(n - 1, 2) + n - 1,
        {"phc": False, "rainbow_degree_of_x": 1}, {"x": x},
    )
    return ColoredMultigraph(n, c, edges), spec


def extremal_ccol_rainbow(n: int, c: int) -> tuple[ColoredMultigraph, ExtremalSpec]:
    """Rainbow complete on ``n-1`` vertices plus ``x = n-1`` joined in every
    color to the single vertex ``n-2``."""
    if n < 4 or c < 3:
        raise InputError(f"family needs n >= 4 and c >= 3, got n={n}, c={c}")
    x, y = n - 1, n - 2
    edges = _rainbow_edges(range(n - 1), c) + [(y, x, k) for k in range(1, c + 1)]
    spec = ExtremalSpec(
        "3colrd3-extremal", n, c, c * comb(n - 1, 2) + c,
        {"phc": False, "rainbow_degree": c, "two_connected": False}, {"x": x, "y": y},
    )
    return ColoredMultigraph(n, c, edges), spec


def extremal_conjecture(n: int, c: int) -> tuple[ColoredMultigraph, ExtremalSpec]:
    """Rainbow complete on ``0..n-3``; ``x1 = n-2`` and ``x2 = n-1`` are joined
    in every color to ``y1 = n-4`` and ``y2 = n-3`` and to nothing else."""
    if n < 10 or c < 3:
        raise InputError(f"family needs n >= 10 and c >= 3, got n={n}, c={c}")
    y1, y2, x1, x2 = n - 4, n - 3, n - 2, n - 1
    edges = _rainbow_edges(range(n - 2), c)
    edges += [(y, x, k) for x in (x1, x2) for y in (y1, y2) for k in range(1, c + 1)]
    spec = ExtremalSpec(
        "conjecture-extremal", n, c, c * comb(n - 2, 2) + 4 * c,
        {"phc": False, "rainbow_degree": c, "two_connected": True},
        {"x1": x1, "x2": x2, "y1": y1, "y2": y2},
    )
    return ColoredMultigraph(n, c, edges), spec


FAMILIES = {
    "s1-extremal": lambda n, c=2: extremal_2col_edges(n),
    "2colrd2-extremal": lambda n, c=2: extremal_2col_rainbow(n),
    "3colgen-extremal": extremal_ccol_edges,
    "3colrd3-extremal": extremal_ccol_rainbow,
    "conjecture-extremal": extremal_conjecture,
}


def generate(family: str, n: int, c: int | None = None) -> tuple[ColoredMultigraph, ExtremalSpec]:
    if family == "rainbow-complete":
        if c is None:
            raise InputError("rainbow-complete needs a color count")
        g = rainbow_complete(n, c)
        return g, ExtremalSpec(family, n, c, c * comb(n, 2))
    try:
        make = FAMILIES[family]
    except KeyError:
        raise InputError(f"unknown family {family!r}; choose from {sorted(FAMILIES)}") from None
    if family in ("s1-extremal", "2colrd2-extremal"):
        return make(n)
    if c is None:
        raise InputError(f"family {family!r} needs a color count")
    return make(n, c)
