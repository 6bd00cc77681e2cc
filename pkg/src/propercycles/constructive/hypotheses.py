from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from ..errors import InputError
from ..graph import ColoredMultigraph, is_2connected, is_connected, rainbow_degree

THEOREMS = ("s1", "2colrd2", "3colgen", "3colrd3", "conjecture")


def edge_threshold(theorem: str, n: int, c: int) -> int:
    """Least edge count the theorem asks for."""
    if theorem == "s1":
        return 2 * comb(n - 1, 2) + n
    if theorem == "2colrd2":
        return comb(n, 2) + comb(n - 2, 2) + 3
    if theorem == "3colgen":
        return c * comb(n - 1, 2) + n
    if theorem == "3colrd3":
        return c * comb(n - 1, 2) + c + 1
    if theorem == "conjecture":
        return c * comb(n - 2, 2) + 4 * c + 1
    raise InputError(f"unknown theorem {theorem!r}; choose from {', '.join(THEOREMS)}")


def cycle_length(theorem: str, n: int) -> int:
    """Length of the cycle the theorem promises: two-color bounds drop to
    ``n - 1`` on odd ``n``."""
    if theorem in ("s1", "2colrd2") and n % 2:
        return n - 1
    return n


@dataclass(frozen=True)
class HypothesisReport:
    theorem: str
    satisfied: bool
    violations: tuple[tuple[str, dict], ...] = field(default=())

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "satisfied": self.satisfied,
            "violations": [{"hypothesis": name, "witness": w} for name, w in self.violations],
        }


def _min_rainbow(g):
    if g.n == 0:
        return None, 0
    return min(((rainbow_degree(g, x), x) for x in range(g.n)), default=(0, None))


def check_hypotheses(g: ColoredMultigraph, theorem: str) -> HypothesisReport:
    threshold = edge_threshold(theorem, g.n, g.c)
    n, c = g.n, g.c
    bad: list[tuple[str, dict]] = []

    if theorem in ("s1", "2colrd2"):
        if c != 2:
            bad.append(("color-count", {"required": 2, "actual": c}))
    elif theorem == "3colgen":
        if not 3 <= c < n:
            bad.append(("color-count", {"required": "3 <= c < n", "actual": c, "n": n}))
    elif c < 3:
        bad.append(("color-count", {"required": ">= 3", "actual": c}))

    min_n = {"s1": 4, "2colrd2": 9, "3colgen": 4, "3colrd3": 4, "conjecture": 10}[theorem]
    if n < min_n:
        bad.append(("vertex-count", {"required": min_n, "actual": n}))

    if g.m < threshold:
        bad.append(("edge-count", {"required": threshold, "actual": g.m}))

    wanted_rd = {"2colrd2": 2, "3colrd3": c, "conjecture": c}.get(theorem)
    if wanted_rd is not None and n:
        rd, x = _min_rainbow(g)
        if rd != wanted_rd:
            bad.append(("rainbow-degree", {"required": wanted_rd, "actual": rd, "vertex": x}))

    if theorem == "conjecture":
        if not is_2connected(g):
            bad.append(("2-connected", {"required": True, "actual": False}))
    elif not is_connected(g):
        bad.append(("connected", {"required": True, "actual": False}))

    return HypothesisReport(theorem, not bad, tuple(bad))
