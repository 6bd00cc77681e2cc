"""Seeded corpora, oracle cross-checks and sweeps over the extremal families."""

from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from itertools import product

from .constructive import SOLVERS, TAGS, FALLBACK_TAG, check_hypotheses, cycle_length, edge_threshold
from .errors import InputError
from .exact import Budget, Status, find_proper_cycle_of_length, has_perfect_matching_in_color
from .extremal import FAMILIES, generate, rainbow_complete
from .graph import (
    ColoredMultigraph,
    is_2connected,
    rainbow_degree,
    rainbow_degree_graph,
    verify_proper_cycle,
)

STYLES = ("uniform", "star", "degree-one")
MAX_TRIES = 10_000


@dataclass(frozen=True)
class CorpusSpec:
    """A reproducible family of random instances around a theorem's bound.

    Each instance keeps ``threshold + offset`` edges with ``offset`` drawn
    from ``offsets`` (inclusive; negative values sample below the bound),
    capped at the rainbow complete count.
    Every hypothesis other than the edge count is enforced by rejection.
    ``style`` shapes the deletions: ``star`` piles them onto one vertex,
    ``degree-one`` leaves a vertex with a single edge of one color.
    """

    theorem: str
    n_values: tuple[int, ...]
    c_values: tuple[int, ...] = (2,)
    samples: int = 10
    seed: int = 0
    offsets: tuple[int, int] = (0, 3)
    style: str = "uniform"

    def __post_init__(self):
        edge_threshold(self.theorem, 4, 3)  # validates the theorem id
        if self.style not in STYLES:
            raise InputError(f"unknown style {self.style!r}; choose from {', '.join(STYLES)}")
        if self.samples < 0 or self.offsets[0] > self.offsets[1]:
            raise InputError("samples must be >= 0 and offsets ordered")

    @property
    def cells(self) -> list[tuple[int, int]]:
        return list(product(self.n_values, self.c_values))

    def __len__(self) -> int:
        return len(self.cells) * self.samples

    def cell(self, index: int) -> tuple[int, int]:
        if not 0 <= index < len(self):
            raise InputError(f"index {index} outside a corpus of {len(self)} graphs")
        return self.cells[index // self.samples]


def _shaped_deletions(rng, g_full, n, c, deficit, style):
    """Edges removed first, before the uniform remainder."""
    if style == "star":
        x = rng.randrange(n)
        at_x = [e for e in g_full if x in e[:2]]
        rng.shuffle(at_x)
        return at_x[: rng.randint(0, min(deficit, len(at_x)))]
    if style == "degree-one":
        x, k = rng.randrange(n), rng.randint(1, c)
        keep = rng.choice([y for y in range(n) if y != x])
        return [e for e in g_full if x in e[:2] and e[2] == k and keep not in e[:2]]
    return []


def sample_graph(spec: CorpusSpec, index: int, waive: tuple[str, ...] = ()) -> ColoredMultigraph:
    """Instance ``index`` of the corpus; identical across runs and machines.

    Hypotheses named in ``waive`` are not enforced.
    """
    n, c = spec.cell(index)
    full = sorted(rainbow_complete(n, c).edges)
    total = len(full)
    tolerated = ("edge-count",) + tuple(waive)
    fixed = [name for name, _ in check_hypotheses(ColoredMultigraph(n, c), spec.theorem).violations
             if name not in tolerated]
    if "color-count" in fixed or "vertex-count" in fixed:
        raise InputError(f"(n={n}, c={c}) lies outside the range of {spec.theorem}")
    rng = random.Random(f"{spec.seed}:{index}")
    for _ in range(MAX_TRIES):
        low = edge_threshold(spec.theorem, n, c) + spec.offsets[0]
        if not 0 <= low <= total:
            raise InputError(f"cannot keep {low} edges of a graph with {total}")
        m = min(low + rng.randint(0, spec.offsets[1] - spec.offsets[0]), total)
        deficit = total - m
        first = _shaped_deletions(rng, full, n, c, deficit, spec.style)
        if len(first) > deficit:
            continue
        gone = set(first)
        rest = [e for e in full if e not in gone]
        gone.update(rng.sample(rest, deficit - len(first)))
        g = ColoredMultigraph(n, c, [e for e in full if e not in gone])
        report = check_hypotheses(g, spec.theorem)
        if all(name in tolerated for name, _ in report.violations):
            return g
    raise RuntimeError(
        f"no graph meeting {spec.theorem} constraints after {MAX_TRIES} tries (n={n}, c={c}, style={spec.style})"
    )


def corpus(spec: CorpusSpec):
    for i in range(len(spec)):
        yield sample_graph(spec, i)


@dataclass
class CheckRecord:
    theorem: str
    n: int
    c: int
    m: int
    hypotheses: bool
    constructive: str | None
    exact: str
    agreement: bool
    trace: tuple[str, ...] = ()
    problems: tuple[str, ...] = ()
    constructive_seconds: float = 0.0
    exact_seconds: float = 0.0
    index: int | None = None

    def to_dict(self) -> dict:
        out = asdict(self)
        out["trace"] = list(self.trace)
        out["problems"] = list(self.problems)
        return out


def cross_check(g: ColoredMultigraph, theorem: str, budget: Budget | None = None) -> CheckRecord:
    """Hypotheses, constructive solver and exact solver on one graph.

    With the hypotheses met, disagreement means the constructive solver did
    not return a verified cycle of the promised length, or the exact solver
    found none.  Below the bound nothing is promised.
    """
    report = check_hypotheses(g, theorem)
    length = cycle_length(theorem, g.n)
    problems = []
    status = None
    trace: tuple[str, ...] = ()
    t_con = 0.0
    if theorem in SOLVERS:
        start = time.perf_counter()
        out = SOLVERS[theorem](g, budget)
        t_con = time.perf_counter() - start
        status, trace = out.status.value, out.trace
        if out.found:
            verdict = verify_proper_cycle(g, out.certificate)
            if not verdict:
                problems.append(f"certificate rejected: {verdict.reason}")
            if len(out.certificate) != length:
                problems.append(f"cycle length {len(out.certificate)}, promised {length}")
            if g.c == 2 and len(out.certificate) % 2:
                problems.append("odd proper cycle in a two-colored graph")
        if report.satisfied and not out.found:
            problems.append(f"constructive solver returned {status}")
        if not report.satisfied and out.status is not Status.HYPOTHESIS_VIOLATION:
            problems.append("constructive solver ignored a violated hypothesis")
    if 3 <= length <= g.n:
        start = time.perf_counter()
        exact = find_proper_cycle_of_length(g, length, budget).status
        t_exact = time.perf_counter() - start
    else:
        exact, t_exact = Status.INFEASIBLE, 0.0
    if report.satisfied and exact is not Status.FOUND:
        problems.append(f"exact solver returned {exact.value} under the hypotheses")
    return CheckRecord(
        theorem, g.n, g.c, g.m, report.satisfied, status, exact.value, not problems,
        tuple(trace), tuple(problems), t_con, t_exact,
    )


@dataclass
class SweepReport:
    kind: str
    records: list = field(default_factory=list)
    params: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(r.agreement for r in self.records)

    def aggregate(self) -> dict:
        out = {"records": len(self.records), "agreements": sum(r.agreement for r in self.records)}
        if self.records and isinstance(self.records[0], CheckRecord):
            out["hypotheses_met"] = sum(r.hypotheses for r in self.records)
            out["exact_found"] = sum(r.exact == "found" for r in self.records)
            out["fallbacks"] = sum(any(t.endswith(FALLBACK_TAG) for t in r.trace) for r in self.records)
            times = sorted(r.exact_seconds for r in self.records)
            out["exact_seconds_max"] = times[-1]
            out["exact_seconds_median"] = times[len(times) // 2]
        out["passed"] = self.passed
        return out

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "params": self.params,
            "records": [r.to_dict() for r in self.records],
            "aggregate": self.aggregate(),
        }

    def table(self) -> str:
        rows = [r.to_dict() for r in self.records]
        if not rows:
            return f"{self.kind}: no records\n"
        cols = [k for k in rows[0] if k not in ("trace", "problems", "claims")]
        cells = [[_fmt(row[k]) for k in cols] for row in rows]
        widths = [max(len(k), *(len(r[i]) for r in cells)) for i, k in enumerate(cols)]
        lines = ["  ".join(k.ljust(w) for k, w in zip(cols, widths))]
        lines += ["  ".join(v.ljust(w) for v, w in zip(r, widths)) for r in cells]
        agg = self.aggregate()
        lines.append(", ".join(f"{k}={_fmt(v)}" for k, v in agg.items()))
        return "\n".join(lines) + "\n"


def _fmt(v) -> str:
    if isinstance(v, float):
        return f"{v:.4f}"
    return str(v)


def _check_index(args):
    spec, index, budget = args
    record = cross_check(sample_graph(spec, index), spec.theorem, budget)
    record.index = index
    return record


def corpus_sweep(spec: CorpusSpec, budget: Budget | None = None, workers: int = 1) -> SweepReport:
    """Cross-check every corpus instance; records come back in index order."""
    jobs = [(spec, i, budget) for i in range(len(spec))]
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            records = list(pool.map(_check_index, jobs))
    else:
        records = [_check_index(j) for j in jobs]
    return SweepReport("corpus", records, asdict(spec))


# -- extremal families ----------------------------------------------------------


THEOREM_OF_FAMILY = {
    "s1-extremal": "s1",
    "2colrd2-extremal": "2colrd2",
    "3colgen-extremal": "3colgen",
    "3colrd3-extremal": "3colrd3",
    "conjecture-extremal": "conjecture",
}


@dataclass
class TightnessRecord:
    family: str
    n: int
    c: int
    m: int
    threshold: int
    one_below: bool
    exact: str
    claims: dict
    agreement: bool
    exact_seconds: float = 0.0

    def to_dict(self) -> dict:
        return asdict(self)


def _claims_hold(g, spec) -> dict:
    checks = {}
    for key, want in spec.claims.items():
        if key == "phc":
            continue
        if key == "rainbow_degree":
            got = rainbow_degree_graph(g)
        elif key == "rainbow_degree_of_x":
            got = rainbow_degree(g, spec.special["x"])
        elif key == "two_connected":
            got = is_2connected(g)
        elif key == "blue_perfect_matching":
            got = has_perfect_matching_in_color(g, 2)
        elif key == "red_perfect_matching":
            got = has_perfect_matching_in_color(g, 1)
        else:
            continue
        checks[key] = got == want
    return checks


def tightness_record(family: str, n: int, c: int | None = None, budget: Budget | None = None) -> TightnessRecord:
    g, spec = generate(family, n, c)
    theorem = THEOREM_OF_FAMILY[family]
    threshold = edge_threshold(theorem, g.n, g.c)
    start = time.perf_counter()
    exact = find_proper_cycle_of_length(g, cycle_length(theorem, g.n), budget).status
    seconds = time.perf_counter() - start
    claims = _claims_hold(g, spec)
    one_below = g.m == threshold - 1 == spec.claimed_edges
    ok = one_below and exact is Status.INFEASIBLE and all(claims.values())
    return TightnessRecord(family, g.n, g.c, g.m, threshold, one_below, exact.value, claims, ok, seconds)


def tightness_sweep(family: str, params, budget: Budget | None = None) -> SweepReport:
    """``params`` lists ``n`` values or ``(n, c)`` pairs."""
    if family not in FAMILIES:
        raise InputError(f"unknown family {family!r}; choose from {sorted(FAMILIES)}")
    records = []
    for p in params:
        n, c = p if isinstance(p, tuple) else (p, None)
        records.append(tightness_record(family, n, c, budget))
    return SweepReport("tightness", records, {"family": family, "params": [list(p) if isinstance(p, tuple) else p for p in params]})


# -- coverage and conjecture ----------------------------------------------------


@dataclass
class CoverageTable:
    theorem: str
    counts: dict
    unhit: tuple[str, ...]
    instances: int

    def to_dict(self) -> dict:
        return asdict(self)


def branch_coverage(theorem: str, graphs, budget: Budget | None = None) -> CoverageTable:
    """Tag counts of the constructive solver over ``graphs`` (a ``CorpusSpec``
    or an iterable of graphs), with the vocabulary entries never reached."""
    if theorem not in SOLVERS:
        raise InputError(f"no constructive solver for {theorem!r}")
    if isinstance(graphs, CorpusSpec):
        graphs = corpus(graphs)
    vocab = TAGS[theorem]
    counts = {t: 0 for t in sorted(vocab)}
    total = 0
    for g in graphs:
        total += 1
        out = SOLVERS[theorem](g, budget)
        for tag in set(out.trace):
            counts[tag] = counts.get(tag, 0) + 1
    unhit = tuple(t for t in sorted(vocab) if not counts[t])
    return CoverageTable(theorem, counts, unhit, total)


@dataclass
class ConjectureRecord:
    index: int
    m: int
    exact: str
    agreement: bool
    seconds: float

    def to_dict(self) -> dict:
        return asdict(self)


def conjecture_sweep(
    n: int, c: int, samples: int = 10, budget: Budget | None = None, seed: int = 0,
    offsets: tuple[int, int] = (0, 3), allow_small: bool = False,
) -> SweepReport:
    """Exact search on random 2-connected graphs of full rainbow degree above
    the conjectured bound.  A record disagrees only when the search proves
    there is no proper Hamiltonian cycle; timeouts are reported, not failed."""
    if n < 10 and not allow_small:
        raise InputError("the conjecture concerns n >= 10; pass allow_small to go lower")
    spec = CorpusSpec("conjecture", (n,), (c,), samples, seed, offsets)
    records = []
    for i in range(samples):
        g = sample_graph(spec, i, ("vertex-count",) if allow_small else ())
        start = time.perf_counter()
        status = find_proper_cycle_of_length(g, n, budget).status
        seconds = time.perf_counter() - start
        records.append(ConjectureRecord(i, g.m, status.value, status is not Status.INFEASIBLE, seconds))
    params = {"n": n, "c": c, "samples": samples, "seed": seed, "in_statement": n >= 10}
    report = SweepReport("conjecture", records, params)
    return report


# -- steering instances -----------------------------------------------------------


def _minus(n, c, deletions):
    gone = {(min(a, b), max(a, b), k) for a, b, k in deletions}
    return ColoredMultigraph(n, c, [e for e in rainbow_complete(n, c).edges if e not in gone])


def scarce_color_graph(n: int, case: str) -> ColoredMultigraph:
    """Two-colored graphs at the rainbow-degree bound whose first contraction
    leaves a vertex without one color (n >= 11).

    In all three, vertex 0 misses red towards ``3 .. n-4``.  ``a``: vertex 2
    keeps red only to 0 and 1.  ``b``: vertex 1 keeps blue only to 0 and 2.
    ``c``: vertex 5 keeps a single red edge, to 0.
    """
    if n < 11:
        raise InputError("scarce-color graphs need n >= 11")
    red0 = [(0, x, 1) for x in range(3, n - 3)]
    if case == "a":
        return _minus(n, 2, [(2, x, 1) for x in range(3, n)] + red0)
    if case == "b":
        return _minus(n, 2, [(1, x, 2) for x in range(3, n)] + red0)
    if case == "c":
        lone = [(5, x, 1) for x in range(1, n) if x != 5]
        return _minus(n, 2, lone + [(0, x, 1) for x in range(3, n - 2) if x != 5])
    raise InputError(f"case must be 'a', 'b' or 'c', got {case!r}")


def parallel_class_graph(n: int, c: int, pendant: bool) -> ColoredMultigraph:
    """Exactly at the edge bound with ``4 <= c < n`` while every two color
    classes share ``C(n-1,2) + 1`` pairs, so no merge of two colors keeps
    the bound.  The shared pairs form a clique plus a pendant vertex, or a
    2-connected graph."""
    if not 4 <= c < n or n < 5:
        raise InputError(f"need 4 <= c < n and n >= 5, got n={n}, c={c}")
    if pendant:
        v = n - 1
        shared = [(a, b) for a in range(n - 1) for b in range(a + 1, n - 1)] + [(0, v)]
        extra = [(i, v, (i - 1) % c + 1) for i in range(1, n - c + 1)]
    else:
        missing = [(i, i + 2) for i in range(n - 2)]
        shared = [(a, b) for a in range(n) for b in range(a + 1, n) if (a, b) not in missing]
        extra = [(a, b, i % c + 1) for i, (a, b) in enumerate(missing[: n - c])]
    return ColoredMultigraph(n, c, [(a, b, k) for a, b in shared for k in range(1, c + 1)] + extra)


def steering_graphs(theorem: str) -> list[tuple[str, ColoredMultigraph]]:
    """Handcrafted instances for branches random corpora rarely reach."""
    if theorem == "2colrd2":
        return [(f"scarce-{case}-{n}", scarce_color_graph(n, case)) for n in (11, 12) for case in "abc"]
    if theorem == "3colgen":
        return [
            (f"parallel-{'pendant' if p else '2conn'}-{n}-{c}", parallel_class_graph(n, c, p))
            for n, c in ((5, 4), (6, 4), (6, 5), (7, 4), (7, 5))
            for p in (True, False)
        ]
    return []


COVERAGE_SPECS = {
    "s1": [CorpusSpec("s1", (4, 5, 6, 7, 8), (2,), 20, 0, (0, 2), "star")],
    "2colrd2": [CorpusSpec("2colrd2", (9, 10, 11, 12), (2,), 15, 0, (0, 2), "star")],
    "3colgen": [
        CorpusSpec("3colgen", (4,), (3,), 10, 0, (0, 3), "uniform"),
        CorpusSpec("3colgen", (5, 6, 7), (3, 4), 10, 0, (0, 3), "uniform"),
    ],
    "3colrd3": [
        CorpusSpec("3colrd3", (5, 6, 7), (3, 4), 25, 0, (0, 3), "uniform"),
        CorpusSpec("3colrd3", (6, 7), (3, 4), 25, 0, (0, 1), "degree-one"),
    ],
}


def coverage_graphs(theorem: str):
    """Seeded corpora plus handcrafted instances meant to reach every branch."""
    for spec in COVERAGE_SPECS.get(theorem, []):
        yield from corpus(spec)
    for _, g in steering_graphs(theorem):
        yield g
