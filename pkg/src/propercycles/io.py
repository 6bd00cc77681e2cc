"""Canonical JSON for graphs and certificates, and Graphviz DOT export.

Graph documents look like ``{"n":3,"c":2,"edges":[[0,1,1],[0,2,1],[1,2,2]]}``.
Serialized output lists edges as ``[u, v, k]`` with ``u < v``, sorted, on a
single newline-terminated line, so that parse and serialize round-trip to the
same bytes.
"""

from __future__ import annotations

import json
import re

from .errors import InputError
from .graph import ColoredMultigraph, CycleCertificate, PathCertificate

PALETTE = ("red", "blue", "green", "orange", "purple", "brown")

_TRIPLE = re.compile(rb"\[\s*-?\d+\s*,\s*-?\d+\s*,\s*-?\d+\s*\]")


def _location(text: bytes, offset: int) -> str:
    line = text.count(b"\n", 0, offset) + 1
    col = offset - (text.rfind(b"\n", 0, offset) + 1) + 1
    return f"line {line}, column {col}"


def _edge_offsets(text: bytes) -> list[int]:
    start = text.find(b'"edges"')
    return [m.start() for m in _TRIPLE.finditer(text, max(start, 0))]


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def _load(data: bytes | str):
    if isinstance(data, str):
        data = data.encode()
    try:
        doc = json.loads(data)
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise InputError(f"malformed JSON: {exc}") from None
    return data, doc


def parse_graph_json(data: bytes | str) -> ColoredMultigraph:
    """Parse a graph document; errors name the offending edge and its position."""
    text, doc = _load(data)
    if not isinstance(doc, dict):
        raise InputError("graph document must be a JSON object")
    missing = [k for k in ("n", "c", "edges") if k not in doc]
    if missing:
        raise InputError(f"graph document lacks {', '.join(missing)}")
    n, c, edges = doc["n"], doc["c"], doc["edges"]
    if not _is_int(n) or n < 0:
        raise InputError(f'"n" must be a nonnegative integer, got {n!r}')
    if not _is_int(c) or c < 1:
        raise InputError(f'"c" must be a positive integer, got {c!r}')
    if not isinstance(edges, list):
        raise InputError('"edges" must be an array')
    offsets = _edge_offsets(text)
    where = lambda i: f" at {_location(text, offsets[i])}" if i < len(offsets) else ""
    seen = {}
    for i, e in enumerate(edges):
        if not (isinstance(e, list) and len(e) == 3 and all(_is_int(t) for t in e)):
            raise InputError(f"edge #{i} must be an [u, v, color] integer triple, got {e!r}")
        u, v, k = e
        if not 1 <= k <= c:
            raise InputError(f"edge #{i} {e}{where(i)}: color {k} outside 1..{c}")
        if not (0 <= u < n and 0 <= v < n) or u == v:
            raise InputError(f"edge #{i} {e}{where(i)}: endpoints must be distinct vertices in 0..{n - 1}")
        key = (min(u, v), max(u, v), k)
        if key in seen:
            raise InputError(f"edge #{i} {e}{where(i)} duplicates edge #{seen[key]} (same pair and color)")
        seen[key] = i
    return ColoredMultigraph(n, c, edges)


def serialize_graph_json(g: ColoredMultigraph) -> bytes:
    edges = ",".join(f"[{u},{v},{k}]" for u, v, k in g.sorted_edges())
    return f'{{"n":{g.n},"c":{g.c},"edges":[{edges}]}}\n'.encode()


def parse_certificate_json(data: bytes | str) -> CycleCertificate | PathCertificate:
    """Accepts a certificate object, or a solver result holding one."""
    _, doc = _load(data)
    if isinstance(doc, dict) and "certificate" in doc:
        doc = doc["certificate"]
    if not isinstance(doc, dict) or not {"vertices", "edge_colors"} <= doc.keys():
        raise InputError("certificate needs 'vertices' and 'edge_colors'")
    vs, cs = doc["vertices"], doc["edge_colors"]
    if not all(isinstance(x, list) and all(_is_int(t) for t in x) for x in (vs, cs)):
        raise InputError("certificate vertices and colors must be integer arrays")
    kind = doc.get("kind", "cycle")
    if kind == "cycle":
        return CycleCertificate(vs, cs)
    if kind == "path":
        return PathCertificate(vs, cs)
    raise InputError(f"certificate kind must be 'cycle' or 'path', got {kind!r}")


def dump_json(obj) -> bytes:
    return (json.dumps(obj, sort_keys=False, separators=(",", ":")) + "\n").encode()


def color_name(k: int) -> str:
    return PALETTE[k - 1] if k <= len(PALETTE) else str(k)


def export_dot(g: ColoredMultigraph, cert: CycleCertificate | PathCertificate | None = None) -> bytes:
    """Undirected DOT, one line per colored edge; certificate edges are drawn thick.

    Colors past the six named ones are written as their number, in quotes.
    """
    marked = set()
    if cert is not None:
        marked = {(min(u, v), max(u, v), k) for u, v, k in cert.steps()}
    lines = ["graph G {"]
    lines += [f"  {v};" for v in range(g.n)]
    for u, v, k in g.sorted_edges():
        attrs = f'color="{color_name(k)}"'
        if (u, v, k) in marked:
            attrs += ", penwidth=3"
        lines.append(f"  {u} -- {v} [{attrs}];")
    lines.append("}")
    return ("\n".join(lines) + "\n").encode()
