"""graph6, JSON and DOT serialisation."""

from __future__ import annotations

import json
from pathlib import Path

from .graph import Graph, GraphError, build_graph

GRAPH6_HEADER = ">>graph6<<"


def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n <= 68719476735:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise GraphError(f"graph too large for graph6: n={n}")


def write_graph6(g: Graph) -> str:
    bitlist = []
    for j in range(1, g.n):
        row = g.nbr[j]
        bitlist.extend((row >> i) & 1 for i in range(j))
    bitlist.extend([0] * (-len(bitlist) % 6))
    body = []
    for k in range(0, len(bitlist), 6):
        chunk = bitlist[k:k + 6]
        val = 0
        for b in chunk:
            val = (val << 1) | b
        body.append(chr(val + 63))
    return _encode_n(g.n) + "".join(body)


def parse_graph6(text: str, strict: bool = True) -> Graph:
    s = text.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
    if not s:
        raise GraphError("empty graph6 string")
    vals = []
    for ch in s:
        o = ord(ch)
        if not 63 <= o <= 126:
            raise GraphError(f"graph6 byte {ch!r} out of range")
        vals.append(o - 63)
    if vals[0] != 63:
        n, pos = vals[0], 1
    elif len(vals) >= 4 and vals[1] != 63:
        n, pos = (vals[1] << 12) | (vals[2] << 6) | vals[3], 4
    elif len(vals) >= 8:
        n = 0
        for v in vals[2:8]:
            n = (n << 6) | v
        pos = 8
    else:
        raise GraphError("truncated graph6 size header")
    need = (n * (n - 1) // 2 + 5) // 6
    body = vals[pos:]
    if len(body) != need:
        raise GraphError(f"graph6 length mismatch: expected {need} data bytes, got {len(body)}")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    return build_graph(n, edges, strict=strict)


def to_json(g: Graph) -> dict:
    out = {"n": g.n, "edges": [list(e) for e in g.edges]}
    if g.labels:
        out["labels"] = list(g.labels)
    return out


def parse_json(text: str, strict: bool = True) -> Graph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphError(f"invalid JSON: {exc}") from None
    if not isinstance(data, dict) or "n" not in data or "edges" not in data:
        raise GraphError('JSON graph must be an object with "n" and "edges"')
    return build_graph(data["n"], data["edges"], data.get("labels"), strict=strict)


def write_json(g: Graph) -> str:
    return json.dumps(to_json(g))


def to_dot(g: Graph, highlight=()) -> str:
    marked = set(highlight)
    lines = ["graph G {"]
    for v in range(g.n):
        attrs = [f'label="{g.label(v)}"']
        if v in marked:
            attrs.append('style=filled fillcolor=black fontcolor=white')
        lines.append(f"  {v} [{' '.join(attrs)}];")
    for u, v in g.edges:
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def read_graph(path, fmt=None, strict: bool = True) -> Graph:
    """Load a graph file; the format is guessed from the suffix when not given."""
    p = Path(path)
    try:
        text = p.read_text()
    except OSError as exc:
        raise GraphError(f"cannot read {p}: {exc}") from None
    if fmt is None:
        fmt = "json" if p.suffix.lower() == ".json" or text.lstrip().startswith("{") else "graph6"
    if fmt == "json":
        return parse_json(text, strict=strict)
    if fmt == "graph6":
        return parse_graph6(text, strict=strict)
    raise GraphError(f"unknown format {fmt!r}")
