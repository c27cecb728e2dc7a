"""graph6 and edge-list reading/writing."""

from __future__ import annotations

from .errors import DomainError, DuplicateEdgeError, MalformedHeaderError, ParseError, VertexRangeError
from .graphs import Graph

GRAPH6_HEADER = ">>graph6<<"


def _decode_size(data: bytes) -> tuple[int, int]:
    if not data:
        raise MalformedHeaderError("empty graph6 string")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise MalformedHeaderError("truncated 8-byte graph6 size field")
        chunk, used = data[2:8], 8
    else:
        if len(data) < 4:
            raise MalformedHeaderError("truncated 4-byte graph6 size field")
        chunk, used = data[1:4], 4
    n = 0
    for c in chunk:
        n = (n << 6) | (c - 63)
    return n, used


def decode_graph6(text: str) -> Graph:
    text = text.strip()
    if text.startswith(GRAPH6_HEADER):
        text = text[len(GRAPH6_HEADER):]
    data = text.encode("ascii", errors="replace")
    if any(c < 63 or c > 126 for c in data):
        raise MalformedHeaderError(f"graph6 characters must lie in '?'..'~': {text!r}")
    n, used = _decode_size(data)
    body = data[used:]
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise ParseError(f"graph6 body has {len(body)} bytes, expected {(nbits + 5) // 6} for n={n}")
    bits = []
    for c in body:
        x = c - 63
        bits.extend((x >> s) & 1 for s in range(5, -1, -1))
    if any(bits[nbits:]):
        raise ParseError("graph6 padding bits must be zero")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Graph(n, edges)


def encode_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        out = [n + 63]
    else:
        out = [126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)]
    bits = [1 if g.has_edge(i, j) else 0 for j in range(1, n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    for k in range(0, len(bits), 6):
        x = 0
        for b in bits[k:k + 6]:
            x = (x << 1) | b
        out.append(x + 63)
    return bytes(out).decode("ascii")


def decode_edge_list(text: str) -> Graph:
    """First non-comment line is ``n``; each further line is ``u v`` (0-indexed)."""
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise MalformedHeaderError("edge list is empty; expected the vertex count on the first line")
    try:
        n = int(lines[0])
    except ValueError:
        raise MalformedHeaderError(f"edge list header must be a vertex count, got {lines[0]!r}") from None
    if n < 0:
        raise MalformedHeaderError(f"negative vertex count {n}")
    seen = set()
    for lineno, ln in enumerate(lines[1:], start=2):
        toks = ln.split()
        if len(toks) != 2:
            raise ParseError(f"line {lineno}: expected 'u v', got {ln!r}")
        try:
            u, v = int(toks[0]), int(toks[1])
        except ValueError:
            raise ParseError(f"line {lineno}: non-integer vertex in {ln!r}") from None
        if not (0 <= u < n and 0 <= v < n):
            raise VertexRangeError(f"line {lineno}: vertex out of range 0..{n - 1} in {ln!r}")
        if u == v:
            raise ParseError(f"line {lineno}: loop at vertex {u}")
        e = (min(u, v), max(u, v))
        if e in seen:
            raise DuplicateEdgeError(f"line {lineno}: duplicate edge {e}")
        seen.add(e)
    return Graph(n, seen)


def encode_edge_list(g: Graph) -> str:
    return "\n".join([str(g.n)] + [f"{u} {v}" for u, v in g.sorted_edges()]) + "\n"


def parse_graph(text: str, format: str = "graph6") -> Graph:
    if format == "graph6":
        return decode_graph6(text)
    if format == "edge_list":
        return decode_edge_list(text)
    raise DomainError(f"unknown graph format {format!r}")
