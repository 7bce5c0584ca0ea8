"""graph6 and JSON edge-list serialisation.

graph6 follows the standard ASCII encoding: an order header followed by
the upper triangle of the adjacency matrix, column by column, packed six
bits per byte and offset by 63.
"""

from __future__ import annotations

import json

from .errors import FormatError, GraphArgumentError
from .graph import Graph

G6_HEADER = b">>graph6<<"


def _encode_n(n: int) -> bytes:
    if n < 63:
        return bytes([n + 63])
    if n < 258048:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])


def to_graph6(g: Graph) -> bytes:
    """graph6 encoding without header or trailing newline."""
    masks = g.masks
    bits = []
    for j in range(1, g.p):
        mj = masks[j]
        for i in range(j):
            bits.append(mj >> i & 1)
    while len(bits) % 6:
        bits.append(0)
    body = bytes(
        63 + (b[0] << 5 | b[1] << 4 | b[2] << 3 | b[3] << 2 | b[4] << 1 | b[5])
        for b in (bits[k:k + 6] for k in range(0, len(bits), 6))
    )
    return _encode_n(g.p) + body


def from_graph6(data: bytes | str) -> Graph:
    if isinstance(data, str):
        data = data.encode("ascii")
    data = data.strip()
    if data.startswith(G6_HEADER):
        data = data[len(G6_HEADER):]
    if not data:
        raise FormatError("empty graph6 string")
    if any(c < 63 or c > 126 for c in data):
        raise FormatError("graph6 bytes must lie in 63..126")
    if data[0] != 126:
        n, rest = data[0] - 63, data[1:]
    elif len(data) > 1 and data[1] == 126:
        if len(data) < 8:
            raise FormatError("truncated graph6 order header")
        n = 0
        for c in data[2:8]:
            n = n << 6 | (c - 63)
        rest = data[8:]
    else:
        if len(data) < 4:
            raise FormatError("truncated graph6 order header")
        n = 0
        for c in data[1:4]:
            n = n << 6 | (c - 63)
        rest = data[4:]
    need = (n * (n - 1) // 2 + 5) // 6
    if len(rest) != need:
        raise FormatError(f"graph6 body has {len(rest)} bytes, expected {need} for n={n}")
    masks = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = rest[k // 6] - 63
            if byte >> (5 - k % 6) & 1:
                masks[i] |= 1 << j
                masks[j] |= 1 << i
            k += 1
    tail = len(rest) * 6 - k
    if tail and (rest[-1] - 63) & ((1 << tail) - 1):
        raise FormatError("graph6 padding bits must be zero")
    return Graph.from_masks(masks)


def to_edge_json(g: Graph, **extra) -> str:
    obj = {"p": g.p, "edges": [list(e) for e in g.edges()]}
    obj.update(extra)
    return json.dumps(obj, sort_keys=True)


def from_edge_json(text: str) -> Graph:
    """Parse ``{"p": n, "edges": [[u, v], ...]}`` or a bare edge list.

    Vertex ids other than ``0..p-1`` are remapped: integers in increasing
    order, anything else in order of first appearance. Repeated edges and
    loops are rejected.
    """
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from None
    if isinstance(obj, list):
        obj = {"edges": obj}
    if not isinstance(obj, dict) or "edges" not in obj:
        raise FormatError("expected an object with an 'edges' list")
    edges = obj["edges"]
    if not isinstance(edges, list) or any(not isinstance(e, list) or len(e) != 2 for e in edges):
        raise FormatError("'edges' must be a list of [u, v] pairs")
    ids = {}
    if "p" in obj:
        p = obj["p"]
        if not isinstance(p, int) or p < 0:
            raise FormatError("'p' must be a non-negative integer")
        if all(isinstance(x, int) and 0 <= x < p for e in edges for x in e):
            ids = {i: i for i in range(p)}
    if not ids and all(isinstance(x, int) and not isinstance(x, bool) for e in edges for x in e):
        ids = {x: k for k, x in enumerate(sorted({x for e in edges for x in e}))}
    for e in edges:
        for x in e:
            if x not in ids:
                ids[x] = len(ids)
    p = max(obj.get("p", 0), len(ids))
    seen = set()
    pairs = []
    for a, b in edges:
        u, v = ids[a], ids[b]
        key = (min(u, v), max(u, v))
        if key in seen:
            raise FormatError(f"repeated edge {a}-{b}: input is not a simple graph")
        seen.add(key)
        pairs.append((u, v))
    try:
        return Graph(p, pairs)
    except GraphArgumentError as exc:
        raise FormatError(str(exc)) from None


def parse_line(line: str, fmt: str) -> Graph:
    if fmt == "graph6":
        return from_graph6(line)
    if fmt == "edge-json":
        return from_edge_json(line)
    raise FormatError(f"unknown format {fmt!r}")


def format_graph(g: Graph, fmt: str) -> str:
    if fmt == "graph6":
        return to_graph6(g).decode("ascii")
    if fmt == "edge-json":
        return to_edge_json(g)
    raise FormatError(f"unknown format {fmt!r}")
