"""graph6 and plain edge-list interchange formats.

graph6 follows the format description shipped with nauty
(https://users.cecs.anu.edu.au/~bdm/data/formats.txt): a size header N(n)
followed by the upper triangle ``x(0,1) x(0,2) x(1,2) x(0,3) ...`` packed
six bits per byte, each byte offset by 63, zero padded on the right.
"""
from __future__ import annotations

from typing import Iterable

from .errors import ParseError
from .graph import Graph, build_graph

_MAX_N = 68719476735  # 2**36 - 1, largest order graph6 can express


def _encode_size(n: int) -> str:
    if n < 0 or n > _MAX_N:
        raise ValueError(f"graph6 cannot encode order {n}")
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def graph6_encode(g: Graph) -> str:
    bits = []
    for j in range(1, g.n):
        row = g.rows[j]
        for i in range(j):
            bits.append(row >> i & 1)
    bits.extend([0] * (-len(bits) % 6))
    body = []
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = val << 1 | b
        body.append(chr(val + 63))
    return _encode_size(g.n) + "".join(body)


def _decode_size(data: bytes) -> tuple[int, int]:
    if not data:
        raise ParseError("empty graph6 string")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise ParseError("truncated 8-byte graph6 size header")
        n = 0
        for c in data[2:8]:
            n = n << 6 | (c - 63)
        if n <= 258047:
            raise ParseError("graph6 size header is not in its shortest form")
        return n, 8
    if len(data) < 4:
        raise ParseError("truncated 4-byte graph6 size header")
    n = 0
    for c in data[1:4]:
        n = n << 6 | (c - 63)
    if n <= 62:
        raise ParseError("graph6 size header is not in its shortest form")
    return n, 4


def graph6_decode(text: str | bytes) -> Graph:
    """Parse one graph6 value (an optional ``>>graph6<<`` header is accepted)."""
    data = text.encode("ascii") if isinstance(text, str) else bytes(text)
    data = data.strip()
    if data.startswith(b">>graph6<<"):
        data = data[len(b">>graph6<<"):]
    if any(c < 63 or c > 126 for c in data):
        raise ParseError("graph6 characters must lie in the range 63..126")
    n, offset = _decode_size(data)
    if n < 1:
        raise ParseError("graph6 value encodes an empty graph; order must be >= 1")
    nbits = n * (n - 1) // 2
    body = data[offset:]
    if len(body) != (nbits + 5) // 6:
        raise ParseError(f"graph6 body has {len(body)} bytes, expected {(nbits + 5) // 6} for n={n}")
    bits = []
    for c in body:
        v = c - 63
        bits.extend(v >> s & 1 for s in range(5, -1, -1))
    if any(bits[nbits:]):
        raise ParseError("graph6 padding bits must be zero")
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph(n, tuple(rows))


def edgelist_encode(g: Graph) -> str:
    """``n m`` header line followed by one ``u v`` line per edge."""
    lines = [f"{g.n} {g.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def edgelist_decode(text: str | Iterable[str]) -> Graph:
    lines = text.splitlines() if isinstance(text, str) else list(text)
    lines = [ln.split("#", 1)[0].strip() for ln in lines]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise ParseError("edge list is empty; expected an 'n m' header")
    try:
        n, m = (int(x) for x in lines[0].split())
        edges = []
        for ln in lines[1:]:
            u, v = (int(x) for x in ln.split())
            edges.append((u, v))
    except ValueError as exc:
        raise ParseError(f"malformed edge list: {exc}") from None
    if len(edges) != m:
        raise ParseError(f"header announces {m} edges but {len(edges)} lines follow")
    g = build_graph(n, edges)
    if g.edge_count != m:
        raise ParseError("edge list contains duplicate edges")
    return g
