"""Isomorph-free generation of small graphs and free trees.

Graphs are generated by canonical augmentation: a child ``H + v`` of a
parent ``H`` is kept only when the new vertex lies in the orbit of the
child's canonical deletion vertex (the vertex the canonical labeling puts
last), and isomorphic siblings from the same parent are merged.  Every
isomorphism class then has exactly one surviving generation path.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Iterator

from .canonical import CanonicalForm, canonical_form, canonical_labeling, refine, rooted_form
from .errors import CapacityError, InvalidInputError
from .graph import Graph

MAX_ORDER = 8
"""Largest order accepted by :func:`enumerate_graphs` and friends."""


def _accept(child: Graph) -> bool:
    v = child.n - 1
    cells = refine(child, [list(range(child.n))])
    last = cells[-1]
    if v not in last:
        return False
    if len(last) == 1:
        return True
    w = canonical_labeling(child)[-1]
    return w == v or rooted_form(child, v) == rooted_form(child, w)


def _children(parent: Graph, edges: int | None) -> Iterator[Graph]:
    k = parent.n
    if edges is None:
        masks = range(1 << k)
    else:
        need = edges - parent.edge_count
        if need < 0 or need > k:
            return
        masks = (sum(1 << u for u in combo) for combo in combinations(range(k), need))
    seen: set[CanonicalForm] = set()
    for mask in masks:
        child = parent.add_vertex(mask)
        if not _accept(child):
            continue
        form = canonical_form(child)
        if form in seen:
            continue
        seen.add(form)
        yield child


@lru_cache(maxsize=None)
def _all_graphs(n: int) -> tuple[Graph, ...]:
    # cached for every order below the one being streamed
    return tuple(_generate(n, None))


def _generate(n: int, edges: int | None) -> Iterator[Graph]:
    if n == 1:
        if edges in (None, 0):
            yield Graph(1, (0,))
        return
    for parent in _all_graphs(n - 1):
        if edges is not None and parent.edge_count > edges:
            continue
        yield from _children(parent, edges)


def _check_order(n: int):
    if n < 1:
        raise InvalidInputError(f"order must be >= 1, got {n}")
    if n > MAX_ORDER:
        raise CapacityError(f"graph enumeration is capped at n <= {MAX_ORDER}, got {n}")


def enumerate_graphs(n: int, edges: int | None = None) -> Iterator[Graph]:
    """One representative of every isomorphism class of order ``n``.

    With ``edges`` given, only classes with exactly that many edges.
    """
    _check_order(n)
    if n < MAX_ORDER:
        for g in _all_graphs(n):
            if edges is None or g.edge_count == edges:
                yield g
    else:
        yield from _generate(n, edges)


def enumerate_connected_graphs(n: int, edges: int | None = None) -> Iterator[Graph]:
    """One representative per connected isomorphism class of order ``n``.

    Deterministic order.  ``n`` is capped at :data:`MAX_ORDER`.
    """
    if edges is not None and n >= 1 and edges < n - 1:
        _check_order(n)
        return
    for g in enumerate_graphs(n, edges):
        if g.is_connected():
            yield g


# -- trees -------------------------------------------------------------------

def _tree_code(adj: list[list[int]], root: int, parent: int = -1) -> str:
    return "(" + "".join(sorted(_tree_code(adj, c, root) for c in adj[root] if c != parent)) + ")"


def _tree_centers(adj: list[list[int]]) -> list[int]:
    n = len(adj)
    deg = [len(a) for a in adj]
    layer = [v for v in range(n) if deg[v] <= 1]
    remaining = n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            for u in adj[v]:
                deg[u] -= 1
                if deg[u] == 1:
                    nxt.append(u)
        layer = nxt
    return layer


def tree_key(g: Graph) -> str:
    """Label-invariant code of a free tree (AHU encoding at the center)."""
    adj = [g.neighbors(v) for v in range(g.n)]
    if g.n == 1:
        return "()"
    return min(_tree_code(adj, c) for c in _tree_centers(adj))


@lru_cache(maxsize=None)
def _trees(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph(1, (0,)),)
    out: dict[str, Graph] = {}
    for t in _trees(n - 1):
        for v in range(t.n):
            child = t.add_vertex(1 << v)
            out.setdefault(tree_key(child), child)
    return tuple(out[k] for k in sorted(out))


def enumerate_trees(n: int) -> Iterator[Graph]:
    """One representative per free-tree isomorphism class of order ``n``."""
    if n < 1:
        raise InvalidInputError(f"order must be >= 1, got {n}")
    yield from _trees(n)

