"""Immutable simple graphs on dense 0-based labels, stored as adjacency bitmasks.

Row ``v`` of a :class:`Graph` is a Python int whose bit ``u`` is set iff
``{u, v}`` is an edge.  Everything else in the package builds on this
representation: BFS is a handful of ``&``/``|`` operations per layer and
neighbourhood counts are ``int.bit_count`` calls.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .errors import InvalidInputError


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    n: int
    rows: tuple[int, ...]
    edge_count: int = field(init=False, compare=False)

    def __post_init__(self):
        if self.n < 1:
            raise InvalidInputError(f"graph order must be >= 1, got {self.n}")
        if len(self.rows) != self.n:
            raise InvalidInputError("need exactly one adjacency row per vertex")
        full = (1 << self.n) - 1
        twice = 0
        for v, row in enumerate(self.rows):
            if row & ~full or row >> v & 1:
                raise InvalidInputError(f"row {v} has a loop or out-of-range bit")
            for u in iter_bits(row):
                if not self.rows[u] >> v & 1:
                    raise InvalidInputError(f"adjacency not symmetric at ({u}, {v})")
            twice += row.bit_count()
        object.__setattr__(self, "edge_count", twice // 2)

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.rows[v]))

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.rows]

    def edges(self) -> list[tuple[int, int]]:
        """All edges as ``(u, v)`` with ``u < v``, sorted lexicographically."""
        return [(u, v) for u in range(self.n) for v in iter_bits(self.rows[u] >> (u + 1) << (u + 1))]

    def is_complete(self) -> bool:
        return self.edge_count == self.n * (self.n - 1) // 2

    def bfs_layers(self, source: int) -> list[int]:
        """Distance layers from ``source`` as bitmasks; layer 0 is the source."""
        seen = frontier = 1 << source
        layers = [frontier]
        while True:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= self.rows[v]
            nxt &= ~seen
            if not nxt:
                return layers
            seen |= nxt
            layers.append(nxt)
            frontier = nxt

    def distances_from(self, source: int) -> list[int | None]:
        dist: list[int | None] = [None] * self.n
        for d, layer in enumerate(self.bfs_layers(source)):
            for v in iter_bits(layer):
                dist[v] = d
        return dist

    def is_connected(self) -> bool:
        reached = 0
        for layer in self.bfs_layers(0):
            reached |= layer
        return reached == self.full_mask

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the graph in which old vertex ``v`` becomes ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise InvalidInputError("relabeling must be a permutation of the vertices")
        rows = [0] * self.n
        for v, row in enumerate(self.rows):
            new = 0
            for u in iter_bits(row):
                new |= 1 << perm[u]
            rows[perm[v]] = new
        return Graph(self.n, tuple(rows))

    def complement(self) -> "Graph":
        full = self.full_mask
        return Graph(self.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(self.rows)))

    def induced(self, vertices: Iterable[int]) -> "Graph":
        """Induced subgraph, relabeled densely in the given vertex order."""
        keep = list(vertices)
        index = {v: i for i, v in enumerate(keep)}
        rows = []
        for v in keep:
            new = 0
            for u in iter_bits(self.rows[v]):
                if u in index:
                    new |= 1 << index[u]
            rows.append(new)
        return Graph(len(keep), tuple(rows))

    def add_vertex(self, neighbor_mask: int) -> "Graph":
        """Append vertex ``n`` adjacent to the vertices in ``neighbor_mask``."""
        v = self.n
        rows = [row | ((neighbor_mask >> u & 1) << v) for u, row in enumerate(self.rows)]
        rows.append(neighbor_mask)
        return Graph(v + 1, tuple(rows))


@dataclass(frozen=True)
class DegreeProfile:
    degrees: tuple[int, ...]
    max_degree: int


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an edge list; duplicate pairs collapse to one edge.

    Raises InvalidInputError on loops or endpoints outside ``[0, n)``.
    """
    if n < 1:
        raise InvalidInputError(f"graph order must be >= 1, got {n}")
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise InvalidInputError(f"edge ({u}, {v}) has an endpoint outside [0, {n})")
        if u == v:
            raise InvalidInputError(f"loop at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def diameter(g: Graph) -> int | None:
    """Graph diameter, or ``None`` when ``g`` is disconnected."""
    best = 0
    for s in range(g.n):
        layers = g.bfs_layers(s)
        reached = 0
        for layer in layers:
            reached |= layer
        if reached != g.full_mask:
            return None
        best = max(best, len(layers) - 1)
    return best


def degree_profile(g: Graph) -> DegreeProfile:
    degs = tuple(g.degrees())
    return DegreeProfile(degs, max(degs))


def leaves(g: Graph) -> list[int]:
    return [v for v in range(g.n) if g.degree(v) == 1]


def is_tree(g: Graph) -> bool:
    return g.edge_count == g.n - 1 and g.is_connected()


# -- standard families -------------------------------------------------------

def complete_graph(n: int) -> Graph:
    return build_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def path_graph(n: int) -> Graph:
    return build_graph(n, [(v, v + 1) for v in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise InvalidInputError("a cycle needs at least 3 vertices")
    return build_graph(n, [(v, (v + 1) % n) for v in range(n)])


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with the hub at label 0."""
    return build_graph(leaves + 1, [(0, v) for v in range(1, leaves + 1)])


def complete_bipartite(s: int, t: int) -> Graph:
    """K_{s,t}; part X is ``[0, s)`` and part Y is ``[s, s + t)``."""
    if s < 1 or t < 1:
        raise InvalidInputError("both parts of K_{s,t} need at least one vertex")
    return build_graph(s + t, [(x, s + y) for x in range(s) for y in range(t)])
