"""Exact canonical labeling by individualization-refinement.

The search tree is built from label-invariant steps only (ordered equitable
refinement, first non-singleton cell as target), so the minimum leaf key over
the whole tree is an isomorphism invariant.  Subtrees are skipped only when a
discovered automorphism fixing the current prefix maps them onto an already
explored sibling, which keeps the result exact.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import total_ordering
from typing import Sequence

from .graph import Graph, iter_bits


@total_ordering
@dataclass(frozen=True)
class CanonicalForm:
    """Isomorphism-class key: the graph6 text of the canonically relabeled graph."""

    key: bytes

    def __lt__(self, other: "CanonicalForm") -> bool:
        return (len(self.key), self.key) < (len(other.key), other.key)

    def __str__(self):
        return self.key.decode("ascii")

    def graph(self) -> Graph:
        from .graph6 import graph6_decode

        return graph6_decode(self.key)


def refine(g: Graph, cells: list[list[int]]) -> list[list[int]]:
    """Coarsest equitable refinement of an ordered partition.

    Each cell is split by the vector of neighbour counts into all current
    cells; the pieces stay in place and are ordered by that vector.
    """
    rows = g.rows
    while True:
        masks = [sum(1 << v for v in cell) for cell in cells]
        out: list[list[int]] = []
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                sig = tuple((rows[v] & m).bit_count() for m in masks)
                groups.setdefault(sig, []).append(v)
            for sig in sorted(groups):
                out.append(groups[sig])
        if len(out) == len(cells):
            return out
        cells = out


def _leaf_key(g: Graph, order: Sequence[int]) -> int:
    # bit order matches graph6: x(0,1) x(0,2) x(1,2) x(0,3) ... most significant first
    rows = g.rows
    key = 0
    for j in range(1, len(order)):
        row = rows[order[j]]
        for i in range(j):
            key = key << 1 | (row >> order[i] & 1)
    return key


def _orbit_roots(n: int, gens: list[tuple[int, ...]]) -> list[int]:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for perm in gens:
        for v in range(n):
            a, b = find(v), find(perm[v])
            if a != b:
                parent[max(a, b)] = min(a, b)
    return [find(v) for v in range(n)]


class _Search:
    def __init__(self, g: Graph):
        self.g = g
        self.best_key: int | None = None
        self.best_order: list[int] | None = None
        self.first_key: int | None = None
        self.first_order: list[int] | None = None
        self.automorphisms: list[tuple[int, ...]] = []

    def _record_automorphism(self, a: list[int], b: list[int]):
        perm = [0] * self.g.n
        for x, y in zip(a, b):
            perm[x] = y
        perm = tuple(perm)
        if perm != tuple(range(self.g.n)):
            self.automorphisms.append(perm)

    def leaf(self, order: list[int]):
        key = _leaf_key(self.g, order)
        if self.first_key is None:
            self.first_key, self.first_order = key, order
        elif key == self.first_key:
            self._record_automorphism(order, self.first_order)
        if self.best_key is None or key < self.best_key:
            self.best_key, self.best_order = key, order
        elif key == self.best_key and self.best_order is not order:
            self._record_automorphism(order, self.best_order)

    def run(self, cells: list[list[int]], prefix: tuple[int, ...] = ()):
        cells = refine(self.g, cells)
        if len(cells) == self.g.n:
            self.leaf([c[0] for c in cells])
            return
        t = next(i for i, c in enumerate(cells) if len(c) > 1)
        target = cells[t]
        tried: list[int] = []
        for v in target:
            if tried:
                gens = [p for p in self.automorphisms if all(p[x] == x for x in prefix)]
                if gens:
                    roots = _orbit_roots(self.g.n, gens)
                    if any(roots[v] == roots[u] for u in tried):
                        continue
            tried.append(v)
            rest = [u for u in target if u != v]
            self.run(cells[:t] + [[v], rest] + cells[t + 1:], prefix + (v,))


def canonical_labeling(g: Graph, partition: Sequence[Sequence[int]] | None = None) -> list[int]:
    """Vertex order achieving the canonical form.

    ``order[i]`` is the vertex placed at canonical position ``i``.  An
    optional ordered ``partition`` restricts to color-preserving relabelings.
    """
    cells = [list(c) for c in partition] if partition else [list(range(g.n))]
    search = _Search(g)
    search.run(cells)
    return search.best_order


def canonical_graph(g: Graph, partition=None) -> Graph:
    order = canonical_labeling(g, partition)
    perm = [0] * g.n
    for pos, v in enumerate(order):
        perm[v] = pos
    return g.relabel(perm)


def canonical_form(g: Graph, partition=None) -> CanonicalForm:
    """Exact isomorphism key; equal keys iff the graphs are isomorphic."""
    from .graph6 import graph6_encode

    key = graph6_encode(canonical_graph(g, partition)).encode("ascii")
    if partition:
        # colored forms must not collide with plain ones or with other colorings
        sizes = ",".join(str(len(c)) for c in partition)
        key += b"|" + sizes.encode("ascii")
    return CanonicalForm(key)


def rooted_form(g: Graph, root: int) -> CanonicalForm:
    """Canonical form of ``g`` with ``root`` distinguished."""
    return canonical_form(g, [[root], [v for v in range(g.n) if v != root]])


def are_isomorphic(a: Graph, b: Graph) -> bool:
    return a.n == b.n and a.edge_count == b.edge_count and canonical_form(a) == canonical_form(b)
