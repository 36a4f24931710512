"""Exact rc(G) / rvc(G) by backtracking with constraint propagation.

Both problems share one model.  Variables are the edges (or the vertices)
and take one of ``k`` colors.  Every pair that is not trivially served
carries a list of *candidate paths*, each reduced to the set of variables
that must receive pairwise-distinct colors: the path's edges for rc, its
internal vertices for rvc.  Only paths with at most ``k`` such variables can
be rainbow, and a candidate whose variable set contains another candidate's
is dropped since it can never be the only one that works.

A candidate dies once two of its variables are fixed to the same color, or
once some variable has no color left outside the ones already fixed on that
path.  A pair with no live candidate fails the branch; a pair with exactly
one live candidate has that path forced rainbow, which prunes domains.
"""
from __future__ import annotations

from typing import Sequence

from .coloring import (
    MAX_PALETTE,
    EdgeColoring,
    RainbowWitness,
    VertexColoring,
    verify_rc_coloring,
    verify_rvc_coloring,
)
from .errors import CapacityError, InvalidInputError
from .graph import Graph, diameter, iter_bits


def _minimal_sets(sets: set[frozenset[int]]) -> list[tuple[int, ...]]:
    ordered = sorted(sets, key=lambda s: (len(s), sorted(s)))
    kept: list[frozenset[int]] = []
    for s in ordered:
        if not any(t <= s for t in kept):
            kept.append(s)
    return [tuple(sorted(s)) for s in kept]


class PathCSP:
    """All-different-on-some-path constraint problem over ``nvars`` variables."""

    def __init__(self, nvars: int, k: int, pairs: Sequence[Sequence[tuple[int, ...]]], order: Sequence[int]):
        self.nvars = nvars
        self.k = k
        self.pairs = [list(p) for p in pairs]
        self.order = list(order)
        self.var_pairs: list[list[int]] = [[] for _ in range(nvars)]
        for i, paths in enumerate(self.pairs):
            for v in sorted({v for path in paths for v in path}):
                self.var_pairs[v].append(i)
        self.nodes = 0

    def _propagate(self, dom: list[int], queue: set[int]) -> bool:
        pairs = self.pairs
        var_pairs = self.var_pairs
        while queue:
            p = queue.pop()
            live = None
            nlive = 0
            for path in pairs[p]:
                fixed = 0
                union = 0
                ok = True
                for v in path:
                    d = dom[v]
                    union |= d
                    if d & (d - 1) == 0:
                        if fixed & d:
                            ok = False
                            break
                        fixed |= d
                if not ok or union.bit_count() < len(path):
                    continue
                for v in path:
                    d = dom[v]
                    if d & (d - 1) and not d & ~fixed:
                        ok = False
                        break
                if ok:
                    nlive += 1
                    live = (path, fixed)
                    if nlive > 1:
                        break
            if nlive == 0:
                return False
            if nlive == 1:
                path, fixed = live
                for v in path:
                    d = dom[v]
                    if d & (d - 1) and d & fixed:
                        nd = d & ~fixed
                        dom[v] = nd
                        if not nd:
                            return False
                        queue.update(var_pairs[v])
        return True

    def solve(self) -> list[int] | None:
        """A color per variable, or ``None`` if the search space is exhausted."""
        if self.k < 1:
            return None if self.pairs else []
        dom = [(1 << self.k) - 1] * self.nvars
        if not self._propagate(dom, set(range(len(self.pairs)))):
            return None
        result = self._search(dom)
        if result is None:
            return None
        return [d.bit_length() - 1 for d in result]

    def _search(self, dom: list[int]) -> list[int] | None:
        self.nodes += 1
        var = next((v for v in self.order if dom[v] & (dom[v] - 1)), None)
        if var is None:
            return dom
        top = max(((d.bit_length() - 1) for d in dom if d & (d - 1) == 0), default=-1)
        d = dom[var]
        for c in iter_bits(d):
            # colors are interchangeable: never open a color beyond the next unused one
            if c > top + 1:
                break
            child = list(dom)
            child[var] = 1 << c
            if self._propagate(child, set(self.var_pairs[var])):
                found = self._search(child)
                if found is not None:
                    return found
        return None


def _relabel_first_use(colors: Sequence[int]) -> tuple[list[int], int]:
    mapping: dict[int, int] = {}
    out = []
    for c in colors:
        out.append(mapping.setdefault(c, len(mapping)))
    return out, len(mapping)


def _check_input(g: Graph):
    if not g.is_connected():
        raise InvalidInputError("rainbow connection is only defined for connected graphs")


def _check_k(k: int, low: int):
    if k < low:
        raise InvalidInputError(f"palette size must be >= {low}, got {k}")
    if k > MAX_PALETTE:
        raise CapacityError(f"palette cap is {MAX_PALETTE} colors, got {k}")


# -- edge variant ------------------------------------------------------------------

def _edge_paths(g: Graph, k: int, index: dict[tuple[int, int], int]) -> list[list[tuple[int, ...]]]:
    pairs = []
    for s in range(g.n):
        found: dict[int, set[frozenset[int]]] = {}

        def walk(v: int, visited: int, used: tuple[int, ...]):
            if len(used) >= k:
                return
            for w in iter_bits(g.rows[v] & ~visited):
                e = index[(min(v, w), max(v, w))]
                path = used + (e,)
                if w > s and not g.rows[s] >> w & 1:
                    found.setdefault(w, set()).add(frozenset(path))
                walk(w, visited | 1 << w, path)

        walk(s, 1 << s, ())
        for t in range(s + 1, g.n):
            if g.rows[s] >> t & 1:
                continue
            pairs.append(_minimal_sets(found.get(t, set())))
    return pairs


def _edge_order(g: Graph, edges: list[tuple[int, int]]) -> list[int]:
    degs = g.degrees()
    return sorted(range(len(edges)), key=lambda i: (-min(degs[edges[i][0]], degs[edges[i][1]]), i))


def rc_leq(g: Graph, k: int) -> RainbowWitness | None:
    """A rainbow edge coloring with at most ``k`` colors, or ``None`` if none exists.

    The witness palette is compacted to the colors actually used.
    """
    _check_input(g)
    if g.n < 2:
        raise InvalidInputError("rc is undefined on a single vertex")
    _check_k(k, 1)
    edges = g.edges()
    index = {e: i for i, e in enumerate(edges)}
    csp = PathCSP(len(edges), k, _edge_paths(g, k, index), _edge_order(g, edges))
    colors = csp.solve()
    if colors is None:
        return None
    colors, used = _relabel_first_use(colors)
    coloring = EdgeColoring(used, dict(zip(edges, colors)))
    return RainbowWitness("edge", used, coloring)


def rc_exact(g: Graph) -> RainbowWitness:
    """rc(G) with a certifying coloring; the search ascends from diam(G)."""
    _check_input(g)
    if g.n < 2:
        raise InvalidInputError("rc is undefined on a single vertex")
    k = diameter(g)
    while True:
        w = rc_leq(g, k)
        if w is not None:
            return w
        k += 1


# -- 2-color decision ------------------------------------------------------------------

def _find(parent: list[int], parity: list[int], x: int) -> tuple[int, int]:
    p = 0
    root = x
    while parent[root] != root:
        p ^= parity[root]
        root = parent[root]
    # path compression keeping parities relative to the root
    cur, acc = x, p
    while parent[cur] != cur:
        nxt, par = parent[cur], parity[cur]
        parent[cur], parity[cur] = root, acc
        acc ^= par
        cur = nxt
    return root, p


def rc2_decide(g: Graph) -> EdgeColoring | None:
    """Decide rc(G) <= 2; return a 2-coloring or ``None`` when refuted.

    Under two colors a rainbow path has at most two edges, so every
    non-adjacent pair needs a common neighbour reached through two
    differently colored edges.  Each such requirement is a clause of
    XOR terms over boolean edge variables.  Single-term clauses become
    parity links in a union-find first (an odd cycle there refutes at once);
    the rest go to a DPLL search with unit propagation.
    """
    _check_input(g)
    if g.n < 2:
        raise InvalidInputError("rc is undefined on a single vertex")
    edges = g.edges()
    index = {e: i for i, e in enumerate(edges)}
    m = len(edges)

    def eid(a, b):
        return index[(min(a, b), max(a, b))]

    clauses: list[list[tuple[int, int]]] = []
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if g.rows[u] >> v & 1:
                continue
            common = g.rows[u] & g.rows[v]
            if not common:
                return None
            clauses.append([(eid(u, w), eid(v, w)) for w in iter_bits(common)])

    parent = list(range(m))
    parity = [0] * m
    rest = []
    for clause in clauses:
        if len(clause) > 1:
            rest.append(clause)
            continue
        (a, b), = clause
        ra, pa = _find(parent, parity, a)
        rb, pb = _find(parent, parity, b)
        if ra == rb:
            if pa == pb:
                return None
        else:
            parent[rb] = ra
            parity[rb] = pa ^ pb ^ 1

    ref = [_find(parent, parity, e) for e in range(m)]
    roots = sorted({r for r, _ in ref})
    # a term is (root_a, parity_a, root_b, parity_b); satisfied iff the edge values differ
    terms = [[(ref[a][0], ref[a][1], ref[b][0], ref[b][1]) for a, b in cl] for cl in rest]
    watch: dict[int, list[int]] = {r: [] for r in roots}
    for i, cl in enumerate(terms):
        for ra, _, rb, _ in cl:
            watch[ra].append(i)
            if rb != ra:
                watch[rb].append(i)

    def propagate(val: dict[int, int], queue: list[int]) -> bool:
        while queue:
            r = queue.pop()
            for i in watch[r]:
                unknown = None
                n_unknown = 0
                sat = False
                for ra, pa, rb, pb in terms[i]:
                    if ra == rb:
                        if pa != pb:
                            sat = True
                            break
                        continue
                    va, vb = val.get(ra), val.get(rb)
                    if va is not None and vb is not None:
                        if va ^ pa != vb ^ pb:
                            sat = True
                            break
                        continue
                    n_unknown += 1
                    unknown = (ra, pa, va, rb, pb, vb)
                if sat:
                    continue
                if n_unknown == 0:
                    return False
                if n_unknown == 1:
                    ra, pa, va, rb, pb, vb = unknown
                    if va is not None:
                        val[rb] = va ^ pa ^ pb ^ 1
                        queue.append(rb)
                    elif vb is not None:
                        val[ra] = vb ^ pb ^ pa ^ 1
                        queue.append(ra)
        return True

    def search(val: dict[int, int]) -> dict[int, int] | None:
        r = next((x for x in roots if x not in val), None)
        if r is None:
            return val
        # value symmetry: the very first decision may be fixed to 0
        options = (0,) if not val else (0, 1)
        for b in options:
            child = dict(val)
            child[r] = b
            if propagate(child, [r]):
                found = search(child)
                if found is not None:
                    return found
        return None

    val = search({})
    if val is None:
        return None
    return EdgeColoring(2, {edges[e]: val[r] ^ p for e, (r, p) in enumerate(ref)})


# -- vertex variant --------------------------------------------------------------------

def _vertex_paths(g: Graph, k: int) -> list[list[tuple[int, ...]]] | None:
    """Candidate internal-vertex sets per non-adjacent pair.

    Pairs with a common neighbour are always served and are omitted.
    Returns ``None`` when some pair has no candidate at all.
    """
    pairs = []
    for s in range(g.n):
        found: dict[int, set[frozenset[int]]] = {}

        def walk(v: int, visited: int, inner: tuple[int, ...]):
            # v is the current endpoint; extending past v makes it internal
            if len(inner) >= k:
                return
            nxt_inner = inner + (v,)
            for w in iter_bits(g.rows[v] & ~visited):
                if w > s and not g.rows[s] >> w & 1:
                    found.setdefault(w, set()).add(frozenset(nxt_inner))
                walk(w, visited | 1 << w, nxt_inner)

        for v in iter_bits(g.rows[s]):
            walk(v, 1 << s | 1 << v, ())
        for t in range(s + 1, g.n):
            if g.rows[s] >> t & 1 or g.rows[s] & g.rows[t]:
                continue
            sets = found.get(t)
            if not sets:
                return None
            pairs.append(_minimal_sets(sets))
    return pairs


def rvc_leq(g: Graph, k: int) -> RainbowWitness | None:
    """A rainbow vertex coloring with at most ``k`` colors, or ``None``."""
    _check_input(g)
    _check_k(k, 0)
    if g.is_complete():
        return RainbowWitness("vertex", 0, VertexColoring(0, ()))
    if k == 0:
        return None
    paths = _vertex_paths(g, k)
    if paths is None:
        return None
    degs = g.degrees()
    order = sorted(range(g.n), key=lambda v: (-degs[v], v))
    colors = PathCSP(g.n, k, paths, order).solve()
    if colors is None:
        return None
    colors, used = _relabel_first_use(colors)
    return RainbowWitness("vertex", used, VertexColoring(used, tuple(colors)))


def rvc_exact(g: Graph) -> RainbowWitness:
    """rvc(G) with a certifying coloring; complete graphs (incl. K_1, K_2) give 0."""
    _check_input(g)
    k = max(diameter(g) - 1, 0)
    while True:
        w = rvc_leq(g, k)
        if w is not None:
            return w
        k += 1


def check_witness(g: Graph, w: RainbowWitness) -> bool:
    """Re-run the verifier on a witness and check its palette matches its value."""
    if w.coloring.palette_size != w.value:
        return False
    if w.kind == "edge":
        return verify_rc_coloring(g, w.coloring)
    return verify_rvc_coloring(g, w.coloring)
