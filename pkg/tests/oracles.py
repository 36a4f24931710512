"""Brute-force reference implementations used only by the tests.

None of these share code paths with the package beyond the Graph container:
paths are enumerated explicitly, colorings exhaustively, and isomorphism
classes by sweeping every labeled graph through every vertex permutation.
"""
from itertools import combinations, permutations, product

from rainbowconn.graph import Graph, build_graph


def all_pairs(n):
    return [(u, v) for u in range(n) for v in range(u + 1, n)]


def labeled_graph(n, mask):
    return build_graph(n, [p for i, p in enumerate(all_pairs(n)) if mask >> i & 1])


def connected(n, edges):
    adj = {v: set() for v in range(n)}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    seen, stack = {0}, [0]
    while stack:
        v = stack.pop()
        for w in adj[v] - seen:
            seen.add(w)
            stack.append(w)
    return len(seen) == n


def isomorphism_classes(n):
    """Minimum-mask representative of every class of labeled graphs on n vertices.

    Sweeps masks upward; the first unseen mask of an orbit is its minimum,
    and all n! images are then marked.  Feasible for n <= 6.
    """
    pairs = all_pairs(n)
    pos = {p: i for i, p in enumerate(pairs)}
    maps = []
    for perm in permutations(range(n)):
        maps.append([pos[tuple(sorted((perm[u], perm[v])))] for u, v in pairs])
    seen = bytearray(1 << len(pairs))
    reps = []
    for mask in range(1 << len(pairs)):
        if seen[mask]:
            continue
        reps.append(mask)
        bits = [i for i in range(len(pairs)) if mask >> i & 1]
        for mp in maps:
            seen[sum(1 << mp[i] for i in bits)] = 1
    return [[pairs[i] for i in range(len(pairs)) if m >> i & 1] for m in reps]


def simple_paths(g: Graph, s, t, max_len=None):
    """All simple s-t paths as vertex lists."""
    out = []

    def dfs(path):
        v = path[-1]
        if v == t:
            out.append(list(path))
            return
        if max_len is not None and len(path) - 1 >= max_len:
            return
        for w in range(g.n):
            if g.has_edge(v, w) and w not in path:
                path.append(w)
                dfs(path)
                path.pop()

    dfs([s])
    return out


def naive_rc_valid(g: Graph, color):
    """color: dict (u, v) with u < v -> color."""
    for s, t in all_pairs(g.n):
        ok = False
        for p in simple_paths(g, s, t):
            cols = [color[tuple(sorted(e))] for e in zip(p, p[1:])]
            if len(set(cols)) == len(cols):
                ok = True
                break
        if not ok:
            return False
    return True


def naive_rvc_valid(g: Graph, colors):
    for s, t in all_pairs(g.n):
        ok = False
        for p in simple_paths(g, s, t):
            inner = [colors[v] for v in p[1:-1]]
            if len(set(inner)) == len(inner):
                ok = True
                break
        if not ok:
            return False
    return True


def naive_rc_leq(g: Graph, k):
    """Try every k-coloring of the edges; return one that works or None."""
    edges = g.edges()
    index = {e: i for i, e in enumerate(edges)}
    routes = [
        [[index[tuple(sorted(e))] for e in zip(p, p[1:])] for p in simple_paths(g, s, t)]
        for s, t in all_pairs(g.n)
    ]
    for cols in product(range(k), repeat=len(edges)):
        if all(any(len({cols[i] for i in r}) == len(r) for r in rs) for rs in routes):
            return dict(zip(edges, cols))
    return None


def naive_rvc_leq(g: Graph, k):
    if k == 0:
        return () if g.is_complete() else None
    for cols in product(range(k), repeat=g.n):
        if naive_rvc_valid(g, cols):
            return cols
    return None


def naive_rc(g: Graph):
    k = 1
    while naive_rc_leq(g, k) is None:
        k += 1
    return k


def brute_e2(n):
    """e_2(n) over all labeled graphs and all 2-colorings; (value, edge lists)."""
    pairs = all_pairs(n)
    for m in range(n - 1, len(pairs)):
        found = []
        for edges in combinations(pairs, m):
            if not connected(n, edges):
                continue
            g = build_graph(n, edges)
            if naive_rc_leq(g, 2) is not None:
                found.append(list(edges))
        if found:
            return m, found
    return None, []


def leaf_deleted_order(g: Graph):
    return sum(1 for v in range(g.n) if g.degree(v) > 1)
