"""Exhaustive computation of e_2(n) and e'_d(n), plus the color-pattern multiplicity checker.

``compute_e2`` walks edge counts upward over connected isomorphism classes
and stops at the first count with an rc = 2 graph.  A graph has rc = 2 iff
it is not complete and admits a rainbow 2-coloring; the latter needs
diameter exactly 2 and maximum degree at least ceil(sqrt(n - 1)), both
checked before the (exponential) decision procedure runs.
"""
from __future__ import annotations

import json
import math
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable

from .canonical import CanonicalForm, canonical_form
from .coloring import EdgeColoring, verify_rc_coloring
from .enumerate import MAX_ORDER, enumerate_connected_graphs, enumerate_trees
from .errors import CapacityError, InvalidInputError, ParseError
from .graph import Graph, diameter, is_tree, iter_bits
from .graph6 import graph6_decode, graph6_encode
from .solver import rc2_decide, rvc_exact, rvc_leq

SCHEMA = "rainbowconn.search-report/1"
E2_DEFAULT_CAP = 7


def delta_prune_bound(n: int) -> int:
    """ceil(sqrt(n - 1)): minimum possible maximum degree of a diameter-2 graph."""
    if n < 2:
        raise InvalidInputError("degree bound is stated for n >= 2")
    return math.isqrt(n - 2) + 1


@dataclass
class SearchReport:
    n: int
    target: str  # "e2" or "eprime"
    value: int | None  # None: no graph of order n has the requested number
    witnesses: list[CanonicalForm] = field(default_factory=list)
    d: int | None = None
    graphs_examined: int = 0
    elapsed: float = 0.0

    @property
    def feasible(self) -> bool:
        return self.value is not None

    def to_dict(self, timing: bool = True) -> dict:
        out = {
            "schema": SCHEMA,
            "n": self.n,
            "target": self.target,
            "d": self.d,
            "value": self.value,
            "witnesses": [str(w) for w in self.witnesses],
            "graphs_examined": self.graphs_examined,
        }
        if timing:
            out["elapsed"] = round(self.elapsed, 6)
        return out

    @classmethod
    def from_dict(cls, data: dict, recheck: bool = True) -> "SearchReport":
        if data.get("schema") != SCHEMA:
            raise ParseError(f"unsupported report schema {data.get('schema')!r}")
        report = cls(
            n=data["n"],
            target=data["target"],
            value=data["value"],
            witnesses=[CanonicalForm(w.encode("ascii")) for w in data["witnesses"]],
            d=data.get("d"),
            graphs_examined=data.get("graphs_examined", 0),
            elapsed=data.get("elapsed", 0.0),
        )
        if recheck:
            report.recheck()
        return report

    def recheck(self):
        """Re-verify every witness with the solvers; raise ParseError on mismatch."""
        for w in self.witnesses:
            g = graph6_decode(w.key)
            if g.n != self.n or g.edge_count != self.value:
                raise ParseError(f"witness {w} does not have order {self.n} and {self.value} edges")
            if canonical_form(g) != w:
                raise ParseError(f"witness {w} is not in canonical form")
            if self.target == "e2":
                ok = not g.is_complete() and rc2_decide(g) is not None
            else:
                ok = rvc_exact(g).value == self.d
            if not ok:
                raise ParseError(f"witness {w} does not have the required rainbow number")


def _has_rc2(g6: str) -> bool:
    return rc2_decide(graph6_decode(g6)) is not None


def _e2_candidate(g: Graph, delta: int) -> bool:
    return diameter(g) == 2 and max(g.degrees()) >= delta


def _load_checkpoint(path: Path, n: int) -> dict:
    if path.exists():
        data = json.loads(path.read_text())
        if data.get("n") == n:
            return data
    return {"n": n, "cleared": [], "graphs_examined": 0}


def compute_e2(
    n: int,
    allow_large: bool = False,
    jobs: int = 1,
    checkpoint: str | os.PathLike | None = None,
) -> SearchReport:
    """e_2(n) with every minimum-size witness, by exhaustive search.

    Orders above 7 need ``allow_large``; ``checkpoint`` names a JSON file
    recording edge counts already cleared, so an interrupted run resumes.
    """
    start = time.perf_counter()
    if n <= 2:
        return SearchReport(n, "e2", None)
    if n > MAX_ORDER or (n > E2_DEFAULT_CAP and not allow_large):
        raise CapacityError(
            f"e2 search is capped at n <= {E2_DEFAULT_CAP} (n <= {MAX_ORDER} with the override), got {n}"
        )
    delta = delta_prune_bound(n)
    ckpt_path = Path(checkpoint) if checkpoint else None
    state = _load_checkpoint(ckpt_path, n) if ckpt_path else {"cleared": [], "graphs_examined": 0}
    examined = state["graphs_examined"]
    max_edges = n * (n - 1) // 2
    pool = ProcessPoolExecutor(max_workers=jobs) if jobs > 1 else None
    try:
        for m in range(n - 1, max_edges):
            if m in state["cleared"]:
                continue
            candidates = []
            for g in enumerate_connected_graphs(n, edges=m):
                examined += 1
                if _e2_candidate(g, delta):
                    candidates.append(g)
            if pool is not None:
                codes = [graph6_encode(g) for g in candidates]
                verdicts = list(pool.map(_has_rc2, codes, chunksize=max(1, len(codes) // (4 * jobs))))
            else:
                verdicts = [rc2_decide(g) is not None for g in candidates]
            hits = [g for g, ok in zip(candidates, verdicts) if ok]
            if hits:
                witnesses = sorted({canonical_form(g) for g in hits})
                return SearchReport(n, "e2", m, witnesses, None, examined, time.perf_counter() - start)
            if ckpt_path:
                state["cleared"].append(m)
                state["graphs_examined"] = examined
                ckpt_path.write_text(json.dumps(state))
    finally:
        if pool is not None:
            pool.shutdown()
    return SearchReport(n, "e2", None, [], None, examined, time.perf_counter() - start)


def compute_e_prime(n: int, d: int) -> SearchReport:
    """e'_d(n): fewest edges of a connected order-``n`` graph with rvc exactly ``d``."""
    start = time.perf_counter()
    if d < 2:
        raise InvalidInputError(f"e'_d(n) is studied for d >= 2, got {d}")
    if n > MAX_ORDER:
        raise CapacityError(f"e' search is capped at n <= {MAX_ORDER}, got {n}")
    examined = 0
    for m in range(n - 1, n * (n - 1) // 2 + 1):
        graphs = enumerate_trees(n) if m == n - 1 else enumerate_connected_graphs(n, edges=m)
        hits = []
        for g in graphs:
            examined += 1
            if diameter(g) - 1 > d:
                continue
            if rvc_leq(g, d) is not None and rvc_leq(g, d - 1) is None:
                hits.append(g)
        if hits:
            witnesses = sorted({canonical_form(g) for g in hits})
            return SearchReport(n, "eprime", m, witnesses, d, examined, time.perf_counter() - start)
    return SearchReport(n, "eprime", None, [], d, examined, time.perf_counter() - start)


def delete_leaves(g: Graph) -> Graph | None:
    """Induced subgraph on the non-leaf vertices, or ``None`` if nothing remains."""
    keep = [v for v in range(g.n) if g.degree(v) != 1]
    return g.induced(keep) if keep else None


def characterize_minimal_rvc(n: int, d: int) -> list[CanonicalForm]:
    """Order-``n`` trees whose leaf deletion leaves a tree of order ``d``."""
    out = []
    for t in enumerate_trees(n):
        core = delete_leaves(t)
        if core is not None and core.n == d and is_tree(core):
            out.append(canonical_form(t))
    return sorted(out)


# -- color-pattern multiplicities ------------------------------------------------------------------------

@dataclass
class Claim1Report:
    """Low-degree/high-degree split of an rc = 2 coloring and the α-vector count.

    ``alpha[i]`` is the signed pattern of S-vertex ``S[i]`` over ``T``:
    +1 for a color-0 edge, -1 for a color-1 edge, 0 for a non-neighbour.
    ``multiplicities`` is an exact compressed map from completed vectors to
    n_α: each entry ``(cube, count)`` stands for every ±1 vector agreeing
    with ``cube`` on its nonzero coordinates, all of which have n_α = count.
    Completed vectors covered by no cube have n_α = 0.
    """

    n: int
    k: int
    S: list[int]
    T: list[int]
    a: list[int]
    alpha: list[tuple[int, ...]]
    e_ST: int
    multiplicities: list[tuple[tuple[int, ...], int]]
    bound: int
    max_multiplicity: int
    holds: bool
    vacuous: bool

    def multiplicity(self, alpha: tuple[int, ...]) -> int:
        for cube, count in self.multiplicities:
            if all(c == 0 or c == x for c, x in zip(cube, alpha)):
                return count
        return 0

    def histogram(self) -> dict[int, int]:
        """Number of distinct completed vectors with each multiplicity."""
        t = len(self.T)
        hist: dict[int, int] = {}
        for cube, count in self.multiplicities:
            free = t - sum(1 for c in cube if c)
            hist[count] = hist.get(count, 0) + (1 << free)
        return dict(sorted(hist.items()))

    def total_completions(self) -> int:
        """Σ_i 2^(t - a_i), the size of the multiset B."""
        t = len(self.T)
        return sum(1 << (t - ai) for ai in self.a)


def auto_threshold(n: int) -> int:
    """ceil((log2 sqrt(n))^2) = ceil((log2 n)^2 / 4)."""
    return math.ceil(math.log2(n) ** 2 / 4)


def _split_cubes(patterns: list[tuple[int, int]], t: int) -> list[tuple[int, int, int]]:
    """Partition the completions of sign patterns into cubes of equal multiplicity.

    A pattern is ``(pos, neg)`` bitmasks over the ``t`` coordinates.  Returns
    ``(pos, neg, count)`` cubes over the decided coordinates.
    """
    out = []
    stack = [(list(range(len(patterns))), 0, 0)]
    while stack:
        active, pos, neg = stack.pop()
        decided = pos | neg
        support = 0
        for i in active:
            p, q = patterns[i]
            support |= p | q
        support &= ~decided
        if not support:
            out.append((pos, neg, len(active)))
            continue
        bit = support & -support
        minus = [i for i in active if not patterns[i][0] & bit]
        plus = [i for i in active if not patterns[i][1] & bit]
        if minus:
            stack.append((minus, pos, neg | bit))
        if plus:
            stack.append((plus, pos | bit, neg))
    out.sort(key=lambda c: (-c[2], c[0], c[1]))
    return out


def claim1_verify(g: Graph, c: EdgeColoring, k: int | None = None) -> Claim1Report:
    """Check n_α <= k^2 + 1 on a rainbow 2-coloring (``k=None`` picks the automatic threshold)."""
    if c.palette_size > 2:
        raise InvalidInputError("the multiplicity check concerns 2-colorings")
    if not verify_rc_coloring(g, c):
        raise InvalidInputError("coloring is not a rainbow coloring")
    if k is None:
        k = auto_threshold(g.n)
    degs = g.degrees()
    S = [v for v in range(g.n) if degs[v] < k]
    T = [v for v in range(g.n) if degs[v] >= k]
    t = len(T)
    tpos = {v: j for j, v in enumerate(T)}
    patterns = []
    alpha = []
    a = []
    for u in S:
        pos = neg = 0
        vec = [0] * t
        for w in iter_bits(g.rows[u]):
            j = tpos.get(w)
            if j is None:
                continue
            if c.color(u, w) == 0:
                pos |= 1 << j
                vec[j] = 1
            else:
                neg |= 1 << j
                vec[j] = -1
        patterns.append((pos, neg))
        alpha.append(tuple(vec))
        a.append((pos | neg).bit_count())
    bound = k * k + 1
    vacuous = not S or not T
    if vacuous:
        cubes = []
        best = 0
    else:
        cubes = []
        for pos, neg, count in _split_cubes(patterns, t):
            cube = tuple(1 if pos >> j & 1 else -1 if neg >> j & 1 else 0 for j in range(t))
            cubes.append((cube, count))
        best = max(count for _, count in cubes)
    return Claim1Report(
        n=g.n,
        k=k,
        S=S,
        T=T,
        a=a,
        alpha=alpha,
        e_ST=sum(a),
        multiplicities=cubes,
        bound=bound,
        max_multiplicity=best,
        holds=vacuous or best <= bound,
        vacuous=vacuous,
    )


def reports_to_json(reports: Iterable[SearchReport], timing: bool = False) -> str:
    return json.dumps([r.to_dict(timing) for r in reports], indent=2, sort_keys=True) + "\n"
