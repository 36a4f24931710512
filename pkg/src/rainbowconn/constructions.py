"""Extremal families with explicit certifying colorings."""
from __future__ import annotations

from dataclasses import dataclass

from .coloring import EdgeColoring, VertexColoring
from .errors import InfeasibleError, InvalidInputError
from .graph import Graph, build_graph, complete_bipartite, is_tree


@dataclass(frozen=True)
class Lemma1Family:
    """K_{k,n-k} with a rainbow 2-coloring; ``k`` satisfies k + 2^(k-1) <= n <= k + 2^k."""

    n: int
    k: int
    graph: Graph
    coloring: EdgeColoring

    @property
    def edge_count(self) -> int:
        return self.k * (self.n - self.k)


@dataclass(frozen=True)
class MinimalRvcTree:
    n: int
    d: int
    tree: Graph
    coloring: VertexColoring


def binary_code_matrix(s: int, t: int) -> list[list[int]]:
    """``s x t`` matrix whose column ``j`` holds the low ``s`` bits of ``j``.

    Row ``i`` is bit ``i``.  For ``t > 2**s`` columns start repeating.
    """
    return [[j >> i & 1 for j in range(t)] for i in range(s)]


def coloring_from_matrix(s: int, matrix: list[list[int]]) -> EdgeColoring:
    """Color edge ``(x_i, y_j)`` of K_{s,t} with ``matrix[i][j]`` (two colors)."""
    return EdgeColoring(2, {(i, s + j): c for i, row in enumerate(matrix) for j, c in enumerate(row)})


def bipartite_code_coloring(s: int, t: int) -> EdgeColoring:
    """Rainbow 2-coloring of K_{s,t} from binary codes.

    X-Y pairs are adjacent, two Y vertices see different colors on some
    x because their codes differ, and two X vertices see different colors
    on some y because their rows differ.  Refuses parameters where columns
    or rows coincide.
    """
    if s < 1 or t < 1:
        raise InvalidInputError("both parts of K_{s,t} need at least one vertex")
    if t > 1 << s:
        raise InvalidInputError(f"t={t} exceeds 2^s={1 << s}: two Y vertices would share a code; use rc_exact")
    matrix = binary_code_matrix(s, t)
    if len({tuple(r) for r in matrix}) < s:
        raise InvalidInputError(
            f"code matrix for K_{{{s},{t}}} has repeated rows (t < 2^(s-1)); use rc_exact"
        )
    return coloring_from_matrix(s, matrix)


def lemma1_k(n: int) -> int:
    """Smallest k with k + 2^(k-1) <= n <= k + 2^k."""
    if n < 3:
        raise InfeasibleError("no graph on at most 2 vertices has rc = 2")
    k = 1
    while not (k + (1 << (k - 1)) <= n <= k + (1 << k)):
        k += 1
    return k


def lemma1_family(n: int) -> Lemma1Family:
    k = lemma1_k(n)
    return Lemma1Family(n, k, complete_bipartite(k, n - k), bipartite_code_coloring(k, n - k))


def internal_vertices(tree: Graph) -> list[int]:
    return [v for v in range(tree.n) if tree.degree(v) > 1]


def tree_rvc_coloring(tree: Graph) -> VertexColoring:
    """Distinct colors on the internal vertices (in label order), color 0 on leaves."""
    if not is_tree(tree):
        raise InvalidInputError("tree_rvc_coloring needs a tree")
    inner = internal_vertices(tree)
    if not inner:
        raise InvalidInputError("tree has no internal vertex (K_1 or K_2)")
    color = {v: i for i, v in enumerate(inner)}
    return VertexColoring(len(inner), tuple(color.get(v, 0) for v in range(tree.n)))


def minimal_rvc_tree(n: int, d: int) -> MinimalRvcTree:
    """An order-``n`` tree whose leaf deletion is the path P_d.

    Internal path ``0 - 1 - ... - d-1``; the ``n - d`` leaves are split
    between the two path ends, the odd one going to the end ``d - 1``.
    """
    if d < 2 or n < d + 2:
        raise InfeasibleError(f"no minimal rvc tree for n={n}, d={d}: need d >= 2 and n >= d + 2")
    edges = [(v, v + 1) for v in range(d - 1)]
    extra = n - d
    first = extra // 2
    for i, leaf in enumerate(range(d, n)):
        edges.append((0 if i < first else d - 1, leaf))
    tree = build_graph(n, edges)
    return MinimalRvcTree(n, d, tree, tree_rvc_coloring(tree))
