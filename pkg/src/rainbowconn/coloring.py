"""Edge and vertex colorings, their rainbow verifiers, and their text format.

Both verifiers run a BFS over ``(vertex, used-color-set)`` states, so they are
exact even when colors repeat (a plain shortest-path BFS is not: the only
rainbow path between two vertices may be longer than a shortest one).  The
state space is ``n * 2**k``, hence the palette cap :data:`MAX_PALETTE`.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .errors import CapacityError, InvalidInputError, ParseError
from .graph import Graph, iter_bits

MAX_PALETTE = 20


@dataclass(frozen=True)
class EdgeColoring:
    palette_size: int
    assignment: Mapping[tuple[int, int], int]

    def __post_init__(self):
        if self.palette_size < 1:
            raise InvalidInputError("an edge coloring needs a palette of at least one color")
        norm = {}
        for (u, v), c in self.assignment.items():
            if not 0 <= c < self.palette_size:
                raise InvalidInputError(f"color {c} outside palette [0, {self.palette_size})")
            norm[(min(u, v), max(u, v))] = c
        object.__setattr__(self, "assignment", dict(sorted(norm.items())))

    def color(self, u: int, v: int) -> int:
        return self.assignment[(min(u, v), max(u, v))]

    def colors_used(self) -> int:
        return len(set(self.assignment.values()))

    def check_total(self, g: Graph):
        if set(self.assignment) != set(g.edges()):
            raise InvalidInputError("edge coloring must assign exactly the edges of the graph")


@dataclass(frozen=True)
class VertexColoring:
    """Per-vertex colors; ``palette_size == 0`` pairs with ``colors == ()``.

    The empty coloring is only ever valid on complete graphs, where no pair
    needs an internal vertex.
    """

    palette_size: int
    colors: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "colors", tuple(self.colors))
        if self.palette_size < 0:
            raise InvalidInputError("palette size must be non-negative")
        if self.palette_size == 0 and self.colors:
            raise InvalidInputError("an empty palette cannot color any vertex")
        for c in self.colors:
            if not 0 <= c < self.palette_size:
                raise InvalidInputError(f"color {c} outside palette [0, {self.palette_size})")

    def colors_used(self) -> int:
        return len(set(self.colors))

    def check_total(self, g: Graph):
        if self.palette_size and len(self.colors) != g.n:
            raise InvalidInputError(f"vertex coloring has {len(self.colors)} entries for {g.n} vertices")


@dataclass(frozen=True)
class RainbowWitness:
    kind: str  # "edge" or "vertex"
    value: int
    coloring: EdgeColoring | VertexColoring


def _require_connected(g: Graph):
    if not g.is_connected():
        raise InvalidInputError("rainbow connection is only defined for connected graphs")


def _check_palette(k: int):
    if k > MAX_PALETTE:
        raise CapacityError(f"verifier palette cap is {MAX_PALETTE} colors, got {k}")


def verify_rc_coloring(g: Graph, c: EdgeColoring) -> bool:
    """True iff every vertex pair is joined by a path with distinct edge colors."""
    _require_connected(g)
    c.check_total(g)
    _check_palette(c.palette_size)
    n = g.n
    col = [[0] * n for _ in range(n)]
    for (u, v), k in c.assignment.items():
        col[u][v] = col[v][u] = 1 << k
    for s in range(n):
        # reached[v] holds the used-color sets seen at v; a set is a bitmask
        reached = [set() for _ in range(n)]
        reached[s].add(0)
        hit = 1 << s
        frontier = [(s, 0)]
        while frontier and hit != g.full_mask:
            nxt = []
            for v, used in frontier:
                for w in iter_bits(g.rows[v]):
                    bit = col[v][w]
                    if used & bit:
                        continue
                    state = used | bit
                    if state not in reached[w]:
                        reached[w].add(state)
                        hit |= 1 << w
                        nxt.append((w, state))
            frontier = nxt
        if hit != g.full_mask:
            return False
    return True


def verify_rvc_coloring(g: Graph, c: VertexColoring) -> bool:
    """True iff every pair is joined by a path whose internal vertices have distinct colors."""
    _require_connected(g)
    c.check_total(g)
    _check_palette(c.palette_size)
    n = g.n
    if c.palette_size == 0:
        return g.is_complete()
    bit = [1 << k for k in c.colors]
    for s in range(n):
        hit = g.rows[s] | 1 << s
        reached = [set() for _ in range(n)]
        frontier = []
        for w in iter_bits(g.rows[s]):
            reached[w].add(0)
            frontier.append((w, 0))
        while frontier and hit != g.full_mask:
            nxt = []
            for v, used in frontier:
                if used & bit[v]:
                    continue
                state = used | bit[v]
                for w in iter_bits(g.rows[v]):
                    if w != s and state not in reached[w]:
                        reached[w].add(state)
                        hit |= 1 << w
                        nxt.append((w, state))
            frontier = nxt
        if hit != g.full_mask:
            return False
    return True


# -- text format ---------------------------------------------------------------

def edge_coloring_to_text(c: EdgeColoring) -> str:
    lines = [str(c.palette_size)]
    lines.extend(f"{u} {v} {k}" for (u, v), k in c.assignment.items())
    return "\n".join(lines) + "\n"


def vertex_coloring_to_text(c: VertexColoring) -> str:
    lines = [str(c.palette_size)]
    lines.extend(f"{v} {k}" for v, k in enumerate(c.colors))
    return "\n".join(lines) + "\n"


def coloring_to_text(c: EdgeColoring | VertexColoring) -> str:
    if isinstance(c, EdgeColoring):
        return edge_coloring_to_text(c)
    return vertex_coloring_to_text(c)


def coloring_from_text(text: str | Sequence[str], kind: str | None = None) -> EdgeColoring | VertexColoring:
    """Parse a ``k`` header followed by ``u v c`` (edge) or ``v c`` (vertex) lines.

    ``kind`` ("edge"/"vertex") is inferred from the field count when omitted;
    a header-only text is read as a vertex coloring.
    """
    lines = text.splitlines() if isinstance(text, str) else list(text)
    lines = [ln.split("#", 1)[0].strip() for ln in lines]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise ParseError("coloring text is empty")
    try:
        k = int(lines[0])
        rows = [[int(x) for x in ln.split()] for ln in lines[1:]]
    except ValueError as exc:
        raise ParseError(f"malformed coloring text: {exc}") from None
    widths = {len(r) for r in rows}
    if kind is None:
        kind = "edge" if widths == {3} else "vertex"
    if kind == "edge":
        if widths - {3}:
            raise ParseError("edge coloring lines must read 'u v c'")
        assignment = {}
        for u, v, col in rows:
            key = (min(u, v), max(u, v))
            if key in assignment:
                raise ParseError(f"edge {key} colored twice")
            assignment[key] = col
        return EdgeColoring(k, assignment)
    if widths - {2}:
        raise ParseError("vertex coloring lines must read 'v c'")
    colors = {}
    for v, col in rows:
        if v in colors:
            raise ParseError(f"vertex {v} colored twice")
        colors[v] = col
    if sorted(colors) != list(range(len(colors))):
        raise ParseError("vertex coloring must list vertices 0..n-1")
    return VertexColoring(k, tuple(colors[v] for v in range(len(colors))))
