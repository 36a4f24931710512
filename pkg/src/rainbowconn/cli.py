"""Command-line front end.

Exit status: 0 success, 1 refuted / infeasible / invalid coloring,
2 invalid input, 3 capacity exceeded.
"""
from __future__ import annotations

import argparse
import json
import os
import re
import sys

from .bounds import LEMMA2_II_MIN, ratio_table, rows_to_csv, sandwich_check
from .coloring import (
    EdgeColoring,
    VertexColoring,
    coloring_from_text,
    coloring_to_text,
    verify_rc_coloring,
    verify_rvc_coloring,
)
from .constructions import bipartite_code_coloring, lemma1_family, minimal_rvc_tree, tree_rvc_coloring
from .errors import CapacityError, InfeasibleError, InvalidInputError, ParseError, RainbowError
from .graph import (
    Graph,
    build_graph,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    path_graph,
    star_graph,
)
from .graph6 import edgelist_decode, graph6_decode, graph6_encode
from .search import compute_e2, compute_e_prime
from .solver import rc_exact, rc_leq, rvc_exact, rvc_leq

OK, NEGATIVE, BAD_INPUT, CAPACITY = 0, 1, 2, 3


def _ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise ParseError(f"expected comma-separated integers, got {text!r}") from None


def parse_graph(spec: str) -> Graph:
    """Graph from family syntax (``Kst:2,3``, ``Pn:5``, ``Cn:4``, ``Kn:5``,
    ``Sn:4``, ``tree:0-1,1-2``), an edge-list file path, or a graph6 string."""
    if ":" in spec and not os.path.exists(spec):
        family, _, args = spec.partition(":")
        if family == "Kst":
            s, t = _ints(args)
            return complete_bipartite(s, t)
        if family in ("Pn", "Cn", "Kn", "Sn"):
            (n,) = _ints(args)
            return {"Pn": path_graph, "Cn": cycle_graph, "Kn": complete_graph, "Sn": star_graph}[family](n)
        if family in ("tree", "edges"):
            try:
                pairs = [tuple(int(x) for x in e.split("-")) for e in args.split(",") if e]
            except ValueError:
                raise ParseError(f"edge items must read 'u-v': {args!r}") from None
            if any(len(p) != 2 for p in pairs):
                raise ParseError(f"edge items must read 'u-v': {args!r}")
            n = max((max(p) for p in pairs), default=0) + 1
            return build_graph(n, pairs)
        raise ParseError(f"unknown graph family {family!r}")
    if os.path.exists(spec):
        with open(spec) as fh:
            text = fh.read()
        first = next((ln.strip() for ln in text.splitlines() if ln.strip()), "")
        if first and not first[0].isdigit():
            return graph6_decode(first)
        return edgelist_decode(text)
    return graph6_decode(spec)


def _coloring_json(c) -> dict:
    if isinstance(c, EdgeColoring):
        return {"palette_size": c.palette_size, "edges": [[u, v, k] for (u, v), k in c.assignment.items()]}
    return {"palette_size": c.palette_size, "vertices": list(c.colors)}


def _bundle(g: Graph, c) -> str:
    return graph6_encode(g) + "\n" + coloring_to_text(c)


class _Output:
    def __init__(self, path: str | None):
        self.path = path
        self.parts: list[str] = []

    def write(self, text: str):
        self.parts.append(text)

    def flush(self):
        text = "".join(self.parts)
        if self.path:
            with open(self.path, "w") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)


def _emit_json(out: _Output, payload: dict):
    out.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")


def cmd_rainbow(args, out: _Output) -> int:
    g = parse_graph(args.graph)
    edge = args.command == "rc"
    if args.colors is None:
        w = rc_exact(g) if edge else rvc_exact(g)
    else:
        w = rc_leq(g, args.colors) if edge else rvc_leq(g, args.colors)
    if args.format == "g6":
        if w is None:
            print("exhausted", file=sys.stderr)
        else:
            out.write(_bundle(g, w.coloring))
    else:
        _emit_json(out, {
            "schema": "rainbowconn.rainbow/1",
            "kind": "edge" if edge else "vertex",
            "graph": graph6_encode(g),
            "colors": args.colors,
            "status": "exhausted" if w is None else "found",
            "value": None if w is None else w.value,
            "coloring": None if w is None else _coloring_json(w.coloring),
        })
    return NEGATIVE if w is None else OK


def cmd_search(args, out: _Output) -> int:
    if args.target == "e2":
        report = compute_e2(args.n, allow_large=args.cap_override, jobs=args.jobs, checkpoint=args.checkpoint)
    else:
        if args.d is None:
            raise InvalidInputError("eprime search needs --d")
        report = compute_e_prime(args.n, args.d)
    if args.format == "g6":
        out.write("".join(f"{w}\n" for w in report.witnesses))
    else:
        _emit_json(out, report.to_dict(timing=args.timing))
    return OK if report.feasible else NEGATIVE


_NUM = re.compile(r"^(\d+)(?:\^(\d+))?$")


def _number(tok: str) -> int:
    m = _NUM.match(tok.strip())
    if not m:
        raise ParseError(f"not a number: {tok!r}")
    base, exp = m.groups()
    return int(base) ** int(exp) if exp else int(base)


def parse_orders(tokens: list[str], mul: int | None, add: int | None) -> list[int]:
    """Orders from tokens like ``1000``, ``2^17``, ``10^6`` or ranges ``2^17..2^20``."""
    ns = []
    for tok in tokens:
        for part in tok.split(","):
            if ".." in part:
                lo, hi = (_number(x) for x in part.split("..", 1))
                if add:
                    ns.extend(range(lo, hi + 1, add))
                else:
                    step = mul or 2
                    if step < 2:
                        raise InvalidInputError("multiplicative step must be >= 2")
                    x = lo
                    while x <= hi:
                        ns.append(x)
                        x *= step
            elif part:
                ns.append(_number(part))
    return ns


def cmd_bounds(args, out: _Output) -> int:
    ns = parse_orders(args.orders, args.mul, args.add)
    rows = ratio_table(ns)
    sandwich = sandwich_check(ns) if ns and min(ns) >= LEMMA2_II_MIN else None
    if args.format == "json":
        _emit_json(out, {
            "schema": "rainbowconn.bounds/1",
            "rows": [
                {
                    "n": r.n, "upper": r.upper, "lower_i": r.lower_i, "lower_ii": r.lower_ii,
                    "upper_ratio": r.upper_ratio, "lower_ratio": r.lower_ratio,
                }
                for r in rows
            ],
            "sandwich_check": sandwich,
        })
    else:
        out.write(rows_to_csv(rows))
    if sandwich is not None:
        print(f"sandwich_check: {str(sandwich).lower()}", file=sys.stderr)
    return NEGATIVE if sandwich is False else OK


def cmd_construct(args, out: _Output) -> int:
    fam = args.family
    if fam == "lemma1":
        built = lemma1_family(args.n)
        g, c, extra = built.graph, built.coloring, {"k": built.k, "edge_count": built.edge_count}
    elif fam == "code":
        g, c, extra = complete_bipartite(args.s, args.t), bipartite_code_coloring(args.s, args.t), {}
    elif fam == "rvc-tree":
        built = minimal_rvc_tree(args.n, args.d)
        g, c, extra = built.tree, built.coloring, {"d": built.d}
    elif fam == "tree-coloring":
        if not args.graph:
            raise InvalidInputError("tree-coloring needs --graph")
        g = parse_graph(args.graph)
        c, extra = tree_rvc_coloring(g), {}
    else:
        raise InvalidInputError(f"unknown family {fam!r}")
    if args.format == "json":
        _emit_json(out, {
            "schema": "rainbowconn.construct/1",
            "family": fam,
            "graph": graph6_encode(g),
            "kind": "edge" if isinstance(c, EdgeColoring) else "vertex",
            "coloring": _coloring_json(c),
            **extra,
        })
    else:
        out.write(_bundle(g, c))
    return OK


def cmd_verify(args, out: _Output) -> int:
    if args.coloring is None:
        # single bundle file: graph6 line, then the coloring text
        with open(args.graph) as fh:
            lines = [ln for ln in fh.read().splitlines() if ln.strip()]
        if not lines:
            raise ParseError("bundle file is empty")
        g = graph6_decode(lines[0])
        c = coloring_from_text(lines[1:], args.kind)
    else:
        g = parse_graph(args.graph)
        with open(args.coloring) as fh:
            lines = [ln for ln in fh.read().splitlines() if ln.strip()]
        if lines and not lines[0].strip()[0].isdigit():
            lines = lines[1:]  # tolerate a bundle's leading graph6 line
        c = coloring_from_text(lines, args.kind)
    if isinstance(c, VertexColoring):
        valid = verify_rvc_coloring(g, c)
    else:
        valid = verify_rc_coloring(g, c)
    if args.format == "json":
        _emit_json(out, {
            "schema": "rainbowconn.verify/1",
            "graph": graph6_encode(g),
            "kind": "vertex" if isinstance(c, VertexColoring) else "edge",
            "palette_size": c.palette_size,
            "valid": valid,
        })
    else:
        out.write(f"{str(valid).lower()}\n")
    return OK if valid else NEGATIVE


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "g6"), default=None)
    common.add_argument("--jobs", type=int, default=1, help="worker processes for extremal search")
    common.add_argument("--cap-override", action="store_true", help="allow the n = 8 e2 search")
    common.add_argument("--colors", type=int, default=None, help="palette bound k for rc/rvc")
    common.add_argument("--out", default=None, help="write the payload to FILE instead of stdout")

    parser = argparse.ArgumentParser(prog="rainbowconn", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    for name in ("rc", "rvc"):
        p = sub.add_parser(name, parents=[common], help=f"exact {name} of a graph, or decide {name} <= --colors")
        p.add_argument("graph")
        p.set_defaults(func=cmd_rainbow, default_format="json")

    p = sub.add_parser("search", parents=[common], help="exhaustive e2(n) / e'_d(n)")
    p.add_argument("target", choices=("e2", "eprime"))
    p.add_argument("n", type=int)
    p.add_argument("--d", type=int, default=None)
    p.add_argument("--checkpoint", default=None, help="progress file for long e2 runs")
    p.add_argument("--timing", action="store_true", help="include elapsed seconds in the report")
    p.set_defaults(func=cmd_search, default_format="json")

    p = sub.add_parser("bounds", parents=[common], help="bound formulas and ratio table")
    p.add_argument("orders", nargs="+", help="orders: 1000, 2^17, 10^6, or ranges like 2^17..2^20")
    p.add_argument("--mul", type=int, default=None, help="multiplicative range step (default 2)")
    p.add_argument("--add", type=int, default=None, help="additive range step")
    p.set_defaults(func=cmd_bounds, default_format="csv")

    p = sub.add_parser("construct", parents=[common], help="build a family with its certifying coloring")
    p.add_argument("family", choices=("lemma1", "code", "rvc-tree", "tree-coloring"))
    p.add_argument("--n", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--graph", default=None)
    p.set_defaults(func=cmd_construct, default_format="g6")

    p = sub.add_parser("verify", parents=[common], help="check a coloring against a graph")
    p.add_argument("graph", help="graph spec, or a bundle file when COLORING is omitted")
    p.add_argument("coloring", nargs="?", default=None)
    p.add_argument("--kind", choices=("edge", "vertex"), default=None)
    p.set_defaults(func=cmd_verify, default_format="csv")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.format is None:
        args.format = args.default_format
    out = _Output(args.out)
    try:
        status = args.func(args, out)
    except CapacityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return CAPACITY
    except InfeasibleError as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return NEGATIVE
    except (InvalidInputError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return BAD_INPUT
    except RainbowError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return BAD_INPUT
    out.flush()
    return status


if __name__ == "__main__":
    sys.exit(main())
