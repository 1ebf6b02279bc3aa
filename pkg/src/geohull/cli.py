"""Command-line front end.

Exit codes: 0 success, 1 at least one FAIL line from a verification
subcommand, 2 unreadable or malformed input, 3 violated domain precondition
(disconnected graph, invalid instance, exhausted budget, ...).
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from . import convexity, graph as graphmod
from .chordal import chordality, simplicial_vertices
from .cnf import format_dimacs, parse_dimacs, random_restricted_cnf
from .errors import GeohullError, ParseError
from .fixtures import FIXTURES
from .reduction import (build_reduction, equivalence_check, format_labels,
                        verify_structure)
from .solver import hull_number_bruteforce, hull_number_exact


def _load_graph(path: str) -> graphmod.Graph:
    with open(path, "r", encoding="utf-8") as handle:
        return graphmod.parse_graph(handle.read())


def _load_cnf(path: str):
    with open(path, "r", encoding="utf-8") as handle:
        return parse_dimacs(handle.read())


def _parse_set(text: str) -> list[int]:
    tokens = [t.strip() for t in text.split(",") if t.strip()]
    try:
        return [int(t) for t in tokens]
    except ValueError as exc:
        raise ParseError(f"bad vertex set {text!r}") from exc


def _format_set(vertices) -> str:
    return ",".join(str(v) for v in sorted(vertices))


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="geohull",
        description="Geodetic convexity toolkit: intervals, hulls, hull "
                    "numbers, chordality, and a CNF-to-graph reduction.")
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_cmd(name: str, help_text: str, with_set: bool = False):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--graph", required=True, metavar="FILE")
        if with_set:
            p.add_argument("--set", required=True, metavar="I,J,K",
                           help="comma-separated 0-based vertex indices")
        return p

    graph_cmd("interval", "vertices on shortest paths between set members",
              with_set=True)
    graph_cmd("hull", "smallest convex superset of the set", with_set=True)
    graph_cmd("convex", "is the set convex?", with_set=True)
    graph_cmd("concave", "is the set concave?", with_set=True)
    p = graph_cmd("hullnum", "minimum hull-set size and witness")
    p.add_argument("--oracle", action="store_true",
                   help="use the brute-force subset search instead")
    p.add_argument("--budget", type=int, default=None, metavar="N",
                   help="cap on hull evaluations for the exact search")
    graph_cmd("simplicial", "vertices whose neighborhood is a clique")
    graph_cmd("chordal", "perfect elimination ordering, when one exists")
    graph_cmd("deps", "all interval dependencies {u,v} -> w")

    p = sub.add_parser("reduce", help="build the reduction graph of a CNF")
    p.add_argument("--cnf", required=True, metavar="FILE")
    p.add_argument("--out-graph", required=True, metavar="FILE")
    p.add_argument("--out-labels", required=True, metavar="FILE")

    p = sub.add_parser("verify-reduction",
                       help="run the structural checks on a CNF's reduction")
    p.add_argument("--cnf", required=True, metavar="FILE")

    p = sub.add_parser("equiv",
                       help="check satisfiable <=> hull number <= 4n")
    p.add_argument("--cnf", required=True, metavar="FILE")
    p.add_argument("--budget", type=int, default=None, metavar="N")

    p = sub.add_parser("fixture", help="emit a built-in example graph")
    p.add_argument("name", choices=sorted(FIXTURES))
    p.add_argument("--out-graph", default=None, metavar="FILE")

    p = sub.add_parser("gen-cnf", help="generate a random restricted CNF")
    p.add_argument("--n", required=True, type=int, metavar="N",
                   help="number of variables")
    p.add_argument("--seed", required=True, type=int, metavar="N")
    return parser


def _dispatch(args: argparse.Namespace) -> int:
    cmd = args.command
    if cmd in ("interval", "hull", "convex", "concave"):
        g = _load_graph(args.graph)
        s = _parse_set(args.set)
        if cmd == "interval":
            print(_format_set(convexity.interval(g, s)))
        elif cmd == "hull":
            print(_format_set(convexity.hull(g, s)))
        elif cmd == "convex":
            print("true" if convexity.is_convex(g, s) else "false")
        else:
            print("true" if convexity.is_concave(g, s) else "false")
        return 0

    if cmd == "hullnum":
        g = _load_graph(args.graph)
        if args.oracle:
            result = hull_number_bruteforce(g)
        else:
            result = hull_number_exact(g, node_budget=args.budget)
        print(f"h={result.hull_number}")
        print(f"witness={_format_set(result.witness)}")
        return 0

    if cmd == "simplicial":
        g = _load_graph(args.graph)
        print(_format_set(simplicial_vertices(g)))
        return 0

    if cmd == "chordal":
        g = _load_graph(args.graph)
        peo = chordality(g)
        if peo is None:
            print("not-chordal")
        else:
            print("chordal")
            print(" ".join(str(v) for v in peo))
        return 0

    if cmd == "deps":
        g = _load_graph(args.graph)
        for dep in convexity.interval_dependencies(g):
            u, v = dep.premise
            print(f"{{{u},{v}}} -> {dep.consequence}")
        return 0

    if cmd == "reduce":
        rg = build_reduction(_load_cnf(args.cnf))
        with open(args.out_graph, "w", encoding="utf-8") as handle:
            handle.write(graphmod.format_graph(rg.graph))
        with open(args.out_labels, "w", encoding="utf-8") as handle:
            handle.write(format_labels(rg))
        print(f"vertices={rg.graph.vertex_count} "
              f"edges={rg.graph.edge_count} k={rg.k}")
        return 0

    if cmd == "verify-reduction":
        report = verify_structure(build_reduction(_load_cnf(args.cnf)))
        for line in report.lines():
            print(line)
        return 0 if report.passed else 1

    if cmd == "equiv":
        report = equivalence_check(_load_cnf(args.cnf), node_budget=args.budget)
        for line in report.lines():
            print(line)
        return 0 if report.passed else 1

    if cmd == "fixture":
        text = graphmod.format_graph(FIXTURES[args.name]())
        if args.out_graph:
            with open(args.out_graph, "w", encoding="utf-8") as handle:
                handle.write(text)
        else:
            print(text, end="")
        return 0

    if cmd == "gen-cnf":
        print(format_dimacs(random_restricted_cnf(args.n, args.seed)), end="")
        return 0

    raise AssertionError(f"unhandled command {cmd!r}")


def run(argv: Sequence[str]) -> int:
    """Parse and execute one invocation; returns the exit code."""
    args = _build_parser().parse_args(list(argv))
    try:
        return _dispatch(args)
    except (ParseError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (GeohullError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
