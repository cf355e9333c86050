"""Command-line harness: generate graphs, label them, solve exactly, verify families.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 node budget
exceeded. Human-readable summaries go to stdout; JSON reports go to --out.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from random import Random

from . import verify as verify_suites
from .constructions import (
    projective_plane_incidence,
    torus_digraph,
    triple_copy,
)
from .digraph import (
    GraphError,
    OrientedGraph,
    block_decomposition,
    degrees,
    format_edge_list,
    parse_edge_list,
    to_dot,
    underlying,
)
from .exact import DEFAULT_NODE_BUDGET, exact_lambda
from .labeling import (
    block_inductive_label,
    build_constraints,
    format_labeling,
    greedy_label,
    greedy_span_bound,
    labeling_report,
    parse_constraint_set,
    P1_ONLY,
)
from .randgraph import random_oriented_graph

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def _write_or_print(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _load_graph(path: str) -> OrientedGraph:
    return parse_edge_list(Path(path).read_text(encoding="utf-8"))


def _order_for(policy: str, g: OrientedGraph, seed: int) -> list[int]:
    if policy == "id":
        return list(range(g.n))
    if policy == "rev":
        return list(reversed(range(g.n)))
    if policy == "rand":
        order = list(range(g.n))
        Random(seed).shuffle(order)
        return order
    if policy == "deg":
        per = degrees(g).per_vertex
        return sorted(range(g.n), key=lambda v: (-(per[v][0] + per[v][1]), v))
    raise ValueError(f"unknown order policy {policy!r}")


def cmd_gen(args) -> int:
    if args.kind == "torus":
        if args.k is None:
            print("gen torus requires --k", file=sys.stderr)
            return EXIT_USAGE
        g = torus_digraph(args.k)
    elif args.kind == "plane":
        if args.q is None:
            print("gen plane requires --q", file=sys.stderr)
            return EXIT_USAGE
        g = projective_plane_incidence(args.q)
    elif args.kind == "triple":
        if args.q is None:
            print("gen triple requires --q", file=sys.stderr)
            return EXIT_USAGE
        g = triple_copy(args.q)
    else:  # random
        if args.n is None or args.arcs is None:
            print("gen random requires --n and --arcs", file=sys.stderr)
            return EXIT_USAGE
        g = random_oriented_graph(args.n, args.arcs, args.seed)
    text = to_dot(g) if args.format == "dot" else format_edge_list(g)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    summary = f"n={g.n} arcs={len(g.arcs)} max_in_out={degrees(g).max_in_out}"
    print(summary, file=sys.stdout if args.out else sys.stderr)
    return EXIT_OK


def cmd_label(args) -> int:
    g = _load_graph(args.graph)
    s = parse_constraint_set(args.s)
    if args.alg == "block":
        if s != P1_ONLY:
            print("the block algorithm requires --s P1", file=sys.stderr)
            return EXIT_USAGE
        labeling = block_inductive_label(g)
        k = _block_k(g)
    else:
        labeling = greedy_label(g, s, _order_for(args.order, g, args.seed))
        k = degrees(g).max_in_out
    bound = greedy_span_bound(s, k)
    report = labeling_report(build_constraints(g, s), labeling, bound)
    report.update(
        {"algorithm": args.alg, "constraint_set": sorted(p.value for p in s), "k": k}
    )
    if args.labels_out:
        Path(args.labels_out).write_text(format_labeling(labeling), encoding="utf-8")
    if args.out:
        Path(args.out).write_text(json.dumps(report, indent=2) + "\n", encoding="utf-8")
    print(
        f"span={report['span']} valid={report['valid']} "
        f"bound={report['bound']} bound_satisfied={report['bound_satisfied']}"
    )
    return EXIT_OK


def _block_k(g: OrientedGraph) -> int:
    from .digraph import block_degree_bound

    return block_degree_bound(g, block_decomposition(underlying(g)))


def cmd_exact(args) -> int:
    g = _load_graph(args.graph)
    s = parse_constraint_set(args.s)
    result = exact_lambda(g, s, node_budget=args.budget)
    payload = json.dumps(result.to_json_dict(), indent=2) + "\n"
    if args.out:
        Path(args.out).write_text(payload, encoding="utf-8")
    print(
        f"lambda={result.lam} exact={result.exact} nodes={result.nodes_explored} "
        f"lower_bound={result.lower_bound_used}"
    )
    return EXIT_OK if result.exact else EXIT_BUDGET


def cmd_verify(args) -> int:
    if args.suite == "torus":
        report = verify_suites.torus_suite(args.k_min, args.k_max)
    elif args.suite == "plane":
        qs = [int(x) for x in args.q.split(",")] if args.q else (2, 3, 5, 7)
        report = verify_suites.plane_suite(qs)
    elif args.suite == "triple":
        qs = [int(x) for x in args.q.split(",")] if args.q else (2,)
        report = verify_suites.triple_suite(qs)
    elif args.suite == "identities":
        report = verify_suites.identities_suite(
            n_max=args.n, count=args.count, seed=args.seed, node_budget=args.budget
        )
    else:  # symmetry
        report = verify_suites.symmetry_suite(
            n_max=args.n, count=args.count, seed=args.seed, node_budget=args.budget
        )
    if args.out:
        Path(args.out).write_text(json.dumps(report, indent=2) + "\n", encoding="utf-8")
    for check in report["checks"]:
        status = "PASS" if check["passed"] else "FAIL"
        print(f"{status} {check['name']}")
    print(f"suite={report['suite']} passed={report['passed']}")
    return EXIT_OK if report["passed"] else EXIT_VERIFY_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ol21",
        description="Span labelings of oriented graphs under length-2 path constraints.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a graph and write its edge list")
    gen.add_argument("kind", choices=["torus", "plane", "triple", "random"])
    gen.add_argument("--k", type=int, help="torus modulus (>= 4)")
    gen.add_argument("--q", type=int, help="projective plane order (prime)")
    gen.add_argument("--n", type=int, help="vertex count for random graphs")
    gen.add_argument("--arcs", type=int, help="arc count for random graphs")
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--format", choices=["edgelist", "dot"], default="edgelist")
    gen.add_argument("--out", help="output path (default: stdout)")
    gen.set_defaults(func=cmd_gen)

    label = sub.add_parser("label", help="label a graph and report span vs bound")
    label.add_argument("--graph", required=True, help="edge-list file")
    label.add_argument("--s", default="P1", help="constraint set: e.g. P1,P2 | all | none")
    label.add_argument("--alg", choices=["greedy", "block"], default="greedy")
    label.add_argument("--order", choices=["id", "rev", "rand", "deg"], default="id")
    label.add_argument("--seed", type=int, default=0)
    label.add_argument("--labels-out", help="write 'v label' lines here")
    label.add_argument("--out", help="write the JSON report here")
    label.set_defaults(func=cmd_label)

    exact = sub.add_parser("exact", help="exact minimum span by branch and bound")
    exact.add_argument("--graph", required=True)
    exact.add_argument("--s", default="P1")
    exact.add_argument("--budget", type=int, default=DEFAULT_NODE_BUDGET)
    exact.add_argument(
        "--threads", type=int, default=1, help="reserved; results never depend on it"
    )
    exact.add_argument("--out", help="write the JSON result here")
    exact.set_defaults(func=cmd_exact)

    ver = sub.add_parser("verify", help="run a verification sweep")
    ver.add_argument(
        "suite", choices=["torus", "plane", "triple", "identities", "symmetry"]
    )
    ver.add_argument("--k-min", type=int, default=4)
    ver.add_argument("--k-max", type=int, default=10)
    ver.add_argument("--q", help="comma list of plane orders")
    ver.add_argument("--n", type=int, default=8, help="max vertex count per instance")
    ver.add_argument("--count", type=int, default=200, help="number of instances")
    ver.add_argument("--seed", type=int, default=1)
    ver.add_argument("--budget", type=int, default=DEFAULT_NODE_BUDGET)
    ver.add_argument("--threads", type=int, default=1, help="reserved; results never depend on it")
    ver.add_argument("--out", help="write the JSON report here")
    ver.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except GraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
