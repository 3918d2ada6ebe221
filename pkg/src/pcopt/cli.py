"""Batch command-line front end.

Exit codes: 0 success (or feasible / properly connected), 1 infeasible,
not properly connected, or a table mismatch, 2 parse error, 3 budget
exceeded, 4 precondition violation or inapplicable construction.

Graph inputs are file paths (edge-list or graph6, sniffed), ``-`` for
stdin, or inline generator specs like ``cycle:8`` and
``complete_bipartite:4,5`` (seeded kinds read ``--seed``). Reports are
line-delimited JSON by default; tables default to CSV.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .coloring import is_properly_connected
from .construct import bounds, construct_certificate
from .errors import (
    BudgetError,
    NotApplicableError,
    ParseError,
    PreconditionError,
)
from .families import GENERATOR_KINDS, generate
from .formats import (
    certificate_to_dict,
    parse_coloring,
    parse_graph_auto,
    write_edge_list,
    write_graph6,
)
from .graphs import Graph
from .search import SearchBudget, feasible, pc_opt_exact, pc_opt_prime_exact
from .sweeps import SWEEPS, run_sweep
from .tables import value_table, render_csv, render_text

CONSTRUCT_CLASSES = (
    "auto",
    "tree",
    "complete-bipartite",
    "alpha2",
    "good-edge",
    "bipartite-spanning",
)


def _read_text(source: str) -> str:
    if source == "-":
        return sys.stdin.read()
    return Path(source).read_text()


def _parse_spec_params(raw: str) -> list[float]:
    out: list[float] = []
    for chunk in raw.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        try:
            out.append(int(chunk))
        except ValueError:
            try:
                out.append(float(chunk))
            except ValueError as exc:
                raise ParseError(f"bad generator parameter {chunk!r}") from exc
    return out


def load_graph(source: str, seed: int | None = None) -> Graph:
    """File path, '-', or 'kind:p1,p2,...' generator spec."""
    if ":" in source:
        kind = source.split(":", 1)[0]
        if kind in GENERATOR_KINDS:
            return generate(kind, _parse_spec_params(source.split(":", 1)[1]), seed)
    try:
        text = _read_text(source)
    except OSError as exc:
        raise ParseError(f"cannot read {source!r}: {exc}") from exc
    return parse_graph_auto(text)


def _emit(payload: dict, fmt: str) -> None:
    if fmt == "text":
        for key in sorted(payload):
            print(f"{key}: {payload[key]}")
    else:
        print(json.dumps(payload, sort_keys=True))


def _budget_from_args(args: argparse.Namespace) -> SearchBudget:
    return SearchBudget(
        max_total_cost=args.budget,
        max_candidates=args.max_candidates,
        time_limit=args.time_limit,
    )


def cmd_check(args: argparse.Namespace) -> int:
    g = load_graph(args.graph, args.seed)
    coloring = parse_coloring(_read_text(args.coloring), g)
    report = is_properly_connected(
        g, coloring, collect_witness_paths=args.witness_paths
    )
    payload = {
        "properly_connected": report.properly_connected,
        "violating_pair": list(report.violating_pair)
        if report.violating_pair
        else None,
        "checked_pairs": report.checked_pairs,
    }
    if args.witness_paths and report.witness_paths is not None:
        payload["witness_paths"] = {
            f"{u},{v}": list(path)
            for (u, v), path in sorted(report.witness_paths.items())
        }
    _emit(payload, args.format)
    return 0 if report.properly_connected else 1


def cmd_exact(args: argparse.Namespace) -> int:
    g = load_graph(args.graph, args.seed)
    solver = pc_opt_prime_exact if args.prime else pc_opt_exact
    cert = solver(g, _budget_from_args(args))
    _emit(certificate_to_dict(g, cert), args.format)
    return 0


def cmd_construct(args: argparse.Namespace) -> int:
    g = load_graph(args.graph, args.seed)
    cert = construct_certificate(
        g, cls=args.cls, prime=args.prime, budget=_budget_from_args(args)
    )
    _emit(certificate_to_dict(g, cert), args.format)
    return 0


def cmd_feasible(args: argparse.Namespace) -> int:
    g = load_graph(args.graph, args.seed)
    semantics = "at_most" if args.at_most else "exact"
    witness = feasible(g, args.p, args.q, semantics)
    if witness is None:
        _emit({"feasible": False, "p": args.p, "q": args.q}, args.format)
        return 1
    payload = {
        "feasible": True,
        "p": witness.p,
        "q": witness.q,
        "assignments": [[u, v, c] for (u, v), c in witness.assignments],
    }
    _emit(payload, args.format)
    return 0


def cmd_bounds(args: argparse.Namespace) -> int:
    g = load_graph(args.graph, args.seed)
    result = bounds(g, tree_budget=args.tree_budget)
    _emit(
        {
            "lower": result.lower,
            "upper": result.upper,
            "exhaustive": result.exhaustive,
            "complete": result.complete,
        },
        args.format,
    )
    return 0


def cmd_tables(args: argparse.Namespace) -> int:
    rows = value_table()
    render = render_text if args.format == "text" else render_csv
    sys.stdout.write(render(rows))
    bad = [r for r in rows if not r.match]
    for r in bad:
        print(
            f"mismatch: {r.family} {r.params} expected {r.expected} "
            f"constructed {r.constructed} exact {r.exact}",
            file=sys.stderr,
        )
    return 1 if bad else 0


def cmd_gen(args: argparse.Namespace) -> int:
    g = load_graph(args.spec, args.seed)
    text = write_graph6(g) + "\n" if args.format == "graph6" else write_edge_list(g)
    if args.output == "-":
        sys.stdout.write(text)
    else:
        Path(args.output).write_text(text)
    return 0


def cmd_verify_sweep(args: argparse.Namespace) -> int:
    if args.list or args.name is None:
        for name in sorted(SWEEPS):
            print(name)
        return 0
    if args.name not in SWEEPS:
        raise ParseError(
            f"unknown sweep {args.name!r}; --list shows the registry"
        )
    result = run_sweep(args.name, seed=args.seed or 0)
    payload = {
        "sweep": result.name,
        "checked": result.checked,
        "failures": len(result.failures),
        "failure_examples": result.failures[:5],
    }
    _emit(payload, args.format)
    return 0 if result.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pcopt",
        description="Optimal recoloring for proper connectivity: exact "
        "search, constructive certificates, and cross-validation sweeps.",
    )
    parser.add_argument(
        "--jobs",
        type=int,
        default=1,
        metavar="K",
        help="cap on engine worker count (current engines are sequential)",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def common(p: argparse.ArgumentParser, fmt: tuple[str, ...] = ("json", "text")):
        p.add_argument("--seed", type=int, default=None)
        p.add_argument("--format", choices=fmt, default=fmt[0])

    def budget_opts(p: argparse.ArgumentParser) -> None:
        p.add_argument("--budget", type=int, default=None, metavar="T",
                       help="cap on the search total (default 2n)")
        p.add_argument("--max-candidates", type=int, default=None)
        p.add_argument("--time-limit", type=float, default=None)

    p = sub.add_parser("check", help="properly-connected report for a coloring")
    p.add_argument("graph")
    p.add_argument("--coloring", required=True)
    p.add_argument("--witness-paths", action="store_true")
    common(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("exact", help="exact optimal value with witness")
    p.add_argument("graph")
    p.add_argument("--prime", action="store_true",
                   help="minimize recolored edges alone")
    budget_opts(p)
    common(p)
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("construct", help="theorem-backed certificate")
    p.add_argument("graph")
    p.add_argument("--class", dest="cls", choices=CONSTRUCT_CLASSES,
                   default="auto")
    p.add_argument("--prime", action="store_true")
    budget_opts(p)
    common(p)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("feasible", help="witness for a (p, q) budget")
    p.add_argument("graph")
    p.add_argument("-p", type=int, required=True)
    p.add_argument("-q", type=int, required=True)
    p.add_argument("--at-most", action="store_true")
    common(p)
    p.set_defaults(func=cmd_feasible)

    p = sub.add_parser("bounds", help="diameter / spanning-tree sandwich")
    p.add_argument("graph")
    p.add_argument("--tree-budget", type=int, default=100_000)
    common(p)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("tables", help="small-graph value table")
    p.add_argument("--format", choices=("csv", "text"), default="csv")
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("gen", help="write a generated family graph")
    p.add_argument("spec", help="generator spec, e.g. cycle:8")
    p.add_argument("-o", "--output", default="-")
    p.add_argument("--format", choices=("edges", "graph6"), default="edges")
    p.add_argument("--seed", type=int, default=None)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify-sweep", help="run a named invariant suite")
    p.add_argument("name", nargs="?")
    p.add_argument("--list", action="store_true")
    common(p)
    p.set_defaults(func=cmd_verify_sweep)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.jobs < 1:
        print("error: --jobs must be at least 1", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BudgetError as exc:
        extra = ""
        if exc.best_upper_bound is not None:
            extra = f" (best known upper bound: {exc.best_upper_bound})"
        print(f"budget exceeded: {exc}{extra}", file=sys.stderr)
        return 3
    except (PreconditionError, NotApplicableError) as exc:
        print(f"not applicable: {exc}", file=sys.stderr)
        return 4
    # InternalConsistencyError deliberately propagates: it signals a bug.


def main_entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    main_entry()
