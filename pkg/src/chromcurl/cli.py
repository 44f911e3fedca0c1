"""Command-line entry point.

Exit codes: 0 success, 1 input/operational error, 2 engine/oracle
disagreement, 64 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import __version__
from .chroma import chi_minus, chi_plus, chromatic_number
from .curling import curling_number
from .families import Family, FamilySpec, ParameterTooSmall, generate
from .formulas import claims_csv, claims_table
from .graph import Graph, GraphError, from_json
from .oracle import DEFAULT_BUDGET, BudgetExceeded, oracle_chromatic
from .randgraph import random_connected_graphs
from .verify import (default_range, has_engine_failure, render_csv, render_jsonl,
                     render_table, verify_sweep)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_MISMATCH = 2
EXIT_USAGE = 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":")) + "\n"


def _family_arg(text: str) -> Family:
    try:
        return Family.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _add_graph_source(p: argparse.ArgumentParser) -> None:
    p.add_argument("graph", nargs="?",
                   help="graph JSON file, or '-' for standard input")
    p.add_argument("--family", type=_family_arg, help="generate the input from a family")
    p.add_argument("--n", type=int, help="order parameter for --family")


def _load_graph(args) -> Graph:
    if (args.graph is None) == (args.family is None):
        raise UsageError("give exactly one input: a graph file, '-', or --family/--n")
    if args.family is not None:
        if args.n is None:
            raise UsageError("--family needs --n")
        return generate(FamilySpec(args.family, args.n))
    if args.n is not None:
        raise UsageError("--n only applies with --family")
    if args.graph == "-":
        text = sys.stdin.read()
    else:
        with open(args.graph, encoding="utf-8") as fh:
            text = fh.read()
    return from_json(text)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="chromcurl", description=(
        "Curling numbers, chi-minus colourings and chromatic curling numbers "
        "of graphs, with a brute-force cross-check of published closed forms."))
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("gen", help="emit a family graph")
    p.add_argument("family", type=_family_arg)
    p.add_argument("n", type=int)
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="fmt", action="store_const", const="json")
    fmt.add_argument("--dot", dest="fmt", action="store_const", const="dot")

    p = sub.add_parser("curl", help="curling and compound curling number")
    _add_graph_source(p)

    p = sub.add_parser("chi", help="chromatic number")
    _add_graph_source(p)

    p = sub.add_parser("chromcurl", help="chi-minus colouring and chromatic curling numbers")
    _add_graph_source(p)
    p.add_argument("--witness", action="store_true", help="include the witness colouring")
    p.add_argument("--plus", action="store_true", help="report the chi-plus relabelling")

    p = sub.add_parser("oracle", help="brute-force chi and lex-max class sizes")
    _add_graph_source(p)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)

    p = sub.add_parser("verify", help="compare published claims, engine and oracle")
    p.add_argument("--families", default=None,
                   help="comma-separated family names (default: all)")
    p.add_argument("--n-min", type=int)
    p.add_argument("--n-max", type=int)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                   help="largest vertex count the oracle is run on")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="fmt", action="store_const", const="json")
    fmt.add_argument("--csv", dest="fmt", action="store_const", const="csv")
    p.add_argument("--emit-claims", action="store_true",
                   help="print the claims table as CSV instead of verifying")

    p = sub.add_parser("crosscheck", help="engine vs oracle on seeded random connected graphs")
    p.add_argument("--count", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-n", type=int, default=9)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    return parser


def _families(text: str | None) -> list[Family]:
    if text is None:
        return list(Family)
    try:
        return [Family.parse(t) for t in text.split(",") if t.strip()]
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _cmd_gen(args, out) -> int:
    g = generate(FamilySpec(args.family, args.n))
    out.write((g.to_dot() if args.fmt == "dot" else g.to_json()) + "\n")
    return EXIT_OK


def _cmd_curl(args, out) -> int:
    r = curling_number(_load_graph(args))
    out.write(_dump({"cn": r.cn, "cnCompound": r.cn_compound,
                     "runs": [list(run) for run in r.runs.runs]}))
    return EXIT_OK


def _cmd_chi(args, out) -> int:
    out.write(_dump({"chi": chromatic_number(_load_graph(args))}))
    return EXIT_OK


def _cmd_chromcurl(args, out) -> int:
    r = chi_minus(_load_graph(args))
    if args.plus:
        r = chi_plus(r)
    out.write(_dump(r.as_dict(witness=args.witness)))
    return EXIT_OK


def _cmd_oracle(args, out) -> int:
    out.write(_dump(oracle_chromatic(_load_graph(args), args.budget).as_dict()))
    return EXIT_OK


def _cmd_verify(args, out) -> int:
    families = _families(args.families)
    if args.emit_claims:
        lo = 2 if args.n_min is None else args.n_min
        hi = 12 if args.n_max is None else args.n_max
        out.write(claims_csv(claims_table(families, lo, hi)))
        return EXIT_OK
    tasks = [(f, n) for f in families for n in default_range(f, args.n_min, args.n_max)]
    records = verify_sweep(tasks, args.budget, args.jobs)
    render = {"json": render_jsonl, "csv": render_csv}.get(args.fmt, render_table)
    out.write(render(records))
    return EXIT_MISMATCH if has_engine_failure(records) else EXIT_OK


def _cmd_crosscheck(args, out) -> int:
    bad = 0
    graphs = random_connected_graphs(args.count, args.seed, args.max_n)
    for i, g in enumerate(graphs):
        r = chi_minus(g)
        o = oracle_chromatic(g, args.budget)
        agree = (r.chi, r.theta) == (o.chi, o.lex_max_theta)
        bad += not agree
        if not agree:
            out.write(_dump({"index": i, "graph": json.loads(g.to_json()),
                             "engine": [r.chi, list(r.theta)],
                             "oracle": [o.chi, list(o.lex_max_theta)]}))
    out.write(f"crosscheck seed={args.seed} graphs={len(graphs)} mismatches={bad}\n")
    return EXIT_MISMATCH if bad else EXIT_OK


_COMMANDS = {
    "gen": _cmd_gen, "curl": _cmd_curl, "chi": _cmd_chi, "chromcurl": _cmd_chromcurl,
    "oracle": _cmd_oracle, "verify": _cmd_verify, "crosscheck": _cmd_crosscheck,
}


def run(argv: Sequence[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already printed the message
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return _COMMANDS[args.command](args, out)
    except UsageError as exc:
        print(f"chromcurl: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (OSError, GraphError, ParameterTooSmall, BudgetExceeded, ValueError) as exc:
        print(f"chromcurl: {exc}", file=sys.stderr)
        return EXIT_ERROR


def main() -> None:
    sys.exit(run())
