"""Command-line driver for the symmetry-breaking pipeline.

Subcommands: ``graph`` (colored-graph dump), ``syms`` (generator listing),
``sbp`` (write the SBP-augmented instance), ``solve`` (branch and bound or
the exhaustive oracle), ``gen`` (instance generators) and ``bench``
(original-vs-SBP comparison table, CSV and figures).

Exit codes: 0 success, 1 usage error, 2 parse/IO error, 3 budget exhausted.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from .automorphism import detect_symmetries, group_order
from .bench import format_table, run_bench, write_csv
from .formula import DimacsParseError, Formula, parse_dimacs, serialize
from .graph import EncodeMode, encode, format_graph_dump
from .instances import hole, random_formula
from .sbp import generate_sbps
from .solver import Status, brute_force, solve_bnb

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_BUDGET = 3

TIMEOUT_ENV = "MAXSYMBREAK_TIMEOUT"
DEFAULT_TIMEOUT = 1000.0


class _Parser(argparse.ArgumentParser):
    """argparse defaults to exit code 2 on usage errors; remap to 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _default_timeout() -> float:
    raw = os.environ.get(TIMEOUT_ENV)
    if raw is None:
        return DEFAULT_TIMEOUT
    try:
        return float(raw)
    except ValueError:
        return DEFAULT_TIMEOUT


def _read_formula(path: str) -> Formula:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_dimacs(fh.read())


def _mode(args) -> EncodeMode:
    return EncodeMode.EDGE_OPTIMIZED if args.mode == "edge" else EncodeMode.CLAUSE_VERTEX


def _generators(formula: Formula, args):
    generators = detect_symmetries(formula, _mode(args)).generators
    if args.max_generators is not None:
        generators = generators[: args.max_generators]
    return generators


def cmd_graph(args) -> int:
    formula = _read_formula(args.input)
    dump = format_graph_dump(encode(formula, _mode(args)))
    if args.output:
        Path(args.output).write_text(dump, encoding="utf-8")
    else:
        sys.stdout.write(dump)
    return EXIT_OK


def cmd_syms(args) -> int:
    formula = _read_formula(args.input)
    generators = _generators(formula, args)
    if not generators:
        print("c no nontrivial symmetries")
    for p in generators:
        print(p)
    if args.order:
        order = group_order(generators, formula.num_vars, args.order_limit)
        if order is None:
            print(f"c group order: > {args.order_limit}")
        else:
            print(f"c group order: {order}")
    return EXIT_OK


def cmd_sbp(args) -> int:
    formula = _read_formula(args.input)
    generators = _generators(formula, args)
    augmented, info = generate_sbps(formula, generators)
    comment = (
        f"sbp: generators={len(generators)} clauses={info.num_clauses} auxvars={info.aux_vars}"
    )
    Path(args.output).write_text(serialize(augmented, comments=[comment]), encoding="utf-8")
    print(f"#ClsSbp: {info.num_clauses}")
    return EXIT_OK


def cmd_solve(args) -> int:
    formula = _read_formula(args.input)
    report_vars = formula.num_vars
    if args.sbp:
        generators = _generators(formula, args)
        augmented, info = generate_sbps(formula, generators)
        print(
            f"c sbp: generators={len(generators)} clauses={info.num_clauses} "
            f"auxvars={info.aux_vars}"
        )
        formula = augmented

    if args.brute:
        result = brute_force(formula, cap=args.brute_cap)
    else:
        result = solve_bnb(formula, node_limit=args.nodes, time_limit=args.timeout)

    for cost in result.incumbents:
        print(f"o {cost}")
    if result.status is Status.OPTIMUM:
        print("s OPTIMUM FOUND")
    elif result.status is Status.HARD_UNSAT:
        print("s UNSATISFIABLE")
    else:
        print("s UNKNOWN")
    if result.witness is not None:
        lits = [v if result.witness[v] else -v for v in range(1, report_vars + 1)]
        print("v " + " ".join(str(l) for l in lits))
    print(f"c nodes={result.nodes} time={result.elapsed:.3f}")
    return EXIT_BUDGET if result.status is Status.UNKNOWN else EXIT_OK


def cmd_gen(args) -> int:
    if args.family == "hole":
        formula = hole(args.n)
    else:
        formula = random_formula(
            num_vars=args.vars,
            num_clauses=args.clauses,
            max_weight=args.max_weight,
            hard_fraction=args.hard_fraction,
            seed=args.seed,
        )
    text = serialize(formula)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_bench(args) -> int:
    records = run_bench(
        args.instances,
        time_limit=args.timeout,
        max_generators=args.max_generators,
        jobs=args.jobs,
    )
    sys.stdout.write(format_table(records))
    if args.csv:
        write_csv(records, args.csv)
    plot_path = args.plot
    if plot_path is None and args.csv and not args.no_plot:
        plot_path = str(Path(args.csv).with_suffix(".png"))
    if plot_path and records:
        from .plotting import plot_bench

        plot_bench(records, plot_path)
        print(f"c figure written to {plot_path}")
    return EXIT_OK


def _add_mode(parser) -> None:
    parser.add_argument(
        "--mode",
        choices=["clause", "edge"],
        default="clause",
        help="graph encoding: clause vertices (default) or edge-optimized (plain MaxSAT only)",
    )


def _add_max_generators(parser) -> None:
    parser.add_argument(
        "--max-generators",
        type=int,
        default=None,
        metavar="N",
        help="break only the first N generators",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="maxsymbreak", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("graph", help="dump the colored graph encoding")
    p.add_argument("input")
    p.add_argument("-o", "--output", default=None)
    _add_mode(p)
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("syms", help="list symmetry generators in cycle notation")
    p.add_argument("input")
    _add_mode(p)
    _add_max_generators(p)
    p.add_argument("--order", action="store_true", help="also report the group order")
    p.add_argument("--order-limit", type=int, default=1_000_000)
    p.set_defaults(func=cmd_syms)

    p = sub.add_parser("sbp", help="write the SBP-augmented WCNF instance")
    p.add_argument("input")
    p.add_argument("output")
    _add_mode(p)
    _add_max_generators(p)
    p.set_defaults(func=cmd_sbp)

    p = sub.add_parser("solve", help="solve an instance")
    p.add_argument("input")
    p.add_argument("--sbp", action="store_true", help="add symmetry-breaking predicates first")
    p.add_argument("--brute", action="store_true", help="use the exhaustive oracle")
    p.add_argument("--brute-cap", type=int, default=26)
    p.add_argument("--timeout", type=float, default=_default_timeout(), metavar="SECONDS")
    p.add_argument("--nodes", type=int, default=None, help="decision-node limit")
    _add_mode(p)
    _add_max_generators(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("gen", help="generate an instance")
    gen_sub = p.add_subparsers(dest="family", required=True)
    ph = gen_sub.add_parser("hole", help="pigeon-hole PHP(n+1, n) as plain MaxSAT")
    ph.add_argument("n", type=int)
    ph.add_argument("-o", "--output", default=None)
    rd = gen_sub.add_parser("rand", help="seeded random weighted formula")
    rd.add_argument("--vars", type=int, required=True)
    rd.add_argument("--clauses", type=int, required=True)
    rd.add_argument("--max-weight", type=int, default=1)
    rd.add_argument("--hard-fraction", type=float, default=0.0)
    rd.add_argument("--seed", type=int, default=0)
    rd.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="compare solving with and without SBPs")
    p.add_argument("instances", nargs="*")
    p.add_argument("--timeout", type=float, default=_default_timeout(), metavar="SECONDS")
    p.add_argument("--csv", default=None, help="write the table as CSV")
    p.add_argument("--plot", default=None, help="write a comparison figure")
    p.add_argument("--no-plot", action="store_true", help="skip the figure next to the CSV")
    p.add_argument("--jobs", type=int, default=1)
    _add_max_generators(p)
    p.set_defaults(func=cmd_bench)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except DimacsParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
