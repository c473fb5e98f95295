"""Command-line interface.

Four subcommands: ``run`` executes a single algorithm on one function,
``suite`` runs the full benchmark grid, ``list`` shows the registered
names, and ``stats`` compares two result columns with the rank-sum
test. ``suite`` output location resolves flag over the
``GOATBENCH_OUTPUT`` environment variable over the config file.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys

from . import benchmarks
from ._version import __version__
from .harness import load_config, run_suite, write_outputs
from .registry import available as available_algorithms
from .registry import make_optimizer

OUTPUT_ENV_VAR = "GOATBENCH_OUTPUT"


def _parse_param(text: str):
    """Parse one ``key=value`` override; values read as JSON when possible."""
    key, sep, raw = text.partition("=")
    if not sep or not key:
        raise argparse.ArgumentTypeError(
            f"expected key=value, got {text!r}"
        )
    try:
        value = json.loads(raw)
    except json.JSONDecodeError:
        value = raw
    return key, value


def _parse_names(text: str) -> list[str]:
    names = [part.strip() for part in text.split(",") if part.strip()]
    if not names:
        raise argparse.ArgumentTypeError(f"expected a comma-separated list, got {text!r}")
    return names


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="goatbench",
        description="Benchmark harness for goat-herd optimization and reference metaheuristics.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="run one algorithm on one benchmark function")
    run.add_argument("--algorithm", required=True, help="algorithm identifier (see: list)")
    run.add_argument("--function", required=True, help="benchmark function name (see: list)")
    run.add_argument("--dim", type=int, default=30, help="problem dimension")
    run.add_argument("--iters", type=int, default=500, help="iteration cap")
    run.add_argument("--pop", type=int, default=30, help="population size")
    run.add_argument("--seed", type=int, default=0, help="run seed")
    run.add_argument(
        "--param",
        action="append",
        default=[],
        type=_parse_param,
        metavar="KEY=VALUE",
        help="extra algorithm parameter, repeatable",
    )
    run.add_argument("--output", help="write the best-so-far trace to this CSV file")

    suite = sub.add_parser("suite", help="run the full benchmark grid and export tables")
    suite.add_argument("--config", help="JSON config file (or a previous run_meta.json)")
    suite.add_argument("--functions", type=_parse_names, help="comma-separated function names")
    suite.add_argument("--algorithms", type=_parse_names, help="comma-separated algorithm ids")
    suite.add_argument(
        "--all-functions",
        action="store_true",
        help="use every registered benchmark function",
    )
    suite.add_argument("--dim", type=int, help="problem dimension")
    suite.add_argument("--runs", type=int, help="repetitions per cell")
    suite.add_argument("--base-seed", type=int, help="seed of run 0; run r uses base+r")
    suite.add_argument("--pop", type=int, help="population size for every algorithm")
    suite.add_argument("--iters", type=int, help="iteration cap for every algorithm")
    suite.add_argument("--jobs", type=int, default=1, help="parallel processes (-1 = all cores)")
    suite.add_argument("--output-dir", help=f"output directory (or ${OUTPUT_ENV_VAR})")

    lister = sub.add_parser("list", help="list registered algorithms and functions")

    stats = sub.add_parser("stats", help="rank-sum test between two CSV result columns")
    stats.add_argument("csv_a", help="first CSV file")
    stats.add_argument("csv_b", help="second CSV file")
    stats.add_argument(
        "--column",
        default="best_fitness",
        help="numeric column to compare (default: best_fitness)",
    )
    return parser


def _read_column(path: str, column: str) -> list[float]:
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames is None or column not in reader.fieldnames:
            raise ValueError(f"{path} has no column {column!r}")
        values = []
        for line, row in enumerate(reader, start=2):
            raw = row[column]
            try:
                values.append(float(raw))
            except ValueError:
                raise ValueError(
                    f"{path} line {line}: column {column!r} value {raw!r} is not numeric"
                ) from None
    if not values:
        raise ValueError(f"{path} has no data rows")
    return values


def _cmd_run(args) -> int:
    bench = benchmarks.lookup(args.function)
    params = {"n": args.pop, "t_max": args.iters}
    params.update(dict(args.param))
    optimizer = make_optimizer(args.algorithm, **params)
    result = optimizer.optimize(bench.objective, bench.space(args.dim), args.seed)
    print(
        f"algorithm={args.algorithm} function={args.function} "
        f"dim={args.dim} seed={args.seed}"
    )
    print(f"best_fitness={result.best.fitness:.17g}")
    print(f"termination={result.termination} evaluations={result.evaluations}")
    if args.output:
        with open(args.output, "w", newline="", encoding="utf-8") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(["iteration", "best_so_far"])
            for iteration, value in enumerate(result.trace):
                writer.writerow([iteration, format(float(value), ".17g")])
        print(f"trace written to {args.output}")
    return 0


def _cmd_suite(args) -> int:
    if args.all_functions and args.functions:
        raise ValueError("--all-functions conflicts with --functions")
    functions = list(benchmarks.available()) if args.all_functions else args.functions
    output_dir = args.output_dir
    if output_dir is None:
        output_dir = os.environ.get(OUTPUT_ENV_VAR) or None
    cfg = load_config(
        args.config,
        functions=functions,
        algorithms=args.algorithms,
        dim=args.dim,
        runs=args.runs,
        base_seed=args.base_seed,
        pop=args.pop,
        iters=args.iters,
        output_dir=output_dir,
    )
    result = run_suite(cfg, jobs=args.jobs)
    paths = write_outputs(result)
    ok = sum(1 for cell in result.cells if cell["ok"])
    print(f"completed {ok}/{len(result.cells)} cells")
    for name in ("summary", "wilcoxon", "convergence", "run_meta"):
        print(f"wrote {paths[name]}")
    return 0 if ok == len(result.cells) else 1


def _cmd_list(args) -> int:
    print("algorithms: " + ", ".join(available_algorithms()))
    print("functions: " + ", ".join(benchmarks.available()))
    return 0


def _cmd_stats(args) -> int:
    a = _read_column(args.csv_a, args.column)
    b = _read_column(args.csv_b, args.column)
    from .stats import rank_sum_test

    r = rank_sum_test(a, b)
    print(f"n_a={r.n1} n_b={r.n2} method={r.method}")
    print(f"statistic={r.statistic:.17g}")
    print(f"p_value={r.p_value:.17g}")
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "run": _cmd_run,
        "suite": _cmd_suite,
        "list": _cmd_list,
        "stats": _cmd_stats,
    }
    try:
        return handlers[args.command](args)
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def console_entry() -> None:
    sys.exit(main())
