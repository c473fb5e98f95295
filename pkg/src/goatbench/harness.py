"""Experiment harness: run an algorithms-by-functions grid, export tables.

A suite crosses benchmark functions with algorithms and repeats each
cell over a shared seed series (run ``r`` uses ``base_seed + r``
everywhere, so runs are paired across cells). Outputs land in four
files: per-cell statistics (``summary.csv``), pairwise rank-sum tests
against the reference algorithm (``wilcoxon.csv``), per-run best-so-far
curves (``convergence.csv``), and a reproducibility record
(``run_meta.json``) whose ``config`` block can be fed back in as a
config file. Identical configs produce byte-identical outputs at any
parallelism.
"""

from __future__ import annotations

import csv
import json
import sys
from dataclasses import asdict, dataclass, field
from pathlib import Path

from joblib import Parallel, delayed

from . import benchmarks
from ._version import __version__
from .registry import available as available_algorithms
from .registry import make_optimizer
from .stats import rank_sum_test, summarize

DEFAULT_FUNCTIONS = ("sphere", "rastrigin", "ackley")
DEFAULT_ALGORITHMS = ("goa", "pso", "gwo", "ga", "woa", "abc")

CONFIG_KEYS = (
    "functions",
    "algorithms",
    "dim",
    "runs",
    "base_seed",
    "pop",
    "iters",
    "overrides",
    "output_dir",
)


@dataclass
class SuiteConfig:
    """Fully resolved description of one benchmark suite."""

    functions: tuple = DEFAULT_FUNCTIONS
    algorithms: tuple = DEFAULT_ALGORITHMS
    dim: int = 30
    runs: int = 30
    base_seed: int = 42
    pop: int = 30
    iters: int = 500
    overrides: dict = field(default_factory=dict)
    output_dir: str = "results"

    def algorithm_params(self, algorithm: str) -> dict:
        """Constructor parameters for one algorithm, overrides applied."""
        params = {"n": self.pop, "t_max": self.iters}
        params.update(self.overrides.get(algorithm, {}))
        return params

    def as_dict(self) -> dict:
        """JSON-ready form, minus the output directory.

        The directory changes where files land but not what was
        computed, so leaving it out keeps the reproducibility record
        byte-identical across re-runs into different locations.
        """
        out = asdict(self)
        out["functions"] = list(self.functions)
        out["algorithms"] = list(self.algorithms)
        del out["output_dir"]
        return out


@dataclass(frozen=True)
class SummaryRow:
    function: str
    algorithm: str
    best_fitness: float
    mean_fitness: float
    std_dev: float


@dataclass(frozen=True)
class ComparisonRow:
    function: str
    algorithm_a: str
    algorithm_b: str
    statistic: float
    p_value: float
    method: str


@dataclass
class SuiteResult:
    """Everything a finished suite produced, before any file is written."""

    config: SuiteConfig
    summaries: list
    comparisons: list
    cells: list
    reference: str


def _check_int(name, value, minimum):
    if not isinstance(value, int) or isinstance(value, bool) or value < minimum:
        raise ValueError(f"{name} must be an integer >= {minimum}, got {value!r}")


def validate_config(cfg: SuiteConfig) -> None:
    """Reject bad names, duplicate rows, and out-of-range sizes early."""
    if not cfg.functions:
        raise ValueError("suite needs at least one function")
    if not cfg.algorithms:
        raise ValueError("suite needs at least one algorithm")
    if len(set(cfg.functions)) != len(cfg.functions):
        raise ValueError(f"duplicate function names: {list(cfg.functions)}")
    if len(set(cfg.algorithms)) != len(cfg.algorithms):
        raise ValueError(f"duplicate algorithm names: {list(cfg.algorithms)}")
    _check_int("dim", cfg.dim, 1)
    _check_int("runs", cfg.runs, 1)
    _check_int("pop", cfg.pop, 1)
    _check_int("iters", cfg.iters, 0)
    _check_int("base_seed", cfg.base_seed, 0)
    if cfg.base_seed + cfg.runs - 1 >= 2**64:
        raise ValueError("base_seed + runs exceeds the 64-bit seed range")
    for name in cfg.functions:
        bench = benchmarks.lookup(name)
        if cfg.dim < bench.objective.min_dim:
            raise ValueError(
                f"function '{name}' requires dim >= {bench.objective.min_dim}, "
                f"suite has dim={cfg.dim}"
            )
    known = available_algorithms()
    for name in cfg.algorithms:
        if name not in known:
            raise ValueError(
                f"unknown algorithm {name!r}; choose from {', '.join(known)}"
            )
    if not isinstance(cfg.overrides, dict):
        raise ValueError(f"overrides must be a mapping, got {type(cfg.overrides).__name__}")
    for algorithm, params in cfg.overrides.items():
        if algorithm not in known:
            raise ValueError(
                f"overrides target unknown algorithm {algorithm!r}; "
                f"choose from {', '.join(known)}"
            )
        if not isinstance(params, dict):
            raise ValueError(f"overrides[{algorithm!r}] must be a mapping")
        # Unknown parameter names fail here; bad values fail per cell.
        make_optimizer(algorithm, **params)
    if not isinstance(cfg.output_dir, str) or not cfg.output_dir:
        raise ValueError("output_dir must be a non-empty string")


def load_config(path=None, **flags) -> SuiteConfig:
    """Layer a suite config: defaults, then a JSON file, then flags.

    ``path`` may be a plain config file or a ``run_meta.json`` from an
    earlier suite (its ``config`` block is used). Flags equal to None
    mean "not set". Unknown keys in either layer are rejected.
    """
    merged = {
        "functions": list(DEFAULT_FUNCTIONS),
        "algorithms": list(DEFAULT_ALGORITHMS),
        "dim": 30,
        "runs": 30,
        "base_seed": 42,
        "pop": 30,
        "iters": 500,
        "overrides": {},
        "output_dir": "results",
    }
    if path is not None:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
        if not isinstance(data, dict):
            raise ValueError(f"config file {path} must hold a JSON object")
        if isinstance(data.get("config"), dict):
            data = data["config"]
        unknown = sorted(set(data) - set(CONFIG_KEYS))
        if unknown:
            raise ValueError(
                f"unknown config keys {unknown}; valid keys: {', '.join(CONFIG_KEYS)}"
            )
        merged.update(data)
    unknown = sorted(set(flags) - set(CONFIG_KEYS))
    if unknown:
        raise ValueError(
            f"unknown config keys {unknown}; valid keys: {', '.join(CONFIG_KEYS)}"
        )
    merged.update({k: v for k, v in flags.items() if v is not None})
    cfg = SuiteConfig(
        functions=tuple(merged["functions"]),
        algorithms=tuple(merged["algorithms"]),
        dim=merged["dim"],
        runs=merged["runs"],
        base_seed=merged["base_seed"],
        pop=merged["pop"],
        iters=merged["iters"],
        overrides=merged["overrides"],
        output_dir=merged["output_dir"],
    )
    validate_config(cfg)
    return cfg


def _run_cell(function_name, algorithm_id, params, dim, run_index, seed):
    """One (function, algorithm, run) cell; never raises."""
    base = {
        "function": function_name,
        "algorithm": algorithm_id,
        "run": run_index,
        "seed": seed,
    }
    try:
        bench = benchmarks.lookup(function_name)
        optimizer = make_optimizer(algorithm_id, **params)
        result = optimizer.optimize(bench.objective, bench.space(dim), seed)
        return {
            **base,
            "ok": True,
            "best_fitness": float(result.best.fitness),
            "evaluations": int(result.evaluations),
            "termination": result.termination,
            "trace": [float(v) for v in result.trace],
        }
    except Exception as exc:  # contained: one bad cell must not sink the suite
        return {**base, "ok": False, "error": f"{type(exc).__name__}: {exc}"}


def reference_algorithm(algorithms) -> str:
    """The column every other algorithm is tested against."""
    return "goa" if "goa" in algorithms else algorithms[0]


def run_suite(cfg: SuiteConfig, jobs: int = 1) -> SuiteResult:
    """Run every cell of the suite and aggregate statistics.

    ``jobs`` only sets the process count; results are identical at any
    parallelism because each cell owns a seed derived from its run index
    alone. Failed cells are reported on stderr and skipped downstream.
    """
    validate_config(cfg)
    if not isinstance(jobs, int) or isinstance(jobs, bool) or jobs == 0:
        raise ValueError(f"jobs must be a nonzero integer, got {jobs!r}")
    tasks = [
        (fn, algo, cfg.algorithm_params(algo), cfg.dim, r, cfg.base_seed + r)
        for fn in cfg.functions
        for algo in cfg.algorithms
        for r in range(cfg.runs)
    ]
    if jobs == 1:
        cells = [_run_cell(*task) for task in tasks]
    else:
        cells = Parallel(n_jobs=jobs)(delayed(_run_cell)(*task) for task in tasks)
    for cell in cells:
        if not cell["ok"]:
            print(
                f"warning: cell function={cell['function']} "
                f"algorithm={cell['algorithm']} run={cell['run']} failed: "
                f"{cell['error']}",
                file=sys.stderr,
            )

    finals = {}
    for cell in cells:
        if cell["ok"]:
            finals.setdefault((cell["function"], cell["algorithm"]), []).append(
                cell["best_fitness"]
            )

    summaries = []
    for fn in cfg.functions:
        for algo in cfg.algorithms:
            values = finals.get((fn, algo))
            if not values:
                continue
            s = summarize(values)
            summaries.append(SummaryRow(fn, algo, s.best, s.mean, s.std))

    reference = reference_algorithm(cfg.algorithms)
    comparisons = []
    for fn in cfg.functions:
        ref_values = finals.get((fn, reference))
        if not ref_values:
            continue
        for algo in cfg.algorithms:
            if algo == reference:
                continue
            other = finals.get((fn, algo))
            if not other:
                continue
            r = rank_sum_test(ref_values, other)
            comparisons.append(
                ComparisonRow(fn, reference, algo, r.statistic, r.p_value, r.method)
            )

    return SuiteResult(
        config=cfg,
        summaries=summaries,
        comparisons=comparisons,
        cells=cells,
        reference=reference,
    )


def _fmt(value: float) -> str:
    return format(float(value), ".17g")


def write_outputs(result: SuiteResult, output_dir=None) -> dict:
    """Write the four suite files; returns {name: path} for each.

    Uses fixed float formatting, explicit newlines, and sorted JSON keys
    so equal results serialize byte-identically.
    """
    out = Path(output_dir if output_dir is not None else result.config.output_dir)
    out.mkdir(parents=True, exist_ok=True)
    paths = {}

    path = out / "summary.csv"
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["function", "algorithm", "best_fitness", "mean_fitness", "std_dev"])
        for row in result.summaries:
            writer.writerow(
                [row.function, row.algorithm, _fmt(row.best_fitness),
                 _fmt(row.mean_fitness), _fmt(row.std_dev)]
            )
    paths["summary"] = path

    path = out / "wilcoxon.csv"
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(
            ["function", "algorithm_a", "algorithm_b", "statistic", "p_value", "method"]
        )
        for row in result.comparisons:
            writer.writerow(
                [row.function, row.algorithm_a, row.algorithm_b,
                 _fmt(row.statistic), _fmt(row.p_value), row.method]
            )
    paths["wilcoxon"] = path

    path = out / "convergence.csv"
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["function", "algorithm", "run", "iteration", "best_so_far"])
        for cell in result.cells:
            if not cell["ok"]:
                continue
            for iteration, value in enumerate(cell["trace"]):
                writer.writerow(
                    [cell["function"], cell["algorithm"], cell["run"],
                     iteration, _fmt(value)]
                )
    paths["convergence"] = path

    path = out / "run_meta.json"
    meta_cells = []
    for cell in result.cells:
        entry = {k: cell[k] for k in ("function", "algorithm", "run", "seed", "ok")}
        if cell["ok"]:
            entry["best_fitness"] = cell["best_fitness"]
            entry["evaluations"] = cell["evaluations"]
            entry["termination"] = cell["termination"]
        else:
            entry["error"] = cell["error"]
        meta_cells.append(entry)
    meta = {
        "version": __version__,
        "config": result.config.as_dict(),
        "reference_algorithm": result.reference,
        "cells": meta_cells,
    }
    with open(path, "w", newline="", encoding="utf-8") as fh:
        json.dump(meta, fh, indent=2, sort_keys=True)
        fh.write("\n")
    paths["run_meta"] = path

    return paths
