"""Suite harness: config layering, grid execution, and file outputs."""

import csv
import json
import math

import pytest

from goatbench.harness import (
    DEFAULT_ALGORITHMS,
    DEFAULT_FUNCTIONS,
    SuiteConfig,
    load_config,
    reference_algorithm,
    run_suite,
    validate_config,
    write_outputs,
)

SMALL = dict(
    functions=("sphere",),
    algorithms=("goa", "pso"),
    dim=3,
    runs=3,
    pop=6,
    iters=5,
    base_seed=10,
)


def write_json(path, payload):
    path.write_text(json.dumps(payload), encoding="utf-8")
    return path


def read_bytes(paths):
    return {name: path.read_bytes() for name, path in paths.items()}


class TestConfig:
    def test_defaults(self):
        cfg = SuiteConfig()
        assert cfg.functions == ("sphere", "rastrigin", "ackley")
        assert cfg.algorithms == ("goa", "pso", "gwo", "ga", "woa", "abc")
        assert cfg.dim == 30
        assert cfg.runs == 30
        assert cfg.base_seed == 42
        assert cfg.pop == 30
        assert cfg.iters == 500
        assert cfg.overrides == {}
        assert cfg.output_dir == "results"
        validate_config(cfg)

    def test_empty_file_gives_defaults(self, tmp_path):
        path = write_json(tmp_path / "cfg.json", {})
        assert load_config(path) == load_config()

    def test_file_values_applied(self, tmp_path):
        path = write_json(tmp_path / "cfg.json", {"dim": 5, "runs": 4})
        cfg = load_config(path)
        assert cfg.dim == 5
        assert cfg.runs == 4
        assert cfg.pop == 30  # untouched keys keep defaults

    def test_flags_beat_file(self, tmp_path):
        path = write_json(tmp_path / "cfg.json", {"dim": 5, "runs": 4})
        cfg = load_config(path, dim=7)
        assert cfg.dim == 7
        assert cfg.runs == 4

    def test_none_flags_mean_unset(self, tmp_path):
        path = write_json(tmp_path / "cfg.json", {"dim": 5})
        assert load_config(path, dim=None).dim == 5

    def test_misspelled_function(self, tmp_path):
        path = write_json(tmp_path / "cfg.json", {"functions": ["spehre"]})
        with pytest.raises(ValueError) as err:
            load_config(path)
        message = str(err.value)
        for name in ("sphere", "schwefel_2_22", "rosenbrock", "rastrigin",
                     "ackley", "griewank"):
            assert name in message

    def test_unknown_algorithm(self, tmp_path):
        path = write_json(tmp_path / "cfg.json", {"algorithms": ["goa", "cmaes"]})
        with pytest.raises(ValueError, match="unknown algorithm 'cmaes'"):
            load_config(path)

    def test_unknown_keys_rejected(self, tmp_path):
        path = write_json(tmp_path / "cfg.json", {"dims": 5})
        with pytest.raises(ValueError, match="unknown config keys"):
            load_config(path)
        with pytest.raises(ValueError, match="unknown config keys"):
            load_config(iterations=5)

    def test_duplicates_rejected(self):
        with pytest.raises(ValueError, match="duplicate function"):
            validate_config(SuiteConfig(functions=("sphere", "sphere")))
        with pytest.raises(ValueError, match="duplicate algorithm"):
            validate_config(SuiteConfig(algorithms=("goa", "goa")))

    def test_dimension_floor_per_function(self):
        cfg = SuiteConfig(functions=("rosenbrock",), dim=1)
        with pytest.raises(ValueError, match="requires dim >= 2"):
            validate_config(cfg)

    def test_size_bounds(self):
        for kwargs in [dict(dim=0), dict(runs=0), dict(pop=0), dict(iters=-1),
                       dict(base_seed=-1)]:
            with pytest.raises(ValueError):
                validate_config(SuiteConfig(**kwargs))

    def test_override_unknown_algorithm(self):
        cfg = SuiteConfig(overrides={"cmaes": {"n": 5}})
        with pytest.raises(ValueError, match="overrides target unknown"):
            validate_config(cfg)

    def test_override_unknown_parameter_fails_early(self):
        cfg = SuiteConfig(overrides={"goa": {"turbo": 2}})
        with pytest.raises(ValueError):
            validate_config(cfg)

    def test_override_bad_value_passes_config_check(self):
        # Values are validated per run, not at config time: the cell
        # fails and is contained instead of rejecting the whole file.
        validate_config(SuiteConfig(overrides={"goa": {"alpha": -1.0}}))

    def test_algorithm_params_layering(self):
        cfg = SuiteConfig(pop=20, iters=100, overrides={"goa": {"alpha": 0.1}})
        assert cfg.algorithm_params("goa") == {"n": 20, "t_max": 100, "alpha": 0.1}
        assert cfg.algorithm_params("pso") == {"n": 20, "t_max": 100}


class TestReferenceAlgorithm:
    def test_prefers_goa(self):
        assert reference_algorithm(("pso", "goa", "ga")) == "goa"

    def test_falls_back_to_first(self):
        assert reference_algorithm(("pso", "gwo")) == "pso"


class TestRunSuite:
    def test_grid_and_seed_pairing(self):
        cfg = SuiteConfig(**SMALL)
        result = run_suite(cfg)
        assert len(result.cells) == 1 * 2 * 3
        for cell in result.cells:
            assert cell["ok"]
            assert cell["seed"] == cfg.base_seed + cell["run"]
        assert result.reference == "goa"
        assert len(result.summaries) == 2
        assert len(result.comparisons) == 1

    def test_summary_rows(self):
        result = run_suite(SuiteConfig(**SMALL))
        for row in result.summaries:
            assert row.function == "sphere"
            assert row.best_fitness <= row.mean_fitness
            assert row.std_dev >= 0.0

    def test_single_run_has_zero_std(self):
        cfg = SuiteConfig(**{**SMALL, "runs": 1})
        result = run_suite(cfg)
        assert all(row.std_dev == 0.0 for row in result.summaries)
        assert all(row.best_fitness == row.mean_fitness for row in result.summaries)

    def test_comparisons_against_reference(self):
        cfg = SuiteConfig(**{**SMALL, "algorithms": ("goa", "pso", "random_search")})
        result = run_suite(cfg)
        pairs = {(c.algorithm_a, c.algorithm_b) for c in result.comparisons}
        assert pairs == {("goa", "pso"), ("goa", "random_search")}
        for c in result.comparisons:
            assert 0.0 < c.p_value <= 1.0

    def test_parallel_matches_serial(self):
        cfg = SuiteConfig(**SMALL)
        serial = run_suite(cfg, jobs=1)
        parallel = run_suite(cfg, jobs=2)
        assert serial.cells == parallel.cells
        assert serial.summaries == parallel.summaries
        assert serial.comparisons == parallel.comparisons

    def test_jobs_validated(self):
        with pytest.raises(ValueError, match="jobs"):
            run_suite(SuiteConfig(**SMALL), jobs=0)

    def test_failed_cells_contained(self, capsys):
        cfg = SuiteConfig(**{**SMALL, "overrides": {"goa": {"alpha": -1.0}}})
        result = run_suite(cfg)
        err = capsys.readouterr().err
        assert "warning: cell" in err
        assert "algorithm=goa" in err
        goa_cells = [c for c in result.cells if c["algorithm"] == "goa"]
        assert goa_cells and all(not c["ok"] for c in goa_cells)
        assert all("error" in c for c in goa_cells)
        # pso is untouched; goa vanishes from the tables instead of
        # producing fabricated numbers
        assert [row.algorithm for row in result.summaries] == ["pso"]
        assert result.comparisons == []


@pytest.fixture(scope="module")
def suite():
    return run_suite(SuiteConfig(**SMALL))


class TestOutputs:
    def test_headers(self, suite, tmp_path):
        paths = write_outputs(suite, tmp_path)
        with open(paths["summary"], newline="") as fh:
            assert next(csv.reader(fh)) == [
                "function", "algorithm", "best_fitness", "mean_fitness", "std_dev"
            ]
        with open(paths["wilcoxon"], newline="") as fh:
            assert next(csv.reader(fh)) == [
                "function", "algorithm_a", "algorithm_b", "statistic",
                "p_value", "method"
            ]
        with open(paths["convergence"], newline="") as fh:
            assert next(csv.reader(fh)) == [
                "function", "algorithm", "run", "iteration", "best_so_far"
            ]

    def test_float_cells_round_trip(self, suite, tmp_path):
        paths = write_outputs(suite, tmp_path)
        with open(paths["summary"], newline="") as fh:
            rows = list(csv.DictReader(fh))
        by_algo = {row["algorithm"]: row for row in rows}
        for summary in suite.summaries:
            row = by_algo[summary.algorithm]
            assert float(row["best_fitness"]) == summary.best_fitness
            assert float(row["mean_fitness"]) == summary.mean_fitness
            assert float(row["std_dev"]) == summary.std_dev

    def test_convergence_row_count(self, suite, tmp_path):
        paths = write_outputs(suite, tmp_path)
        with open(paths["convergence"], newline="") as fh:
            rows = list(csv.DictReader(fh))
        cells = 1 * 2 * 3
        assert len(rows) == cells * (SMALL["iters"] + 1)
        first = rows[0]
        assert first["iteration"] == "0"
        assert math.isfinite(float(first["best_so_far"]))

    def test_run_meta_contents(self, suite, tmp_path):
        paths = write_outputs(suite, tmp_path)
        meta = json.loads(paths["run_meta"].read_text())
        assert meta["reference_algorithm"] == "goa"
        assert "output_dir" not in meta["config"]
        assert len(meta["cells"]) == 6
        for cell in meta["cells"]:
            assert cell["ok"]
            assert cell["termination"] == "max_iterations"
            assert cell["seed"] == SMALL["base_seed"] + cell["run"]

    def test_run_meta_round_trips_as_config(self, suite, tmp_path):
        paths = write_outputs(suite, tmp_path)
        again = load_config(paths["run_meta"])
        cfg = suite.config
        assert again.functions == cfg.functions
        assert again.algorithms == cfg.algorithms
        assert (again.dim, again.runs, again.base_seed) == (
            cfg.dim, cfg.runs, cfg.base_seed
        )
        assert (again.pop, again.iters, again.overrides) == (
            cfg.pop, cfg.iters, cfg.overrides
        )

    def test_byte_identical_across_repeats_and_parallelism(self, tmp_path):
        cfg = SuiteConfig(**SMALL)
        first = write_outputs(run_suite(cfg, jobs=1), tmp_path / "a")
        second = write_outputs(run_suite(cfg, jobs=1), tmp_path / "b")
        third = write_outputs(run_suite(cfg, jobs=2), tmp_path / "c")
        assert read_bytes(first) == read_bytes(second) == read_bytes(third)

    def test_output_dir_created(self, suite, tmp_path):
        nested = tmp_path / "deep" / "nest"
        paths = write_outputs(suite, nested)
        assert all(path.exists() for path in paths.values())
        assert all(path.parent == nested for path in paths.values())


class TestDefaultNames:
    def test_module_constants(self):
        assert DEFAULT_FUNCTIONS == ("sphere", "rastrigin", "ackley")
        assert DEFAULT_ALGORITHMS == ("goa", "pso", "gwo", "ga", "woa", "abc")
