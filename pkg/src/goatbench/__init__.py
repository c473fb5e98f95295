"""Goat-herd optimization and a benchmark harness to weigh it against rivals.

The package has three layers: optimizers (estimator-style classes with a
seeded ``optimize`` method), benchmark functions with their standard
boxes, and an experiment harness that crosses the two, repeats runs over
a shared seed series, and exports summary tables, rank-sum comparisons,
and convergence curves deterministically.
"""

from ._version import __version__
from .base import TERMINATIONS, BaseOptimizer, BestArchive, RunResult
from .baselines import (
    ArtificialBeeColony,
    GeneticAlgorithm,
    GreyWolfOptimizer,
    ParticleSwarmOptimizer,
    RandomSearch,
    WhaleOptimizer,
)
from .benchmarks import BenchmarkSpec
from .benchmarks import available as available_functions
from .benchmarks import lookup as lookup_function
from .core import (
    Candidate,
    EvaluationError,
    Objective,
    Population,
    RandomSource,
    SearchSpace,
    as_objective,
    clamp,
)
from .goa import GoatOptimizer
from .harness import (
    SuiteConfig,
    SuiteResult,
    load_config,
    run_suite,
    write_outputs,
)
from .registry import ALGORITHMS
from .registry import available as available_algorithms
from .registry import make_optimizer
from .stats import RankSumResult, SampleSummary, rank_sum_test, summarize

__all__ = [
    "ALGORITHMS",
    "ArtificialBeeColony",
    "BaseOptimizer",
    "BenchmarkSpec",
    "BestArchive",
    "Candidate",
    "EvaluationError",
    "GeneticAlgorithm",
    "GoatOptimizer",
    "GreyWolfOptimizer",
    "Objective",
    "ParticleSwarmOptimizer",
    "Population",
    "RandomSearch",
    "RandomSource",
    "RankSumResult",
    "RunResult",
    "SampleSummary",
    "SearchSpace",
    "SuiteConfig",
    "SuiteResult",
    "TERMINATIONS",
    "WhaleOptimizer",
    "__version__",
    "as_objective",
    "available_algorithms",
    "available_functions",
    "clamp",
    "lookup_function",
    "make_optimizer",
    "rank_sum_test",
    "run_suite",
    "load_config",
    "summarize",
    "write_outputs",
]
