"""Uniform random sampling, the floor every algorithm must beat."""

from __future__ import annotations

import numpy as np

from ..base import BaseOptimizer, BestArchive, RunResult, evaluate_rows
from ..core import Objective, RandomSource, SearchSpace


class RandomSearch(BaseOptimizer):
    """Draw ``n`` fresh uniform samples per iteration, keep the best.

    Spends exactly ``n * (t_max + 1)`` evaluations, which makes it easy
    to budget-match against any population algorithm.

    Parameters
    ----------
    n : int
        Samples per iteration.
    t_max : int
        Iteration cap; 0 means a single sampling round.
    """

    def __init__(self, n=30, t_max=500):
        self.n = n
        self.t_max = t_max

    def _optimize(self, objective: Objective, space: SearchSpace, rng: RandomSource) -> RunResult:
        n, t_max = int(self.n), int(self.t_max)
        archive = BestArchive()
        rows = space.sample(n, rng)
        evaluate_rows(objective, rows, archive)
        evaluations = n
        trace = [archive.fitness]

        for _ in range(t_max):
            rows = space.sample(n, rng)
            evaluate_rows(objective, rows, archive)
            evaluations += n
            trace.append(archive.fitness)

        return RunResult(
            best=archive.as_candidate(),
            trace=np.asarray(trace),
            evaluations=evaluations,
            termination="max_iterations",
            seed=rng.seed,
        )
