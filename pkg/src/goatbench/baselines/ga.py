"""Real-coded genetic algorithm, generational with one elite."""

from __future__ import annotations

import numpy as np

from ..base import BaseOptimizer, BestArchive, RunResult, evaluate_rows
from ..core import Objective, RandomSource, SearchSpace, clamp, fitness_keys

TOURNAMENT_SIZE = 3
MUTATION_SCALE = 0.1  # fraction of the box width per mutated gene


class GeneticAlgorithm(BaseOptimizer):
    """Tournament selection, per-gene blend crossover, Gaussian mutation.

    Each generation keeps the single best individual unchanged and fills
    the remaining slots with offspring: two parents picked by size-3
    tournaments, blended gene-by-gene with probability ``crossover_rate``
    (otherwise the first parent is cloned), then each gene mutated with
    probability ``1/dim`` by Gaussian noise scaled to the box width.

    Parameters
    ----------
    n : int
        Population size; at least 4 so tournaments and elitism coexist.
    t_max : int
        Generation cap.
    crossover_rate : float
        Probability an offspring is a parent blend instead of a clone.
    """

    def __init__(self, n=30, t_max=500, crossover_rate=0.9):
        self.n = n
        self.t_max = t_max
        self.crossover_rate = crossover_rate

    def _check_params(self, space: SearchSpace) -> None:
        super()._check_params(space)
        if int(self.n) < 4:
            raise ValueError(f"population size must be at least 4, got {self.n}")
        self._check_in_range("crossover_rate", self.crossover_rate, 0.0, 1.0)

    def _tournament(self, keys, rng: RandomSource) -> int:
        winner = rng.integer(keys.size)
        for _ in range(TOURNAMENT_SIZE - 1):
            rival = rng.integer(keys.size)
            if keys[rival] < keys[winner]:
                winner = rival
        return winner

    def _optimize(self, objective: Objective, space: SearchSpace, rng: RandomSource) -> RunResult:
        n, t_max = int(self.n), int(self.t_max)
        dim = space.dim
        archive = BestArchive()
        x = space.sample(n, rng)
        fit = evaluate_rows(objective, x, archive)
        evaluations = n
        trace = [archive.fitness]
        gene_rate = 1.0 / dim
        scale = MUTATION_SCALE * space.width

        for _ in range(t_max):
            keys = fitness_keys(fit)
            elite = int(np.argmin(keys))
            children = np.empty((n - 1, dim))
            for c in range(n - 1):
                p1 = self._tournament(keys, rng)
                p2 = self._tournament(keys, rng)
                if rng.uniform() < self.crossover_rate:
                    lam = rng.uniform(dim)
                    child = lam * x[p1] + (1.0 - lam) * x[p2]
                else:
                    child = x[p1].copy()
                mutate = rng.uniform(dim) < gene_rate
                noise = rng.standard_normal(dim)
                child = np.where(mutate, child + scale * noise, child)
                children[c] = child
            children = clamp(children, space)
            child_fit = evaluate_rows(objective, children, archive)
            evaluations += n - 1
            x = np.vstack([x[elite : elite + 1], children])
            fit = np.concatenate([fit[elite : elite + 1], child_fit])
            trace.append(archive.fitness)

        return RunResult(
            best=archive.as_candidate(),
            trace=np.asarray(trace),
            evaluations=evaluations,
            termination="max_iterations",
            seed=rng.seed,
        )
