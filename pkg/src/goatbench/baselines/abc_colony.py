"""Artificial bee colony over a shared pool of food sources."""

from __future__ import annotations

import math

import numpy as np

from ..base import BaseOptimizer, BestArchive, RunResult, evaluate_rows
from ..core import Objective, RandomSource, SearchSpace, clamp, fitness_key


def attractiveness(fitness: float) -> float:
    """Map a minimization value to a non-negative selection weight.

    Larger is better: ``1 / (1 + f)`` for ``f >= 0`` and ``1 + |f|``
    for negative ``f``. Non-finite values get weight 0.
    """
    if not math.isfinite(fitness):
        return 0.0
    if fitness >= 0:
        return 1.0 / (1.0 + fitness)
    return 1.0 + abs(fitness)


class ArtificialBeeColony(BaseOptimizer):
    """Employed, onlooker, and scout bees refining half as many sources.

    A colony of ``n`` bees maintains ``n // 2`` food sources. Each cycle
    every source gets one local probe by its employed bee, onlookers
    re-probe sources picked by fitness-proportional roulette, and the
    single most-neglected source is abandoned for a fresh uniform sample
    once it fails to improve ``limit`` times in a row.

    Parameters
    ----------
    n : int
        Colony size; at least 4 so two sources exist.
    t_max : int
        Cycle cap.
    limit : int or None
        Abandonment threshold; None picks ``n * dim / 2`` at run time.
    """

    def __init__(self, n=30, t_max=500, limit=None):
        self.n = n
        self.t_max = t_max
        self.limit = limit

    def _check_params(self, space: SearchSpace) -> None:
        super()._check_params(space)
        if int(self.n) < 4:
            raise ValueError(f"colony size must be at least 4, got {self.n}")
        if self.limit is not None:
            self._check_positive_int("limit", self.limit)

    def _probe(self, x, fit, trials, i, space, objective, archive, rng) -> None:
        partner = rng.index_excluding(x.shape[0], i)
        gene = rng.integer(space.dim)
        swing = 2.0 * rng.uniform() - 1.0
        candidate = x[i].copy()
        candidate[gene] += swing * (x[i, gene] - x[partner, gene])
        candidate = clamp(candidate, space)
        value = float(evaluate_rows(objective, candidate[np.newaxis, :], archive)[0])
        if fitness_key(value) < fitness_key(fit[i]):
            x[i] = candidate
            fit[i] = value
            trials[i] = 0
        else:
            trials[i] += 1

    def _optimize(self, objective: Objective, space: SearchSpace, rng: RandomSource) -> RunResult:
        n, t_max = int(self.n), int(self.t_max)
        sources = n // 2
        onlookers = n - sources
        limit = int(self.limit) if self.limit is not None else n * space.dim // 2

        archive = BestArchive()
        x = space.sample(sources, rng)
        fit = evaluate_rows(objective, x, archive)
        evaluations = sources
        trials = np.zeros(sources, dtype=int)
        trace = [archive.fitness]

        for _ in range(t_max):
            for i in range(sources):
                self._probe(x, fit, trials, i, space, objective, archive, rng)
            weights = np.array([attractiveness(f) for f in fit])
            total = weights.sum()
            if total > 0:
                cumulative = np.cumsum(weights / total)
            else:
                cumulative = np.cumsum(np.full(sources, 1.0 / sources))
            for _ in range(onlookers):
                pick = int(np.searchsorted(cumulative, rng.uniform(), side="right"))
                pick = min(pick, sources - 1)
                self._probe(x, fit, trials, pick, space, objective, archive, rng)
            evaluations += sources + onlookers
            neglected = int(np.argmax(trials))
            if trials[neglected] > limit:
                x[neglected] = space.sample_one(rng)
                fit[neglected] = evaluate_rows(
                    objective, x[neglected : neglected + 1], archive
                )[0]
                trials[neglected] = 0
                evaluations += 1
            trace.append(archive.fitness)

        return RunResult(
            best=archive.as_candidate(),
            trace=np.asarray(trace),
            evaluations=evaluations,
            termination="max_iterations",
            seed=rng.seed,
        )
