"""Whale optimization algorithm with encircling and spiral moves."""

from __future__ import annotations

import math

import numpy as np

from ..base import BaseOptimizer, BestArchive, RunResult, evaluate_rows
from ..core import Objective, RandomSource, SearchSpace, clamp
from .gwo import convergence_factor


class WhaleOptimizer(BaseOptimizer):
    """Bubble-net search alternating shrink-encircle and spiral moves.

    Each whale flips a fair coin between encircling and a logarithmic
    spiral around the best solution. While the linearly decaying
    attraction coefficient is still large, encircling targets a random
    whale instead of the best, which keeps the pod exploring early on.

    Parameters
    ----------
    n : int
        Pod size.
    t_max : int
        Iteration cap.
    spiral_pitch : float
        Shape constant of the logarithmic spiral move.
    """

    def __init__(self, n=30, t_max=500, spiral_pitch=1.0):
        self.n = n
        self.t_max = t_max
        self.spiral_pitch = spiral_pitch

    def _check_params(self, space: SearchSpace) -> None:
        super()._check_params(space)
        self._check_non_negative("spiral_pitch", self.spiral_pitch)

    def _optimize(self, objective: Objective, space: SearchSpace, rng: RandomSource) -> RunResult:
        n, t_max = int(self.n), int(self.t_max)
        archive = BestArchive()
        x = space.sample(n, rng)
        evaluate_rows(objective, x, archive)
        evaluations = n
        trace = [archive.fitness]

        for t in range(t_max):
            a = convergence_factor(t, t_max)
            best = np.array(archive.position, copy=True)
            moved = np.empty_like(x)
            for i in range(n):
                r1 = rng.uniform()
                r2 = rng.uniform()
                spin = 2.0 * rng.uniform() - 1.0
                coin = rng.uniform()
                strength = 2.0 * a * r1 - a
                swirl = 2.0 * r2
                if coin < 0.5:
                    if abs(strength) < 1.0:
                        target = best
                    else:
                        target = x[rng.integer(n)]
                    distance = np.abs(swirl * target - x[i])
                    moved[i] = target - strength * distance
                else:
                    gap = np.abs(best - x[i])
                    moved[i] = (
                        gap * math.exp(self.spiral_pitch * spin) * math.cos(2.0 * math.pi * spin)
                        + best
                    )
            x = clamp(moved, space)
            evaluate_rows(objective, x, archive)
            evaluations += n
            trace.append(archive.fitness)

        return RunResult(
            best=archive.as_candidate(),
            trace=np.asarray(trace),
            evaluations=evaluations,
            termination="max_iterations",
            seed=rng.seed,
        )
