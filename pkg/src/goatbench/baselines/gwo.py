"""Grey wolf optimizer with a persistent three-wolf leaderboard."""

from __future__ import annotations

import numpy as np

from ..base import BaseOptimizer, BestArchive, RunResult, evaluate_rows
from ..core import Objective, RandomSource, SearchSpace, Vector, clamp, fitness_key


def convergence_factor(t: int, t_max: int) -> float:
    """Linear schedule from 2 at ``t = 0`` down to 0 at ``t = t_max``."""
    if t_max < 1:
        raise ValueError(f"t_max must be >= 1, got {t_max}")
    return 2.0 * (1.0 - t / t_max)


class Leaderboard:
    """Best-ever top-``k`` positions, strict improvement, stable ties."""

    def __init__(self, k: int):
        if k < 1:
            raise ValueError(f"leaderboard size must be >= 1, got {k}")
        self.k = k
        self.entries: list[tuple[float, Vector, float]] = []

    def offer(self, position: Vector, fitness: float) -> None:
        key = fitness_key(fitness)
        at = len(self.entries)
        while at > 0 and key < self.entries[at - 1][0]:
            at -= 1
        if at >= self.k:
            return
        self.entries.insert(at, (key, np.array(position, copy=True), float(fitness)))
        del self.entries[self.k :]

    def positions(self) -> list[Vector]:
        return [entry[1] for entry in self.entries]


class GreyWolfOptimizer(BaseOptimizer):
    """Pack hierarchy search led by the three best solutions ever seen.

    Each wolf moves to the average of three leader-guided points; the
    attraction strength decays linearly over the run so the pack shifts
    from exploration to convergence. Packs smaller than three follow as
    many leaders as they have members.

    Parameters
    ----------
    n : int
        Pack size.
    t_max : int
        Iteration cap.
    """

    def __init__(self, n=30, t_max=500):
        self.n = n
        self.t_max = t_max

    def _optimize(self, objective: Objective, space: SearchSpace, rng: RandomSource) -> RunResult:
        n, t_max = int(self.n), int(self.t_max)
        archive = BestArchive()
        leaders = Leaderboard(min(3, n))
        x = space.sample(n, rng)
        fit = evaluate_rows(objective, x, archive)
        evaluations = n
        for i in range(n):
            leaders.offer(x[i], fit[i])
        trace = [archive.fitness]

        for t in range(t_max):
            a = convergence_factor(t, t_max)
            guided = np.zeros_like(x)
            for leader in leaders.positions():
                r1 = rng.uniform((n, space.dim))
                r2 = rng.uniform((n, space.dim))
                strength = 2.0 * a * r1 - a
                distance = np.abs(2.0 * r2 * leader - x)
                guided += leader - strength * distance
            x = clamp(guided / len(leaders.entries), space)
            fit = evaluate_rows(objective, x, archive)
            evaluations += n
            for i in range(n):
                leaders.offer(x[i], fit[i])
            trace.append(archive.fitness)

        return RunResult(
            best=archive.as_candidate(),
            trace=np.asarray(trace),
            evaluations=evaluations,
            termination="max_iterations",
            seed=rng.seed,
        )
