"""Particle swarm optimization, global-best topology."""

from __future__ import annotations

import numpy as np

from ..base import BaseOptimizer, BestArchive, RunResult, evaluate_rows
from ..core import Objective, RandomSource, SearchSpace, clamp, fitness_keys


class ParticleSwarmOptimizer(BaseOptimizer):
    """Velocity-driven swarm with inertia and two attraction terms.

    Every particle keeps its personal best; all particles share one
    global best. Velocities start at zero and are clamped per dimension
    to ``velocity_clamp`` times the box width.

    Parameters
    ----------
    n : int
        Swarm size.
    t_max : int
        Iteration cap.
    inertia : float
        Weight on the previous velocity (0.729 pairs with the standard
        acceleration coefficients below for a contracting swarm).
    cognitive : float
        Pull toward the particle's own best position.
    social : float
        Pull toward the swarm's best position.
    velocity_clamp : float
        Per-dimension speed limit as a fraction of the box width.
    """

    def __init__(
        self,
        n=30,
        t_max=500,
        inertia=0.729,
        cognitive=1.49445,
        social=1.49445,
        velocity_clamp=0.2,
    ):
        self.n = n
        self.t_max = t_max
        self.inertia = inertia
        self.cognitive = cognitive
        self.social = social
        self.velocity_clamp = velocity_clamp

    def _check_params(self, space: SearchSpace) -> None:
        super()._check_params(space)
        self._check_non_negative("inertia", self.inertia)
        self._check_non_negative("cognitive", self.cognitive)
        self._check_non_negative("social", self.social)
        self._check_non_negative("velocity_clamp", self.velocity_clamp)

    def _optimize(self, objective: Objective, space: SearchSpace, rng: RandomSource) -> RunResult:
        n, t_max = int(self.n), int(self.t_max)
        archive = BestArchive()
        x = space.sample(n, rng)
        fit = evaluate_rows(objective, x, archive)
        evaluations = n

        pbest = x.copy()
        pbest_fit = fit.copy()
        v = np.zeros_like(x)
        vmax = self.velocity_clamp * space.width
        trace = [archive.fitness]

        for _ in range(t_max):
            r1 = rng.uniform((n, space.dim))
            r2 = rng.uniform((n, space.dim))
            v = (
                self.inertia * v
                + self.cognitive * r1 * (pbest - x)
                + self.social * r2 * (archive.position - x)
            )
            v = np.clip(v, -vmax, vmax)
            x = clamp(x + v, space)
            fit = evaluate_rows(objective, x, archive)
            evaluations += n
            improved = fitness_keys(fit) < fitness_keys(pbest_fit)
            pbest[improved] = x[improved]
            pbest_fit[improved] = fit[improved]
            trace.append(archive.fitness)

        return RunResult(
            best=archive.as_candidate(),
            trace=np.asarray(trace),
            evaluations=evaluations,
            termination="max_iterations",
            seed=rng.seed,
        )
