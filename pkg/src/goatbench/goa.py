"""Goat Optimization Algorithm.

Each iteration applies a composite move to every goat in index order:
a Gaussian exploration step scaled by the box width, a pull toward the
best solution found so far, and (with fixed probability) a jump toward a
uniformly chosen other goat. The moved population is clamped to the box
and evaluated once; in greedy mode a goat reverts when its composite move
worsened its own fitness. The worst fraction of the population is then
regenerated uniformly at random, and the run stops on the iteration cap
or on the optional improvement-stall / population-spread thresholds.
"""

from __future__ import annotations

import math

import numpy as np

from .base import BaseOptimizer, RunResult
from .core import (
    Objective,
    Population,
    RandomSource,
    SearchSpace,
    Vector,
    clamp,
    evaluate,
    evaluate_member,
    fitness_key,
    init_population,
)

ACCEPTANCE_MODES = ("greedy", "literal")


def explore_step(position, space: SearchSpace, alpha_t: float, rng: RandomSource) -> Vector:
    """Random foraging move: add per-dimension Gaussian noise.

    Returns ``x + alpha_t * R * (upper - lower)`` where ``R`` is an
    i.i.d. standard-normal vector. Accepts a single position or an
    (n, dim) batch; the result is neither clamped nor evaluated.
    """
    if alpha_t < 0:
        raise ValueError(f"exploration coefficient must be >= 0, got {alpha_t}")
    arr = np.asarray(position, dtype=float)
    if arr.shape[-1] != space.dim:
        raise ValueError(f"position has dimension {arr.shape[-1]}, space has {space.dim}")
    draws = rng.standard_normal(arr.shape)
    return arr + alpha_t * draws * space.width


def exploit_step(position, best_position, beta: float) -> Vector:
    """Move toward the best solution: ``x + beta * (best - x)``.

    For beta in [0, 1] each component lands on the segment between the
    current position and the best. Accepts batches via broadcasting.
    """
    arr = np.asarray(position, dtype=float)
    best = np.asarray(best_position, dtype=float)
    if arr.shape[-1] != best.shape[-1]:
        raise ValueError(
            f"position dimension {arr.shape[-1]} != best dimension {best.shape[-1]}"
        )
    return arr + beta * (best - arr)


def jump_step(position, partner_position, jump_mag: float) -> Vector:
    """Jump toward a partner goat: ``x + jump_mag * (partner - x)``.

    With magnitude 1 the goat relocates fully onto the partner. The
    caller decides which goats jump and picks the partner uniformly from
    the other members.
    """
    arr = np.asarray(position, dtype=float)
    partner = np.asarray(partner_position, dtype=float)
    if arr.shape[-1] != partner.shape[-1]:
        raise ValueError(
            f"position dimension {arr.shape[-1]} != partner dimension {partner.shape[-1]}"
        )
    return arr + jump_mag * (partner - arr)


def filter_worst(
    pop: Population, space: SearchSpace, fraction: float, objective, rng: RandomSource
) -> int:
    """Regenerate the worst ``floor(fraction * n)`` members uniformly.

    Members are ranked by fitness (non-finite counts as worst); ties at
    the cut boundary replace the higher-indexed member first. Regenerated
    members are evaluated immediately and offered to the archive, which
    can only improve it. Returns the number of evaluations spent.
    """
    if not 0.0 <= fraction < 1.0:
        raise ValueError(f"filter fraction must be in [0, 1), got {fraction!r}")
    n = len(pop)
    k = math.floor(fraction * n)
    if k == 0:
        return 0
    # Worst first: larger fitness key, then higher index.
    worst_order = sorted(range(n), key=lambda i: (fitness_key(pop.members[i].fitness), i), reverse=True)
    replaced = sorted(worst_order[:k])
    for index in replaced:
        pop.members[index].position = space.sample_one(rng)
        pop.members[index].fitness = None
        evaluate_member(pop, index, objective)
    return k


def should_stop(
    trace, pop: Population, *, t: int, t_max: int, epsilon: float = 0.0, delta: float = 0.0
) -> str | None:
    """Termination decision after iteration ``t``, or None to continue.

    Checks, in priority order: the iteration cap; the improvement stall
    (consecutive best-so-far values closer than ``epsilon``); and the
    population spread (mean squared fitness distance to the best-ever
    value below ``delta``). Thresholds at 0 disable their check.
    """
    if len(trace) < 1:
        raise ValueError("trace must contain the initial evaluation")
    if t >= t_max:
        return "max_iterations"
    if epsilon > 0 and len(trace) >= 2 and abs(trace[-1] - trace[-2]) < epsilon:
        return "stalled_improvement"
    if delta > 0:
        spread = population_spread(pop)
        if spread < delta:
            return "negligible_spread"
    return None


def population_spread(pop: Population) -> float:
    """Mean squared fitness distance from members to the best-ever value.

    Non-negative, and exactly 0 when every member's fitness equals the
    best-ever fitness.
    """
    if pop.best_ever is None:
        raise ValueError("population has not been evaluated yet")
    deviations = pop.fitness_values() - pop.best_ever.fitness
    return float(np.mean(deviations * deviations))


class GoatOptimizer(BaseOptimizer):
    """Goat Optimization Algorithm over a box-bounded continuous domain.

    Parameters
    ----------
    n : int
        Population size.
    t_max : int
        Iteration cap; 0 returns the best of the initial sample.
    alpha : float
        Exploration coefficient scaling Gaussian steps by the box width.
    beta : float
        Exploitation coefficient pulling goats toward the best solution.
    jump_prob : float
        Per-goat, per-iteration probability of a jump move.
    jump_mag : float
        Jump step coefficient; 1.0 relocates fully onto the partner.
    filter_fraction : float
        Fraction of worst goats regenerated uniformly each iteration.
    epsilon : float
        Improvement-stall threshold; 0 disables the check.
    delta : float
        Population-spread threshold; 0 disables the check.
    acceptance : {"greedy", "literal"}
        "greedy" reverts a goat whose composite move worsened its own
        fitness; "literal" always accepts the move.
    alpha_decay : bool
        Scale alpha by ``1 - t / t_max`` so exploration anneals to zero.
    """

    def __init__(
        self,
        n=30,
        t_max=500,
        alpha=0.05,
        beta=0.5,
        jump_prob=0.1,
        jump_mag=1.0,
        filter_fraction=0.2,
        epsilon=0.0,
        delta=0.0,
        acceptance="greedy",
        alpha_decay=False,
    ):
        self.n = n
        self.t_max = t_max
        self.alpha = alpha
        self.beta = beta
        self.jump_prob = jump_prob
        self.jump_mag = jump_mag
        self.filter_fraction = filter_fraction
        self.epsilon = epsilon
        self.delta = delta
        self.acceptance = acceptance
        self.alpha_decay = alpha_decay

    def _check_params(self, space: SearchSpace) -> None:
        super()._check_params(space)
        self._check_non_negative("alpha", self.alpha)
        self._check_non_negative("beta", self.beta)
        self._check_in_range("jump_prob", self.jump_prob, 0.0, 1.0)
        self._check_non_negative("jump_mag", self.jump_mag)
        self._check_in_range("filter_fraction", self.filter_fraction, 0.0, 1.0, include_high=False)
        self._check_non_negative("epsilon", self.epsilon)
        self._check_non_negative("delta", self.delta)
        if self.acceptance not in ACCEPTANCE_MODES:
            raise ValueError(
                f"acceptance must be one of {ACCEPTANCE_MODES}, got {self.acceptance!r}"
            )

    def _optimize(self, objective: Objective, space: SearchSpace, rng: RandomSource) -> RunResult:
        n = int(self.n)
        t_max = int(self.t_max)
        pop = init_population(space, n, rng)
        evaluations = evaluate(pop, objective)
        trace = [pop.best_ever.fitness]

        t = 0
        while True:
            reason = should_stop(
                trace, pop, t=t, t_max=t_max, epsilon=self.epsilon, delta=self.delta
            )
            if reason is not None:
                break
            t += 1

            old_positions = pop.positions()
            old_fitness = [m.fitness for m in pop.members]
            alpha_t = self.alpha * (1.0 - t / t_max) if self.alpha_decay else self.alpha

            moved = explore_step(old_positions, space, alpha_t, rng)
            moved = exploit_step(moved, pop.best_ever.position, self.beta)
            if n > 1:
                jump_wins = rng.uniform(n) < self.jump_prob
                for i in np.flatnonzero(jump_wins):
                    partner = rng.index_excluding(n, int(i))
                    moved[i] = jump_step(moved[i], old_positions[partner], self.jump_mag)
            moved = clamp(moved, space)

            for i, member in enumerate(pop.members):
                member.position = moved[i]
                member.fitness = None
            evaluations += evaluate(pop, objective)

            if self.acceptance == "greedy":
                for i, member in enumerate(pop.members):
                    if fitness_key(member.fitness) > fitness_key(old_fitness[i]):
                        member.position = old_positions[i]
                        member.fitness = old_fitness[i]

            evaluations += filter_worst(pop, space, self.filter_fraction, objective, rng)
            trace.append(pop.best_ever.fitness)

        return RunResult(
            best=pop.best_ever.copy(),
            trace=np.asarray(trace),
            evaluations=evaluations,
            termination=reason,
            seed=rng.seed,
        )
