"""Estimator-style base class and run bookkeeping shared by all optimizers.

Every algorithm is a scikit-learn style estimator: hyperparameters live in
``__init__`` verbatim, ``get_params``/``set_params`` expose them for
composition and sweeps, and a run leaves its outcome in trailing-underscore
attributes. The action verb is ``optimize`` because the input is an
objective function over a box, not a data matrix.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from sklearn.base import BaseEstimator

from .core import (
    Candidate,
    EvaluationError,
    Objective,
    RandomSource,
    SearchSpace,
    Vector,
    as_objective,
    fitness_key,
)

TERMINATIONS = ("max_iterations", "stalled_improvement", "negligible_spread")


@dataclass(frozen=True)
class RunResult:
    """Outcome of one optimization run.

    ``trace`` holds the best-so-far fitness after the initial evaluation
    and after each completed iteration, so it is non-increasing and its
    last entry equals ``best.fitness``.
    """

    best: Candidate
    trace: np.ndarray
    evaluations: int
    termination: str
    seed: int


class BestArchive:
    """Elitist record of the best evaluated position seen so far."""

    __slots__ = ("position", "fitness")

    def __init__(self):
        self.position: Vector | None = None
        self.fitness: float | None = None

    def offer(self, position: Vector, fitness: float) -> bool:
        """Admit on strict improvement only; ties keep the incumbent."""
        if self.position is None or fitness_key(fitness) < fitness_key(self.fitness):
            self.position = np.array(position, copy=True)
            self.fitness = float(fitness)
            return True
        return False

    def as_candidate(self) -> Candidate:
        if self.position is None:
            raise RuntimeError("archive is empty; nothing evaluated yet")
        return Candidate(np.array(self.position, copy=True), self.fitness)


def evaluate_rows(objective: Objective, rows: Vector, archive: BestArchive) -> Vector:
    """Evaluate each row of an (n, dim) matrix in index order.

    Offers every value to the archive (so index order settles ties) and
    returns the fitness vector. Objective exceptions are re-raised with
    the failing row's context attached.
    """
    n = rows.shape[0]
    out = np.empty(n)
    for i in range(n):
        try:
            out[i] = float(objective(rows[i]))
        except EvaluationError:
            raise
        except Exception as exc:
            raise EvaluationError(
                f"objective '{objective.name}' failed on member {i}"
            ) from exc
        archive.offer(rows[i], out[i])
    return out


class BaseOptimizer(BaseEstimator):
    """Common optimizer surface: validated params, seeded runs, results.

    Subclasses implement ``_optimize(objective, space, rng)`` and extend
    ``_check_params`` with their own constraints. After ``optimize`` the
    instance carries ``result_``, ``best_position_``, and ``best_fitness_``.
    """

    def optimize(self, objective, space: SearchSpace, seed: int | RandomSource = 0) -> RunResult:
        """Run the algorithm on ``objective`` over ``space``.

        Parameters
        ----------
        objective : callable or Objective
            Minimization target mapping a position vector to a float.
        space : SearchSpace
            Box bounds defining the domain.
        seed : int or RandomSource
            Seed (or an already-constructed source) for this run. Equal
            seeds reproduce the run bit-exactly.
        """
        obj = as_objective(objective)
        if not isinstance(space, SearchSpace):
            raise TypeError(
                "space must be a SearchSpace; build one with SearchSpace.from_box"
            )
        if space.dim < obj.min_dim:
            raise ValueError(
                f"objective '{obj.name}' requires dimension >= {obj.min_dim}, "
                f"space has {space.dim}"
            )
        self._check_params(space)
        rng = seed if isinstance(seed, RandomSource) else RandomSource(seed)
        result = self._optimize(obj, space, rng)
        self.result_ = result
        self.best_position_ = np.array(result.best.position, copy=True)
        self.best_fitness_ = result.best.fitness
        return result

    # Subclass hooks ----------------------------------------------------

    def _optimize(self, objective: Objective, space: SearchSpace, rng: RandomSource) -> RunResult:
        raise NotImplementedError

    def _check_params(self, space: SearchSpace) -> None:
        self._check_positive_int("n", self.n)
        self._check_non_negative_int("t_max", self.t_max)

    # Validation helpers ------------------------------------------------

    @staticmethod
    def _check_positive_int(name: str, value) -> None:
        if not isinstance(value, (int, np.integer)) or isinstance(value, bool) or value < 1:
            raise ValueError(f"{name} must be a positive integer, got {value!r}")

    @staticmethod
    def _check_non_negative_int(name: str, value) -> None:
        if not isinstance(value, (int, np.integer)) or isinstance(value, bool) or value < 0:
            raise ValueError(f"{name} must be a non-negative integer, got {value!r}")

    @staticmethod
    def _check_in_range(name: str, value, low, high, *, include_high=True) -> None:
        ok = isinstance(value, (int, float, np.integer, np.floating)) and not isinstance(
            value, bool
        )
        if ok:
            ok = low <= value <= high if include_high else low <= value < high
        if not ok:
            bracket = "]" if include_high else ")"
            raise ValueError(f"{name} must be in [{low}, {high}{bracket}, got {value!r}")

    @staticmethod
    def _check_non_negative(name: str, value) -> None:
        ok = isinstance(value, (int, float, np.integer, np.floating)) and not isinstance(
            value, bool
        )
        if not ok or value < 0:
            raise ValueError(f"{name} must be a non-negative number, got {value!r}")
