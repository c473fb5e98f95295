"""Shared vocabulary for all optimizers.

Search spaces, candidate solutions, populations with an elitist archive,
the objective-function wrapper, and the seeded random source every
algorithm draws from. All optimization is minimization over a box.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

Vector = np.ndarray


class EvaluationError(RuntimeError):
    """An objective function raised while evaluating a candidate."""


def as_vector(values, dim: int | None = None, name: str = "position") -> Vector:
    """Coerce to a 1-D float array, optionally checking its length."""
    arr = np.asarray(values, dtype=float)
    if arr.ndim != 1:
        raise ValueError(f"{name} must be 1-dimensional, got shape {arr.shape}")
    if dim is not None and arr.size != dim:
        raise ValueError(f"{name} has length {arr.size}, expected {dim}")
    return arr


def fitness_key(fitness: float | None) -> float:
    """Ranking key under minimization: non-finite values sort as worst."""
    if fitness is None or not math.isfinite(fitness):
        return math.inf
    return fitness


def fitness_keys(values) -> Vector:
    """Vectorized :func:`fitness_key`: non-finite entries rank as +inf."""
    arr = np.asarray(values, dtype=float)
    return np.where(np.isfinite(arr), arr, np.inf)


@dataclass(frozen=True)
class SearchSpace:
    """Box-bounded continuous search domain.

    Parameters
    ----------
    lower, upper : array_like
        Per-dimension bounds. Must be finite, equal length, and satisfy
        ``lower[k] <= upper[k]`` everywhere. Zero-width dimensions are
        allowed and pin that coordinate.
    """

    lower: Vector
    upper: Vector

    def __post_init__(self):
        lower = as_vector(self.lower, name="lower bound")
        upper = as_vector(self.upper, dim=lower.size, name="upper bound")
        if lower.size < 1:
            raise ValueError("search space must have at least one dimension")
        if not (np.isfinite(lower).all() and np.isfinite(upper).all()):
            raise ValueError("search space bounds must be finite")
        if np.any(lower > upper):
            bad = int(np.argmax(lower > upper))
            raise ValueError(
                f"lower bound exceeds upper bound at dimension {bad}: "
                f"{lower[bad]} > {upper[bad]}"
            )
        lower.flags.writeable = False
        upper.flags.writeable = False
        object.__setattr__(self, "lower", lower)
        object.__setattr__(self, "upper", upper)

    @classmethod
    def from_box(cls, dim: int, lower: float, upper: float) -> "SearchSpace":
        """Build a cube with identical scalar bounds in every dimension."""
        if not isinstance(dim, (int, np.integer)) or dim < 1:
            raise ValueError(f"dimension must be a positive integer, got {dim!r}")
        return cls(np.full(dim, float(lower)), np.full(dim, float(upper)))

    @property
    def dim(self) -> int:
        return self.lower.size

    @property
    def width(self) -> Vector:
        return self.upper - self.lower

    def contains(self, position) -> bool:
        arr = np.asarray(position, dtype=float)
        return bool(np.all(arr >= self.lower) and np.all(arr <= self.upper))

    def sample(self, n: int, rng: "RandomSource") -> Vector:
        """Draw ``n`` uniform positions as an (n, dim) matrix."""
        u = rng.uniform((n, self.dim))
        return self.lower + self.width * u

    def sample_one(self, rng: "RandomSource") -> Vector:
        """Draw a single uniform position of length ``dim``."""
        return self.lower + self.width * rng.uniform(self.dim)


def clamp(position, space: SearchSpace) -> Vector:
    """Project a position (or an (n, dim) batch) onto the box.

    Components already inside the bounds are unchanged; the projection is
    idempotent.
    """
    arr = np.asarray(position, dtype=float)
    if arr.shape[-1] != space.dim:
        raise ValueError(
            f"position has dimension {arr.shape[-1]}, space has {space.dim}"
        )
    return np.clip(arr, space.lower, space.upper)


@dataclass
class Candidate:
    """A position in the search space with its fitness, once evaluated."""

    position: Vector
    fitness: float | None = None

    def copy(self) -> "Candidate":
        return Candidate(np.array(self.position, copy=True), self.fitness)


@dataclass(frozen=True)
class Objective:
    """Named minimization objective over real vectors.

    ``fn`` must be deterministic and total on finite inputs; non-finite
    return values are tolerated by the evaluation machinery and rank as
    worst rather than aborting a run.
    """

    name: str
    fn: Callable[[Vector], float]
    min_dim: int = 1

    def __call__(self, position) -> float:
        return self.fn(position)


def as_objective(fn) -> Objective:
    """Wrap a bare callable as an Objective, passing Objectives through."""
    if isinstance(fn, Objective):
        return fn
    if not callable(fn):
        raise TypeError(f"objective must be callable, got {type(fn).__name__}")
    return Objective(name=getattr(fn, "__name__", "objective"), fn=fn)


class Population:
    """Ordered candidate list plus an elitist best-ever archive.

    The archive is separate from the members: filtering or perturbing the
    population can never lose the best solution found, so best-so-far
    traces are non-increasing by construction.
    """

    def __init__(self, members: Sequence[Candidate], best_ever: Candidate | None = None):
        members = list(members)
        if not members:
            raise ValueError("population must have at least one member")
        dim = members[0].position.size
        for i, m in enumerate(members):
            if m.position.size != dim:
                raise ValueError(
                    f"member {i} has dimension {m.position.size}, expected {dim}"
                )
        self.members = members
        self.best_ever = best_ever

    def __len__(self) -> int:
        return len(self.members)

    @property
    def dim(self) -> int:
        return self.members[0].position.size

    def positions(self) -> Vector:
        """Stack member positions into an (n, dim) matrix (a copy)."""
        return np.stack([m.position for m in self.members]).astype(float)

    def fitness_values(self) -> Vector:
        """Member fitness as an array; unevaluated members appear as NaN."""
        return np.array(
            [math.nan if m.fitness is None else m.fitness for m in self.members]
        )

    def offer_best(self, candidate: Candidate) -> None:
        """Admit a candidate to the archive only on strict improvement.

        Ties keep the incumbent, so earlier finds win at equal fitness.
        """
        if self.best_ever is None or fitness_key(candidate.fitness) < fitness_key(
            self.best_ever.fitness
        ):
            self.best_ever = candidate.copy()


class RandomSource:
    """Seeded deterministic random stream.

    Same seed, same sequence of draws, bit-exact, with uniform, normal,
    and integer draws interleaving deterministically on one underlying
    stream. A source is single-owner: parallel work units each get their
    own seeded instance.
    """

    def __init__(self, seed: int):
        if not isinstance(seed, (int, np.integer)):
            raise TypeError(f"seed must be an integer, got {type(seed).__name__}")
        if not 0 <= int(seed) < 2**64:
            raise ValueError(f"seed must fit in 64 unsigned bits, got {seed}")
        self._seed = int(seed)
        self._gen = np.random.Generator(np.random.PCG64(self._seed))

    @property
    def seed(self) -> int:
        return self._seed

    def uniform(self, size=None):
        """Uniform draw(s) in [0, 1)."""
        if size is None:
            return float(self._gen.random())
        return self._gen.random(size)

    def standard_normal(self, size=None):
        if size is None:
            return float(self._gen.standard_normal())
        return self._gen.standard_normal(size)

    def integer(self, upper: int) -> int:
        """Uniform integer in [0, upper)."""
        return int(self._gen.integers(0, upper))

    def index_excluding(self, n: int, skip: int) -> int:
        """Uniform index in [0, n) excluding ``skip``; requires n >= 2."""
        if n < 2:
            raise ValueError("need at least two indices to exclude one")
        draw = self.integer(n - 1)
        return draw + 1 if draw >= skip else draw


def init_population(space: SearchSpace, n: int, rng: RandomSource) -> Population:
    """Uniformly sample ``n`` unevaluated candidates inside the box."""
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise ValueError(f"population size must be a positive integer, got {n!r}")
    rows = space.sample(int(n), rng)
    return Population([Candidate(rows[i]) for i in range(int(n))])


def evaluate_member(pop: Population, index: int, objective) -> float:
    """Evaluate one member in place and offer it to the archive."""
    obj = as_objective(objective)
    member = pop.members[index]
    try:
        value = float(obj(member.position))
    except EvaluationError:
        raise
    except Exception as exc:
        raise EvaluationError(
            f"objective '{obj.name}' failed on member {index}"
        ) from exc
    member.fitness = value
    pop.offer_best(member)
    return value


def evaluate(pop: Population, objective) -> int:
    """Evaluate every member fresh, in index order.

    Updates the best-ever archive (ties broken toward the lowest member
    index, and toward earlier calls at equal fitness) and returns the
    number of objective evaluations performed.
    """
    for index in range(len(pop)):
        evaluate_member(pop, index, objective)
    return len(pop)
