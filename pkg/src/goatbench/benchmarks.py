"""Standard benchmark objectives with canonical ranges and known optima.

Six classic functions: three unimodal (sphere, schwefel_2_22, rosenbrock)
and three multimodal (rastrigin, ackley, griewank). All are minimization
problems with optimum 0; every function accepts any dimension, except
rosenbrock which needs at least two.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import Objective, SearchSpace, Vector, as_vector


def _check_arity(x: Vector, min_dim: int, name: str) -> Vector:
    x = as_vector(x, name=f"{name} input")
    if x.size < min_dim:
        raise ValueError(f"{name} requires dimension >= {min_dim}, got {x.size}")
    return x


def sphere(x) -> float:
    """Sum of squared coordinates."""
    x = _check_arity(x, 1, "sphere")
    return float(np.sum(x * x))


def schwefel_2_22(x) -> float:
    """Sum of absolute coordinates plus their product."""
    x = _check_arity(x, 1, "schwefel_2_22")
    a = np.abs(x)
    return float(np.sum(a) + np.prod(a))


def rosenbrock(x) -> float:
    """Banana-valley function, minimized at the all-ones point."""
    x = _check_arity(x, 2, "rosenbrock")
    return float(np.sum(100.0 * (x[1:] - x[:-1] ** 2) ** 2 + (1.0 - x[:-1]) ** 2))


def rastrigin(x) -> float:
    """Cosine-modulated sphere with a regular grid of local minima."""
    x = _check_arity(x, 1, "rastrigin")
    return float(10.0 * x.size + np.sum(x * x - 10.0 * np.cos(2.0 * np.pi * x)))


def ackley(x) -> float:
    """Exponential well over the root-mean-square and mean-cosine terms."""
    x = _check_arity(x, 1, "ackley")
    d = x.size
    rms = math.sqrt(float(np.sum(x * x)) / d)
    mean_cos = float(np.sum(np.cos(2.0 * np.pi * x))) / d
    return -20.0 * math.exp(-0.2 * rms) - math.exp(mean_cos) + 20.0 + math.e


def griewank(x) -> float:
    """Quadratic bowl minus a product of stretched cosines, plus one.

    The cosine of coordinate ``i`` is scaled by the square root of its
    1-based index.
    """
    x = _check_arity(x, 1, "griewank")
    idx = np.arange(1, x.size + 1, dtype=float)
    return float(np.sum(x * x) / 4000.0 - np.prod(np.cos(x / np.sqrt(idx))) + 1.0)


@dataclass(frozen=True)
class BenchmarkSpec:
    """A benchmark objective with its canonical box and known optimum."""

    name: str
    objective: Objective
    default_range: tuple[float, float]
    optimum_value: float
    minimizer_description: str
    minimizer_coordinate: float

    def minimizer(self, dim: int) -> Vector:
        """A global minimizer of the requested dimension."""
        if dim < self.objective.min_dim:
            raise ValueError(
                f"{self.name} requires dimension >= {self.objective.min_dim}"
            )
        return np.full(dim, self.minimizer_coordinate)

    def space(self, dim: int) -> SearchSpace:
        """The canonical search box of the requested dimension."""
        if dim < self.objective.min_dim:
            raise ValueError(
                f"{self.name} requires dimension >= {self.objective.min_dim}"
            )
        lo, hi = self.default_range
        return SearchSpace.from_box(dim, lo, hi)


def _spec(name, fn, rng_pair, minimizer_description, minimizer_coordinate, min_dim=1):
    return BenchmarkSpec(
        name=name,
        objective=Objective(name=name, fn=fn, min_dim=min_dim),
        default_range=rng_pair,
        optimum_value=0.0,
        minimizer_description=minimizer_description,
        minimizer_coordinate=minimizer_coordinate,
    )


REGISTRY: dict[str, BenchmarkSpec] = {
    spec.name: spec
    for spec in (
        _spec("sphere", sphere, (-100.0, 100.0), "all zeros", 0.0),
        _spec("schwefel_2_22", schwefel_2_22, (-10.0, 10.0), "all zeros", 0.0),
        _spec("rosenbrock", rosenbrock, (-30.0, 30.0), "all ones", 1.0, min_dim=2),
        _spec("rastrigin", rastrigin, (-5.12, 5.12), "all zeros", 0.0),
        _spec("ackley", ackley, (-32.0, 32.0), "all zeros", 0.0),
        _spec("griewank", griewank, (-600.0, 600.0), "all zeros", 0.0),
    )
}


def available() -> list[str]:
    """Registered benchmark names, in registry order."""
    return list(REGISTRY)


def lookup(name: str) -> BenchmarkSpec:
    """Fetch a benchmark by name; unknown names list the valid options."""
    try:
        return REGISTRY[name]
    except KeyError:
        valid = ", ".join(available())
        raise ValueError(f"unknown benchmark function {name!r}; valid: {valid}") from None
