"""Name-based construction of optimizers for the harness and CLI."""

from __future__ import annotations

from .baselines import (
    ArtificialBeeColony,
    GeneticAlgorithm,
    GreyWolfOptimizer,
    ParticleSwarmOptimizer,
    RandomSearch,
    WhaleOptimizer,
)
from .goa import GoatOptimizer

ALGORITHMS = {
    "goa": GoatOptimizer,
    "pso": ParticleSwarmOptimizer,
    "gwo": GreyWolfOptimizer,
    "ga": GeneticAlgorithm,
    "woa": WhaleOptimizer,
    "abc": ArtificialBeeColony,
    "random_search": RandomSearch,
}


def available() -> list[str]:
    """Registered algorithm identifiers, in registration order."""
    return list(ALGORITHMS)


def make_optimizer(algorithm: str, **params):
    """Instantiate a registered algorithm with parameter overrides.

    Unknown identifiers and unknown parameter names both raise
    ``ValueError`` listing the valid choices.
    """
    if algorithm not in ALGORITHMS:
        raise ValueError(
            f"unknown algorithm {algorithm!r}; choose from {', '.join(available())}"
        )
    optimizer = ALGORITHMS[algorithm]()
    if params:
        optimizer.set_params(**params)
    return optimizer
