"""Reference metaheuristics used as comparison points in the benchmark suite.

Each baseline is a :class:`~goatbench.base.BaseOptimizer` with the
textbook update rules and widely used default coefficients, so results
against them reflect algorithm behaviour rather than tuning effort.
"""

from .abc_colony import ArtificialBeeColony
from .ga import GeneticAlgorithm
from .gwo import GreyWolfOptimizer
from .pso import ParticleSwarmOptimizer
from .random_search import RandomSearch
from .woa import WhaleOptimizer

__all__ = [
    "ArtificialBeeColony",
    "GeneticAlgorithm",
    "GreyWolfOptimizer",
    "ParticleSwarmOptimizer",
    "RandomSearch",
    "WhaleOptimizer",
]
