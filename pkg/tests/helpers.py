"""Shared test utilities: independent oracles and instrumented objectives."""

from __future__ import annotations

import itertools
import math

import numpy as np


def doubled_midranks(pooled):
    """Midranks times two (always integers), computed independently."""
    pooled = list(pooled)
    n = len(pooled)
    order = sorted(range(n), key=lambda i: pooled[i])
    out = [0] * n
    i = 0
    while i < n:
        j = i
        while j + 1 < n and pooled[order[j + 1]] == pooled[order[i]]:
            j += 1
        for k in range(i, j + 1):
            out[order[k]] = i + j + 2  # twice the average of ranks i+1 .. j+1
        i = j + 1
    return out


def brute_force_rank_sum_p(a, b):
    """Two-sided rank-sum p-value by enumerating every rank assignment.

    Works in doubled-midrank integers throughout, so the tail comparison
    is exact. Cost is C(n1+n2, n1) subset sums; keep samples tiny.
    """
    a, b = list(a), list(b)
    n1, n = len(a), len(a) + len(b)
    doubled = doubled_midranks(a + b)
    observed = sum(doubled[:n1])
    center = n1 * (n + 1)  # twice the null mean of the rank sum
    observed_dev = abs(observed - center)
    extreme = 0
    total = 0
    for combo in itertools.combinations(range(n), n1):
        total += 1
        if abs(sum(doubled[i] for i in combo) - center) >= observed_dev:
            extreme += 1
    assert total == math.comb(n, n1)
    return extreme / total


class BoundsChecked:
    """Objective wrapper that asserts every evaluated position is in the box."""

    def __init__(self, fn, space):
        self.fn = fn
        self.space = space
        self.calls = 0
        self.__name__ = getattr(fn, "__name__", "checked")

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        assert np.all(x >= self.space.lower), f"below lower bound: {x}"
        assert np.all(x <= self.space.upper), f"above upper bound: {x}"
        self.calls += 1
        return self.fn(x)


class ScriptedNormals:
    """Stands in for RandomSource where only standard_normal is consumed."""

    def __init__(self, values):
        self.values = np.asarray(values, dtype=float)

    def standard_normal(self, size=None):
        if size is None:
            return float(self.values)
        return np.broadcast_to(self.values, size).astype(float).copy()
