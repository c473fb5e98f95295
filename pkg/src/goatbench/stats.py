"""Descriptive statistics and the two-sample Wilcoxon rank-sum test.

The rank-sum test is exact (full enumeration of rank assignments, valid
with ties via midranks) for pooled sizes up to 20, and switches to the
tie-corrected normal approximation with continuity correction above that.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class SampleSummary:
    """Count, minimum, mean, and sample standard deviation of one sample."""

    n: int
    best: float
    mean: float
    std: float


@dataclass(frozen=True)
class RankSumResult:
    """Rank-sum statistic of the first sample and its two-sided p-value.

    ``statistic`` is the sum of the first sample's midranks in the pooled
    ordering, W. The Mann-Whitney U statistic is the constant shift
    ``U = W - n1 * (n1 + 1) / 2``.
    """

    statistic: float
    p_value: float
    method: str  # "exact" | "normal_approx"
    n1: int
    n2: int


def summarize(values) -> SampleSummary:
    """Summary statistics with the n-1 standard deviation denominator.

    A single observation has standard deviation 0 by convention, and a
    constant sample reports exactly 0.
    """
    arr = np.asarray(values, dtype=float)
    if arr.ndim != 1 or arr.size == 0:
        raise ValueError("summarize needs a non-empty 1-D sample")
    n = int(arr.size)
    if n == 1 or bool(np.all(arr == arr[0])):
        std = 0.0
    else:
        std = float(arr.std(ddof=1))
    return SampleSummary(n=n, best=float(arr.min()), mean=float(arr.mean()), std=std)


def midranks(values) -> np.ndarray:
    """Ranks 1..n with tied values sharing the mean of their covered ranks."""
    arr = np.asarray(values, dtype=float)
    if arr.ndim != 1 or arr.size == 0:
        raise ValueError("midranks needs a non-empty 1-D sample")
    n = arr.size
    order = np.argsort(arr, kind="stable")
    ranks = np.empty(n, dtype=float)
    i = 0
    while i < n:
        j = i
        while j + 1 < n and arr[order[j + 1]] == arr[order[i]]:
            j += 1
        ranks[order[i : j + 1]] = (i + j) / 2.0 + 1.0
        i = j + 1
    return ranks


def _tie_group_sizes(pooled: np.ndarray) -> np.ndarray:
    _, counts = np.unique(pooled, return_counts=True)
    return counts


def _exact_p_value(ranks: np.ndarray, n1: int, statistic: float) -> float:
    """Two-sided p by counting all size-n1 rank assignments.

    Midranks are multiples of one half, so doubling them makes every
    subset sum an integer and the tail count exact. The p-value is the
    probability of a rank sum at least as far from its mean as observed.
    """
    doubled = np.rint(2.0 * ranks).astype(np.int64)
    n = doubled.size
    total = int(doubled.sum())
    # ways[j, s]: number of j-element subsets of the doubled ranks summing to s
    ways = np.zeros((n1 + 1, total + 1), dtype=np.int64)
    ways[0, 0] = 1
    for v in doubled:
        v = int(v)
        for j in range(n1, 0, -1):
            ways[j, v:] += ways[j - 1, : total + 1 - v]
    counts = ways[n1]
    doubled_mean = n1 * (n + 1)  # twice the null mean of the rank sum
    observed_dev = abs(int(round(2.0 * statistic)) - doubled_mean)
    sums = np.arange(total + 1, dtype=np.int64)
    extreme = int(counts[np.abs(sums - doubled_mean) >= observed_dev].sum())
    return extreme / math.comb(n, n1)


def _approx_p_value(
    pooled: np.ndarray, ranks: np.ndarray, n1: int, n2: int, statistic: float
) -> float:
    """Normal approximation with tie-corrected variance and 0.5 continuity."""
    n = n1 + n2
    mean = n1 * (n + 1) / 2.0
    ties = _tie_group_sizes(pooled)
    tie_term = float(np.sum(ties.astype(float) ** 3 - ties)) / (n * (n - 1))
    variance = n1 * n2 / 12.0 * ((n + 1) - tie_term)
    if variance <= 0.0:
        return 1.0
    z = (abs(statistic - mean) - 0.5) / math.sqrt(variance)
    if z < 0.0:
        z = 0.0
    return min(1.0, math.erfc(z / math.sqrt(2.0)))


def rank_sum_test(a, b, method: str = "auto") -> RankSumResult:
    """Two-sided Wilcoxon rank-sum test of two independent samples.

    Parameters
    ----------
    a, b : array_like
        Non-empty 1-D samples. The reported statistic is the pooled
        midrank sum of ``a``.
    method : {"auto", "exact", "normal_approx"}
        "auto" uses exact enumeration when the pooled size is at most 20
        and the tie-corrected normal approximation above that; the other
        values force one path (exact is combinatorial, so force it only
        on small samples).

    Returns
    -------
    RankSumResult
        The p-value is invariant to swapping the samples and to strictly
        increasing transforms of the pooled values.
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.ndim != 1 or a.size == 0 or b.ndim != 1 or b.size == 0:
        raise ValueError("rank_sum_test needs two non-empty 1-D samples")
    if method not in ("auto", "exact", "normal_approx"):
        raise ValueError(
            f"method must be 'auto', 'exact', or 'normal_approx', got {method!r}"
        )
    n1, n2 = int(a.size), int(b.size)
    pooled = np.concatenate([a, b])
    ranks = midranks(pooled)
    statistic = float(ranks[:n1].sum())
    if method == "auto":
        method = "exact" if n1 + n2 <= 20 else "normal_approx"
    if method == "exact":
        p = _exact_p_value(ranks, n1, statistic)
    else:
        p = _approx_p_value(pooled, ranks, n1, n2, statistic)
    return RankSumResult(statistic=statistic, p_value=p, method=method, n1=n1, n2=n2)
