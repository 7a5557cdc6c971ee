"""Distance histograms of a tidset and the statistics derived from them.

Two histograms are kept per pattern:

* the all-pairs histogram counts every pair of occurrences whose distance is
  at most ``ell``; its largest bin is the *balance value* used for pruning;
* the successive histogram counts distances between consecutive occurrences
  only, with no cap, and feeds the average / standard deviation filters.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Mapping

import numpy as np


class UndefinedStatsError(ValueError):
    """Statistics requested for a histogram with no entries."""


@dataclass(frozen=True)
class AllPairsHistogram:
    counts: np.ndarray  # length ell + 1
    ell: int

    def __post_init__(self):
        if len(self.counts) != self.ell + 1:
            raise ValueError("all-pairs histogram must have ell + 1 bins")

    def as_dict(self) -> dict[int, int]:
        """Non-zero bins only."""
        return {int(d): int(c) for d, c in enumerate(self.counts) if c}


@dataclass(frozen=True)
class SuccessiveHistogram:
    counts: Mapping[int, int] = field(default_factory=dict)  # distance -> count > 0

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def as_dict(self) -> dict[int, int]:
        return dict(sorted(self.counts.items()))


@dataclass(frozen=True)
class PatternStats:
    balance_value: int
    avgdist: float
    stdev: float
    support: int


def all_pairs_counts(tids: np.ndarray, ell: int) -> np.ndarray:
    """Count occurrence pairs by distance, for distances ``0..ell``.

    Pairs are visited by rank offset k = 1, 2, ...; since positions are
    strictly increasing, ``pos[i+k] - pos[i] >= k`` and once every pair at
    offset k is beyond ``ell`` no larger offset can contribute.
    """
    if ell < 0:
        raise ValueError("ell must be >= 0")
    tids = np.asarray(tids, dtype=np.int64)
    counts = np.zeros(ell + 1, dtype=np.int64)
    m = len(tids)
    for k in range(1, m):
        d = tids[k:] - tids[:-k] - 1
        d = d[d <= ell]
        if d.size == 0:
            break
        counts += np.bincount(d, minlength=ell + 1)
    return counts


def successive_counts(tids: np.ndarray) -> dict[int, int]:
    tids = np.asarray(tids, dtype=np.int64)
    if len(tids) < 2:
        return {}
    gaps = np.diff(tids) - 1
    values, counts = np.unique(gaps, return_counts=True)
    return {int(v): int(c) for v, c in zip(values, counts)}


def build_histograms(tids: np.ndarray, ell: int) -> tuple[AllPairsHistogram, SuccessiveHistogram]:
    return (
        AllPairsHistogram(all_pairs_counts(tids, ell), ell),
        SuccessiveHistogram(successive_counts(tids)),
    )


def balance_value(h: AllPairsHistogram | np.ndarray | Mapping[int, int]) -> int:
    """Largest bin of an all-pairs histogram (0 when empty)."""
    if isinstance(h, AllPairsHistogram):
        h = h.counts
    if isinstance(h, Mapping):
        return max(h.values(), default=0)
    return int(h.max()) if len(h) else 0


def _weighted_mean_std(bins: Mapping[int, int]) -> tuple[float, float]:
    # Counts and distances are integers, so the first pass is exact up to
    # the final division.
    total = sum(bins.values())
    avg = sum(d * c for d, c in bins.items()) / total
    var = sum((avg - d) ** 2 * c for d, c in bins.items()) / total
    return avg, math.sqrt(var)


def _counts(s: SuccessiveHistogram | Mapping[int, int]) -> Mapping[int, int]:
    return s.counts if isinstance(s, SuccessiveHistogram) else s


def stats_plain(s: SuccessiveHistogram | Mapping[int, int]) -> tuple[float, float]:
    """Average and population standard deviation of successive distances.

    Raises
    ------
    UndefinedStatsError
        If the histogram holds no distances (fewer than two occurrences).
    """
    bins = {d: c for d, c in _counts(s).items() if c}
    if not bins:
        raise UndefinedStatsError("no successive distances")
    return _weighted_mean_std(bins)


def stats_restricted(
    s: SuccessiveHistogram | Mapping[int, int], mindistfreq: int, maxstdev: float
) -> tuple[float, float]:
    """Average and stdev over frequent bins only (count >= ``mindistfreq``).

    If no bin is frequent the result is ``(0.0, maxstdev + 1)``, which fails
    both the stdev and any positive average filter.
    """
    if mindistfreq < 1:
        raise ValueError("mindistfreq must be >= 1")
    q = {d: c for d, c in _counts(s).items() if c >= mindistfreq}
    if not q:
        return 0.0, maxstdev + 1
    return _weighted_mean_std(q)


def pattern_stats(
    tids: np.ndarray, ell: int, mindistfreq: int = 1, maxstdev: float = 0.0
) -> tuple[PatternStats, AllPairsHistogram, SuccessiveHistogram]:
    """Score one tidset.

    Patterns with fewer than two occurrences get ``avgdist = 0`` and
    ``stdev = maxstdev + 1`` so that they are never reported as balanced.
    """
    allp, succ = build_histograms(tids, ell)
    if len(tids) < 2:
        avg, sd = 0.0, maxstdev + 1
    else:
        avg, sd = stats_restricted(succ, mindistfreq, maxstdev)
    return PatternStats(balance_value(allp), avg, sd, len(tids)), allp, succ
