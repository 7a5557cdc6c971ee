"""Brute-force reference miners, used by the test-suite.

Everything here is computed from first principles: tidsets by scanning
transactions, distances by looping over pairs, statistics from the expanded
list of raw distances with :mod:`statistics`. No pruning, no shared code
with the fast path beyond the result types.
"""

from __future__ import annotations

import statistics
from collections import Counter
from itertools import combinations

from .balanceclat import BalancedPatternResult, MiningParams, sort_results
from .histogram import PatternStats, SuccessiveHistogram
from .stability import StabilityParams, StabilityScore, StablePatternResult
from .transactions import TransactionDatabase

MAX_UNIVERSE = 20


class UniverseTooLarge(ValueError):
    pass


def _itemsets(db: TransactionDatabase):
    universe = sorted({i for t in db for i in t})
    if len(universe) > MAX_UNIVERSE:
        raise UniverseTooLarge(f"{len(universe)} items; the oracle handles at most {MAX_UNIVERSE}")
    rows = [set(t) for t in db]
    for size in range(1, len(universe) + 1):
        for combo in combinations(universe, size):
            yield combo, [k for k, row in enumerate(rows) if row.issuperset(combo)]


def brute_all_pairs(positions, ell: int) -> Counter:
    c = Counter()
    for i in range(len(positions)):
        for j in range(i + 1, len(positions)):
            d = positions[j] - positions[i] - 1
            if d <= ell:
                c[d] += 1
    return c


def brute_successive(positions) -> list[int]:
    return [b - a - 1 for a, b in zip(positions, positions[1:])]


def brute_stats(dists: list[int], mindistfreq: int, maxstdev: float) -> tuple[float, float]:
    freq = Counter(dists)
    kept = [d for d in dists if freq[d] >= mindistfreq]
    if not kept:
        return 0.0, maxstdev + 1
    return float(statistics.fmean(kept)), float(statistics.pstdev(kept))


def oracle_balanced(db: TransactionDatabase, params: MiningParams) -> list[BalancedPatternResult]:
    out = []
    for items, pos in _itemsets(db):
        if len(pos) < 2:
            continue  # no pairs, t = 0 < minnumber
        t = max(brute_all_pairs(pos, params.ell).values(), default=0)
        dists = brute_successive(pos)
        avg, sd = brute_stats(dists, params.mindistfreq, params.maxstdev)
        if t >= params.minnumber and sd <= params.maxstdev and avg >= params.minavg:
            out.append(
                BalancedPatternResult(items, PatternStats(t, avg, sd, len(pos)), SuccessiveHistogram(dict(Counter(dists))))
            )
    return sort_results(out)


def brute_stability(positions, w: int) -> StabilityScore:
    triples, lefts, rights = 0, set(), set()
    for a, b, c in combinations(positions, 3):
        if abs((b - a - 1) - (c - b - 1)) <= 2 * w:
            triples += 1
            lefts.add(a)
            rights.add(c)
    return StabilityScore(triples, len(lefts), len(rights))


def oracle_stable(db: TransactionDatabase, params: StabilityParams) -> list[StablePatternResult]:
    out = []
    for items, pos in _itemsets(db):
        if not pos or len(pos) < params.minsup:
            continue
        score = brute_stability(pos, params.w)
        if score.value >= params.minstable:
            out.append(StablePatternResult(items, score, len(pos)))
    return sort_results(out)
