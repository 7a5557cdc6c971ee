"""Depth-first balanced pattern miner (Eclat-style tidset growth).

The search prunes on the balance value only, which is anti-monotone: a
superset never has more pairs at any particular distance. The stdev and
average-distance thresholds are applied when deciding whether to *report*
a node, never to cut a branch, since neither is anti-monotone.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable, Optional, Sequence

import numpy as np

from .histogram import (
    PatternStats,
    SuccessiveHistogram,
    all_pairs_counts,
    stats_restricted,
    successive_counts,
)
from .transactions import TransactionDatabase, Tidset


@dataclass(frozen=True)
class MiningParams:
    """Thresholds for balanced pattern mining.

    ``minnumber`` is the pruning threshold on the balance value, ``ell`` the
    largest distance tracked in the all-pairs histogram. ``mindistfreq = 1``
    gives statistics over all successive distances.
    """

    minnumber: int
    maxstdev: float
    minavg: float
    ell: int = 10
    mindistfreq: int = 1
    max_pattern_size: Optional[int] = None

    def __post_init__(self):
        if self.minnumber < 1:
            raise ValueError("minnumber must be >= 1")
        if not self.maxstdev >= 0:
            raise ValueError("maxstdev must be >= 0")
        if not self.minavg >= 0:
            raise ValueError("minavg must be >= 0")
        if self.ell < 0:
            raise ValueError("ell must be >= 0")
        if self.mindistfreq < 1:
            raise ValueError("mindistfreq must be >= 1")
        if self.max_pattern_size is not None and self.max_pattern_size < 1:
            raise ValueError("max_pattern_size must be >= 1")


@dataclass(frozen=True)
class BalancedPatternResult:
    items: tuple[int, ...]
    stats: PatternStats
    succ_histogram: SuccessiveHistogram

    @property
    def balance_value(self) -> int:
        return self.stats.balance_value

    @property
    def support(self) -> int:
        return self.stats.support


def sort_results(results: Iterable) -> list:
    """Descending score, ties by ascending item tuple."""
    return sorted(results, key=lambda r: (-_score(r), r.items))


def _score(r) -> int:
    return r.stats.balance_value if isinstance(r, BalancedPatternResult) else r.score.value


def is_balanced(stats: PatternStats, params: MiningParams) -> bool:
    return (
        stats.balance_value >= params.minnumber
        and stats.stdev <= params.maxstdev
        and stats.avgdist >= params.minavg
    )


# A search node: (item, tidset, balance value of prefix + item).
_Ext = tuple[int, Tidset, int]

Visitor = Callable[[tuple[int, ...], int], None]


def _evaluate(items, tids, t, params) -> Optional[BalancedPatternResult]:
    succ = successive_counts(tids)
    if len(tids) < 2:
        avg, sd = 0.0, params.maxstdev + 1
    else:
        avg, sd = stats_restricted(succ, params.mindistfreq, params.maxstdev)
    stats = PatternStats(t, avg, sd, len(tids))
    if is_balanced(stats, params):
        return BalancedPatternResult(items, stats, SuccessiveHistogram(succ))
    return None


def _extend(tids: Tidset, candidates: Iterable[tuple[int, Tidset]], params: MiningParams) -> list[_Ext]:
    out = []
    for item, other in candidates:
        inter = np.intersect1d(tids, other, assume_unique=True)
        if len(inter) < 2:
            continue
        t = int(all_pairs_counts(inter, params.ell).max())
        if t >= params.minnumber:
            out.append((item, inter, t))
    return out


def _grow_one(prefix, exts: Sequence[_Ext], i, params, out, visit):
    item, tids, t = exts[i]
    items = prefix + (item,)
    if visit is not None:
        visit(items, t)
    res = _evaluate(items, tids, t, params)
    if res is not None:
        out.append(res)
    if params.max_pattern_size is not None and len(items) >= params.max_pattern_size:
        return
    children = _extend(tids, ((e, s) for e, s, _ in exts[i + 1:]), params)
    if children:
        _grow(items, children, params, out, visit)


def _grow(prefix, exts: Sequence[_Ext], params, out, visit=None):
    for i in range(len(exts)):
        _grow_one(prefix, exts, i, params, out, visit)


def _first_level(db: TransactionDatabase, params: MiningParams) -> list[_Ext]:
    exts = []
    for item, tids in sorted(db.vertical().items()):
        if len(tids) < 2:
            continue
        t = int(all_pairs_counts(tids, params.ell).max())
        if t >= params.minnumber:
            exts.append((item, tids, t))
    return exts


def _branch_worker(args):
    exts, i, params = args
    out: list[BalancedPatternResult] = []
    _grow_one((), exts, i, params, out, None)
    return out


def grow(
    db: TransactionDatabase,
    prefix: Sequence[int],
    tids: Tidset,
    candidates: Iterable[int],
    params: MiningParams,
    visit: Optional[Visitor] = None,
) -> list[BalancedPatternResult]:
    """Mine all balanced extensions of ``prefix`` by items from ``candidates``.

    ``tids`` must be the tidset of ``prefix``. Every candidate is intersected
    with it and pruned on the balance value before recursing; distances are
    always taken from original database positions.
    """
    prefix = tuple(prefix)
    last = prefix[-1] if prefix else -1
    vert = db.vertical()
    cands = [(e, vert[e]) for e in sorted(set(candidates)) if e > last and e in vert]
    out: list[BalancedPatternResult] = []
    if params.max_pattern_size is not None and len(prefix) >= params.max_pattern_size:
        return out
    exts = _extend(np.asarray(tids, dtype=np.int64), cands, params)
    _grow(prefix, exts, params, out, visit)
    return sort_results(out)


def mine_balanced(
    db: TransactionDatabase,
    params: MiningParams,
    threads: int = 1,
    visit: Optional[Visitor] = None,
) -> list[BalancedPatternResult]:
    """Find every balanced itemset of ``db``.

    Parameters
    ----------
    threads
        Number of worker processes for independent first-level branches.
        ``1`` runs in-process. The output order does not depend on it.
    visit
        Optional callback ``visit(items, t)`` invoked for every search node
        that survived pruning (single-process mode only).
    """
    exts = _first_level(db, params)
    out: list[BalancedPatternResult] = []
    if threads <= 1 or len(exts) < 2:
        _grow((), exts, params, out, visit)
    else:
        if visit is not None:
            raise ValueError("visit callbacks need threads=1")
        with ProcessPoolExecutor(max_workers=threads) as pool:
            jobs = [(exts, i, params) for i in range(len(exts))]
            for part in pool.map(_branch_worker, jobs):
                out.extend(part)
    return sort_results(out)
