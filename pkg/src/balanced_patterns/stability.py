"""Stable-pattern baseline: w-good triple counting and the stability value.

A triple of occurrences ``L < M < R`` is w-good when the distances L-M and
M-R differ by at most ``2*w``. With distance ``b - a - 1`` that difference
is ``2*M - L - R``, so for a fixed pair (L, R) the admissible middles form a
contiguous window of positions around the midpoint.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional

import numpy as np

from .transactions import TransactionDatabase, Tidset


@dataclass(frozen=True)
class StabilityParams:
    w: int = 0
    minstable: int = 1
    minsup: int = 1

    def __post_init__(self):
        if self.w < 0:
            raise ValueError("w must be >= 0")
        if self.minstable < 0:
            raise ValueError("minstable must be >= 0")
        if self.minsup < 1:
            raise ValueError("minsup must be >= 1")


@dataclass(frozen=True)
class StabilityScore:
    triples: int
    left_endpoints: int
    right_endpoints: int

    @property
    def value(self) -> int:
        return self.triples + self.left_endpoints + self.right_endpoints


class StablePatternResult(NamedTuple):
    items: tuple[int, ...]
    score: StabilityScore
    support: int


def stability_value(tids: Tidset, w: int = 0) -> StabilityScore:
    """Count w-good triples and their distinct left/right endpoints.

    O(m^2 log m) in the support m: for every (L, R) pair the number of valid
    middles is found by binary search.
    """
    if w < 0:
        raise ValueError("w must be >= 0")
    p = np.asarray(tids, dtype=np.int64)
    m = len(p)
    if m < 3:
        return StabilityScore(0, 0, 0)
    li, ri = np.triu_indices(m, k=2)
    s = p[li] + p[ri]
    # 2M in [s - 2w, s + 2w]  <=>  M in [ceil((s-2w)/2), floor((s+2w)/2)]
    lo_pos = -((2 * w - s) // 2)
    hi_pos = (s + 2 * w) // 2
    lo = np.maximum(np.searchsorted(p, lo_pos, side="left"), li + 1)
    hi = np.minimum(np.searchsorted(p, hi_pos, side="right"), ri)
    n_mid = np.maximum(hi - lo, 0)
    good = n_mid > 0
    return StabilityScore(
        int(n_mid.sum()),
        len(np.unique(li[good])),
        len(np.unique(ri[good])),
    )


def stability_value_naive(tids: Tidset, w: int = 0) -> StabilityScore:
    """Cubic reference scan over all ordered triples."""
    p = [int(x) for x in tids]
    triples = 0
    lefts, rights = set(), set()
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            for k in range(j + 1, len(p)):
                d_lm = p[j] - p[i] - 1
                d_mr = p[k] - p[j] - 1
                if abs(d_lm - d_mr) <= 2 * w:
                    triples += 1
                    lefts.add(p[i])
                    rights.add(p[k])
    return StabilityScore(triples, len(lefts), len(rights))


def _sort(results):
    return sorted(results, key=lambda r: (-r.score.value, r.items))


def mine_stable(
    db: TransactionDatabase,
    params: StabilityParams,
    max_pattern_size: Optional[int] = None,
) -> list[StablePatternResult]:
    """Depth-first search for itemsets with enough support and stability.

    Both support and stability value are anti-monotone, so a branch is cut
    as soon as either falls below its threshold.
    """

    def passes(tids):
        if len(tids) < params.minsup:
            return None
        score = stability_value(tids, params.w)
        return score if score.value >= params.minstable else None

    out: list[StablePatternResult] = []

    def grow(prefix, exts):
        for i, (item, tids, score) in enumerate(exts):
            items = prefix + (item,)
            out.append(StablePatternResult(items, score, len(tids)))
            if max_pattern_size is not None and len(items) >= max_pattern_size:
                continue
            children = []
            for other, otids, _ in exts[i + 1:]:
                inter = np.intersect1d(tids, otids, assume_unique=True)
                sc = passes(inter)
                if sc is not None:
                    children.append((other, inter, sc))
            if children:
                grow(items, children)

    first = []
    for item, tids in sorted(db.vertical().items()):
        sc = passes(tids)
        if sc is not None:
            first.append((item, tids, sc))
    grow((), first)
    return _sort(out)
