import math
import statistics
from collections import Counter

import numpy as np
import pytest
from hypothesis import given, strategies as st

from balanced_patterns.histogram import (
    AllPairsHistogram,
    SuccessiveHistogram,
    UndefinedStatsError,
    balance_value,
    build_histograms,
    pattern_stats,
    stats_plain,
    stats_restricted,
)


def brute_pairs(pos, ell):
    return Counter(b - a - 1 for i, a in enumerate(pos) for b in pos[i + 1:] if b - a - 1 <= ell)


def test_example2_item_a():
    allp, succ = build_histograms([0, 3, 6, 9], 10)
    assert allp.as_dict() == {2: 3, 5: 2, 8: 1}
    assert succ.as_dict() == {2: 3}
    assert len(allp.counts) == 11


def test_example2_pair():
    allp, succ = build_histograms([3, 6, 9], 10)
    assert allp.as_dict() == {2: 2, 5: 1}
    assert succ.as_dict() == {2: 2}


def test_singleton_tidset_is_empty():
    allp, succ = build_histograms([5], 10)
    assert allp.as_dict() == {} and succ.as_dict() == {}


def test_ell_caps_all_pairs_only():
    allp, succ = build_histograms([0, 20, 40], 10)
    assert allp.as_dict() == {}
    assert succ.as_dict() == {19: 2}


def test_bad_histogram_length():
    with pytest.raises(ValueError):
        AllPairsHistogram(np.zeros(3, dtype=np.int64), ell=10)


@pytest.mark.parametrize(
    "counts, expected",
    [({0: 0, 1: 5, 2: 200, 3: 30, 4: 199}, 200), ({}, 0), ({2: 3, 5: 2, 8: 1}, 3)],
)
def test_balance_value(counts, expected):
    assert balance_value(counts) == expected
    arr = np.zeros(11, dtype=np.int64)
    for d, c in counts.items():
        arr[d] = c
    assert balance_value(AllPairsHistogram(arr, 10)) == expected


@pytest.mark.parametrize(
    "hist, avg, sd",
    [({3: 4}, 3.0, 0.0), ({2: 2, 4: 2}, 3.0, 1.0), ({1: 4}, 1.0, 0.0)],
)
def test_stats_plain(hist, avg, sd):
    expanded = [d for d, c in hist.items() for _ in range(c)]
    # independent scalar route
    assert statistics.fmean(expanded) == pytest.approx(avg)
    assert statistics.pstdev(expanded) == pytest.approx(sd)
    got = stats_plain(SuccessiveHistogram(hist))
    assert got == pytest.approx((avg, sd), abs=1e-12)


def test_stats_plain_empty():
    with pytest.raises(UndefinedStatsError):
        stats_plain({})


def test_stats_restricted_examples():
    assert stats_restricted({3: 100, 9: 1}, 50, 2.5) == pytest.approx((3.0, 0.0))
    assert stats_restricted({3: 10}, 50, 1.0) == (0.0, 2.0)
    q = {2: 60, 4: 60}
    expanded = [d for d, c in q.items() for _ in range(c)]
    assert stats_restricted({2: 60, 4: 60, 9: 5}, 50, 1.0) == pytest.approx(
        (statistics.fmean(expanded), statistics.pstdev(expanded))
    )
    assert stats_restricted({2: 60, 4: 60, 9: 5}, 50, 1.0) == pytest.approx((3.0, 1.0))


def test_pattern_stats_undefined_case():
    stats, _, _ = pattern_stats([7], 10, maxstdev=1.5)
    assert (stats.avgdist, stats.stdev, stats.balance_value, stats.support) == (0.0, 2.5, 0, 1)


positions = st.lists(st.integers(0, 300), min_size=0, max_size=40, unique=True).map(sorted)
histograms = st.dictionaries(st.integers(0, 50), st.integers(1, 200), min_size=1, max_size=8)


@given(positions, st.integers(0, 25))
def test_all_pairs_matches_quadratic_loop(pos, ell):
    allp, succ = build_histograms(pos, ell)
    assert allp.as_dict() == dict(brute_pairs(pos, ell))
    assert succ.total == max(0, len(pos) - 1)
    assert balance_value(allp) <= math.comb(len(pos), 2)


@given(histograms)
def test_plain_stdev_is_population_stdev(hist):
    expanded = [d for d, c in hist.items() for _ in range(c)]
    avg, sd = stats_plain(hist)
    assert avg == pytest.approx(statistics.fmean(expanded), rel=1e-9, abs=1e-12)
    assert sd == pytest.approx(statistics.pstdev(expanded), rel=1e-9, abs=1e-9)


@given(histograms, st.floats(0, 10))
def test_restricted_with_mindistfreq_one_is_plain(hist, maxstdev):
    assert stats_restricted(hist, 1, maxstdev) == stats_plain(hist)


@given(positions, st.sets(st.integers(0, 39)), st.integers(0, 20))
def test_per_distance_anti_monotone(pos, drop, ell):
    sub = [p for i, p in enumerate(pos) if i not in drop]
    big, _ = build_histograms(pos, ell)
    small, _ = build_histograms(sub, ell)
    assert np.all(small.counts <= big.counts)
