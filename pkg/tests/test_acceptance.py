"""Exit criteria for the package, one test per criterion.

Each test prints a PASS/FAIL line; the terminal summary collects them.
"""

import math
import statistics
import time
from itertools import combinations

import numpy as np
import pytest

from balanced_patterns.balanceclat import MiningParams, mine_balanced
from balanced_patterns.bench import minnumber_sweep
from balanced_patterns.datagen import GeneratorConfig, generate
from balanced_patterns.histogram import balance_value, build_histograms, stats_plain, stats_restricted
from balanced_patterns.ingest import BucketConfig, Event, bucket
from balanced_patterns.oracle import oracle_balanced, oracle_stable
from balanced_patterns.stability import mine_stable, stability_value
from balanced_patterns.transactions import tidset_of

from conftest import A, B
from fuzz import corpus, key

PLANTED = frozenset(range(1, 6))
NOISE_PARAMS = MiningParams(minnumber=150, maxstdev=2.5, minavg=2.0, ell=10)
SEEDS = range(20)


def planted_found(noise, seed, params=NOISE_PARAMS):
    db = generate(GeneratorConfig(noise_percent=noise, background_density=0.0, seed=seed))
    return [r.items for r in mine_balanced(db, params) if set(r.items) <= PLANTED]


def test_1_worked_stability_values(criterion, ex1, ex1_modified):
    with criterion("1 worked stability values 10 and 8"):
        t0 = time.perf_counter()
        assert stability_value(tidset_of(ex1, [A, B]), 0).value == 10
        assert stability_value(tidset_of(ex1_modified, [A, B]), 0).value == 8
        assert time.perf_counter() - t0 < 0.1


def test_2_balance_value(criterion):
    with criterion("2 balance value of the example table is 200"):
        assert balance_value({0: 0, 1: 5, 2: 200, 3: 30, 4: 199}) == 200


def test_3_example2_histograms(criterion):
    with criterion("3 Example 2 all-pairs histograms"):
        assert build_histograms([0, 3, 6, 9], 10)[0].as_dict() == {2: 3, 5: 2, 8: 1}
        assert build_histograms([3, 6, 9], 10)[0].as_dict() == {2: 2, 5: 1}


def test_4_thirty_one_patterns(criterion):
    with criterion("4 noise-free planted pattern yields exactly its 31 subsets"):
        t0 = time.perf_counter()
        db = generate(GeneratorConfig(n_transactions=2000, n_items=200, pattern_size=5, period=4,
                                      noise_percent=0, background_density=0))
        found = {r.items for r in mine_balanced(db, NOISE_PARAMS)}
        expected = {c for k in range(1, 6) for c in combinations(sorted(PLANTED), k)}
        assert found == expected and len(found) == 31
        assert time.perf_counter() - t0 < 10.0


@pytest.mark.slow
def test_5_noise_monotonicity(criterion):
    with criterion("5 planted patterns found is non-increasing in noise"):
        levels = [0, 5, 10, 15, 20, 25, 30]
        found = {lvl: [planted_found(lvl, s) for s in SEEDS] for lvl in levels}
        means = [statistics.fmean(len(f) for f in found[lvl]) for lvl in levels]
        print("mean planted patterns per noise level:", dict(zip(levels, means)))
        rises = [b - a for a, b in zip(means, means[1:]) if b > a]
        assert len(rises) <= 1 and all(r <= 1 for r in rises), means
        assert means[0] == 31
        singletons = {(i,) for i in PLANTED}
        for lvl in levels:
            if lvl <= 10:
                assert all(singletons <= set(f) for f in found[lvl]), lvl


@pytest.mark.slow
def test_6_mindistfreq_effect(criterion):
    with criterion("6 mindistfreq=50 finds at least as many planted patterns at 20% noise"):
        restricted = MiningParams(minnumber=150, maxstdev=2.5, minavg=2.0, ell=10, mindistfreq=50)
        plain = statistics.fmean(len(planted_found(20, s)) for s in SEEDS)
        freq = statistics.fmean(len(planted_found(20, s, restricted)) for s in SEEDS)
        print(f"noise 20%: mindistfreq=1 -> {plain}, mindistfreq=50 -> {freq}")
        assert freq >= plain


@pytest.mark.slow
def test_7_oracle_equivalence(criterion):
    with criterion("7 miners equal brute-force oracles on 100 random databases"):
        n = 0
        for db, bal, stab in corpus(100):
            assert len(db) <= 60 and len(db.items()) <= 12
            assert key(mine_balanced(db, bal)) == key(oracle_balanced(db, bal))
            fast = mine_stable(db, stab)
            slow = oracle_stable(db, stab)
            assert [(r.items, r.score, r.support) for r in fast] == [(r.items, r.score, r.support) for r in slow]
            n += 1
        assert n >= 100


@pytest.mark.slow
def test_8_anti_monotonicity(criterion):
    """Checked on every covering pair q = p + {x}; longer chains follow by
    transitivity of <=."""
    with criterion("8 per-distance counts and stability are anti-monotone"):
        violations = 0
        for db, bal, stab in corpus(100):
            rows = [set(t) for t in db]
            observed = set()
            for t in db:
                for k in range(1, len(t) + 1):
                    observed.update(combinations(t, k))
            cache = {}

            def score(items):
                if items not in cache:
                    tids = tidset_of(db, items)
                    cache[items] = (build_histograms(tids, bal.ell)[0].counts, stability_value(tids, stab.w).value)
                return cache[items]

            for q in observed:
                if len(q) < 2:
                    continue
                cq, sq = score(q)
                for p in combinations(q, len(q) - 1):
                    cp, sp = score(p)
                    violations += int(np.any(cq > cp)) + int(sq > sp)
        assert violations == 0


def test_9_statistics(criterion):
    with criterion("9 plain / restricted stdev against the expanded multiset"):
        rng = np.random.default_rng(9)
        for _ in range(500):
            bins = rng.choice(60, size=int(rng.integers(1, 8)), replace=False)
            hist = {int(d): int(rng.integers(1, 300)) for d in bins}
            expanded = [d for d, c in hist.items() for _ in range(c)]
            avg, sd = stats_plain(hist)
            assert math.isclose(avg, statistics.fmean(expanded), rel_tol=1e-9, abs_tol=1e-12)
            assert math.isclose(sd, statistics.pstdev(expanded), rel_tol=1e-9, abs_tol=1e-12)
            assert stats_restricted(hist, 1, 2.0) == (avg, sd)
            maxstdev = float(rng.uniform(0, 5))
            assert stats_restricted(hist, max(hist.values()) + 1, maxstdev) == (0.0, maxstdev + 1)


@pytest.mark.slow
def test_10_minnumber_runtime_trend(criterion):
    with criterion("10 runtime non-increasing over a minnumber sweep (20% jitter)"):
        db = generate(GeneratorConfig(n_transactions=1488, background_density=0.05, seed=0))
        base = MiningParams(minnumber=1, maxstdev=1.0, minavg=2.0, ell=10)
        rows = minnumber_sweep(db, [1, 2, 4, 6, 8, 10], base, repeat=5)
        ms = [r.wall_ms for r in rows]
        print("minnumber sweep wall_ms:", [f"{r.sweep_value}:{r.wall_ms:.1f}" for r in rows])
        assert all(b <= 1.2 * a for a, b in zip(ms, ms[1:])), ms


def test_11_bucketing_scale(criterion):
    with criterion("11 31 days of half-hour windows give 1488 transactions"):
        rng = np.random.default_rng(31)
        events = [Event(k * 1800 + int(rng.integers(0, 1800)), int(rng.integers(0, 50))) for k in range(31 * 48)]
        assert len(bucket(events, BucketConfig(window_seconds=1800))) == 1488
