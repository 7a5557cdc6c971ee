"""Runtime sweeps: dataset size (minnumber tied to size) and minnumber."""

from __future__ import annotations

import csv
import statistics
import time
from dataclasses import dataclass, replace
from typing import Iterable, Sequence, TextIO

from .balanceclat import MiningParams, mine_balanced
from .datagen import GeneratorConfig, generate
from .transactions import TransactionDatabase

CSV_FIELDS = ("sweep_value", "wall_ms", "n_patterns")


@dataclass(frozen=True)
class BenchRow:
    sweep_value: float
    wall_ms: float
    n_patterns: int


def time_mining(db: TransactionDatabase, params: MiningParams, repeat: int = 1, threads: int = 1) -> tuple[float, int]:
    """Median wall-clock milliseconds over ``repeat`` runs, and pattern count."""
    if repeat < 1:
        raise ValueError("repeat must be >= 1")
    times = []
    n = 0
    for _ in range(repeat):
        t0 = time.perf_counter()
        n = len(mine_balanced(db, params, threads=threads))
        times.append((time.perf_counter() - t0) * 1000.0)
    return statistics.median(times), n


def minnumber_sweep(
    db: TransactionDatabase,
    minnumbers: Iterable[int],
    base: MiningParams,
    repeat: int = 1,
    threads: int = 1,
) -> list[BenchRow]:
    rows = []
    for mn in minnumbers:
        ms, n = time_mining(db, replace(base, minnumber=int(mn)), repeat, threads)
        rows.append(BenchRow(mn, ms, n))
    return rows


def size_sweep(
    sizes: Iterable[int],
    gen: GeneratorConfig,
    base: MiningParams,
    fraction: float = 0.1,
    repeat: int = 1,
    threads: int = 1,
) -> list[BenchRow]:
    """Generate a database per size and mine with minnumber = fraction * size."""
    rows = []
    for n in sizes:
        db = generate(replace(gen, n_transactions=int(n)))
        mn = max(1, round(fraction * n))
        ms, count = time_mining(db, replace(base, minnumber=mn), repeat, threads)
        rows.append(BenchRow(n, ms, count))
    return rows


def write_csv(rows: Sequence[BenchRow], stream: TextIO) -> None:
    writer = csv.writer(stream, lineterminator="\r\n")
    writer.writerow(CSV_FIELDS)
    for r in rows:
        value = int(r.sweep_value) if float(r.sweep_value).is_integer() else r.sweep_value
        writer.writerow([value, f"{r.wall_ms:.3f}", r.n_patterns])
