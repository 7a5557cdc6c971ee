"""Synthetic databases: planted periodic pattern with dropout noise, and
uniform random databases for fuzzing.

Randomness comes from ``numpy.random.default_rng(seed)`` (PCG64), whose
stream is stable across platforms for a fixed numpy major version.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .transactions import TransactionDatabase


@dataclass(frozen=True)
class GeneratorConfig:
    n_transactions: int = 2000
    n_items: int = 200
    pattern_size: int = 5
    period: int = 4
    noise_percent: float = 0.0
    background_density: float = 0.0
    seed: int = 0

    def __post_init__(self):
        if self.n_transactions < 0:
            raise ValueError("n_transactions must be >= 0")
        if not 1 <= self.pattern_size <= self.n_items:
            raise ValueError("need 1 <= pattern_size <= n_items")
        if self.period < 1:
            raise ValueError("period must be >= 1")
        if not 0.0 <= self.noise_percent <= 100.0:
            raise ValueError("noise_percent must be in [0, 100]")
        if not 0.0 <= self.background_density <= 1.0:
            raise ValueError("background_density must be in [0, 1]")

    @property
    def pattern(self) -> tuple[int, ...]:
        """Planted item ids, 1..pattern_size."""
        return tuple(range(1, self.pattern_size + 1))


def generate(config: GeneratorConfig) -> TransactionDatabase:
    """Plant items ``1..pattern_size`` every ``period`` transactions.

    Scheduled occurrences sit at positions ``period-1, 2*period-1, ...``;
    each planted item is dropped independently with probability
    ``noise_percent / 100``. Items ``pattern_size+1..n_items`` appear in
    every transaction independently with probability ``background_density``.
    """
    rng = np.random.default_rng(config.seed)
    n = config.n_transactions
    k = config.pattern_size
    mask = np.zeros((n, config.n_items), dtype=bool)

    slots = np.arange(config.period - 1, n, config.period)
    keep = rng.random((len(slots), k)) >= config.noise_percent / 100.0
    mask[slots, :k] = keep

    n_bg = config.n_items - k
    if n_bg and config.background_density > 0:
        mask[:, k:] = rng.random((n, n_bg)) < config.background_density

    ids = np.arange(1, config.n_items + 1)
    return TransactionDatabase(ids[row].tolist() for row in mask)


def generate_random(n_transactions: int, n_items: int, density: float, seed: int) -> TransactionDatabase:
    """Each of items ``0..n_items-1`` in each transaction with prob ``density``."""
    if not 0.0 <= density <= 1.0:
        raise ValueError("density must be in [0, 1]")
    rng = np.random.default_rng(seed)
    mask = rng.random((n_transactions, n_items)) < density
    ids = np.arange(n_items)
    return TransactionDatabase(ids[row].tolist() for row in mask)
