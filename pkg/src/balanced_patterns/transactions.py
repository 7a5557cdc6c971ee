"""Ordered transaction databases and their line-per-transaction text format.

A database is a sequence of itemsets whose index is the time order. Every
distance in this package is measured in positions of the *original*
database, so tidsets always store original positions.
"""

from __future__ import annotations

import io
from typing import Iterable, Iterator, Sequence, TextIO

import numpy as np


class ParseError(ValueError):
    """Raised for a malformed transaction line."""

    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


Tidset = np.ndarray  # strictly increasing int64 positions, read-only


def make_tidset(positions: Iterable[int]) -> Tidset:
    arr = np.unique(np.fromiter(positions, dtype=np.int64))
    arr.setflags(write=False)
    return arr


class TransactionDatabase:
    """Immutable ordered sequence of transactions.

    Each transaction is stored as a tuple of distinct item ids in ascending
    order. Empty transactions are legal.
    """

    __slots__ = ("_transactions", "_vertical")

    def __init__(self, transactions: Iterable[Iterable[int]] = ()):
        rows = []
        for t in transactions:
            items = tuple(sorted({int(i) for i in t}))
            if items and items[0] < 0:
                raise ValueError(f"negative item id {items[0]}")
            rows.append(items)
        self._transactions: tuple[tuple[int, ...], ...] = tuple(rows)
        self._vertical: dict[int, Tidset] | None = None

    def __len__(self) -> int:
        return len(self._transactions)

    def __getitem__(self, k: int) -> tuple[int, ...]:
        return self._transactions[k]

    def __iter__(self) -> Iterator[tuple[int, ...]]:
        return iter(self._transactions)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TransactionDatabase):
            return NotImplemented
        return self._transactions == other._transactions

    def __hash__(self) -> int:
        return hash(self._transactions)

    def __repr__(self) -> str:
        return f"TransactionDatabase(n={len(self)}, items={len(self.items())})"

    @property
    def transactions(self) -> tuple[tuple[int, ...], ...]:
        return self._transactions

    def items(self) -> list[int]:
        """All item ids occurring somewhere, ascending."""
        return sorted(self.vertical())

    def vertical(self) -> dict[int, Tidset]:
        """Map item -> tidset of the singleton pattern (computed once)."""
        if self._vertical is None:
            acc: dict[int, list[int]] = {}
            for pos, t in enumerate(self._transactions):
                for item in t:
                    acc.setdefault(item, []).append(pos)
            vert = {}
            for item, plist in acc.items():
                arr = np.asarray(plist, dtype=np.int64)
                arr.setflags(write=False)
                vert[item] = arr
            self._vertical = vert
        return self._vertical

    def reversed(self) -> "TransactionDatabase":
        return TransactionDatabase(self._transactions[::-1])


def distance(a: int, b: int) -> int:
    """Number of transactions strictly between positions ``a`` and ``b``."""
    if a >= b:
        raise ValueError(f"distance requires a < b, got a={a}, b={b}")
    return b - a - 1


def tidset_of(db: TransactionDatabase, pattern: Iterable[int]) -> Tidset:
    """Positions of the transactions containing every item of ``pattern``."""
    pattern = sorted(set(pattern))
    if not pattern:
        return make_tidset(range(len(db)))
    vert = db.vertical()
    tids = vert.get(pattern[0])
    if tids is None:
        return make_tidset(())
    for item in pattern[1:]:
        other = vert.get(item)
        if other is None:
            return make_tidset(())
        tids = np.intersect1d(tids, other, assume_unique=True)
    tids = np.asarray(tids, dtype=np.int64)
    tids.setflags(write=False)
    return tids


def parse_database(stream: TextIO | str) -> TransactionDatabase:
    """Read one transaction per line of whitespace-separated item ids.

    A blank line is an empty transaction. ``stream`` may also be a string.
    """
    if isinstance(stream, str):
        stream = io.StringIO(stream)
    rows = []
    for lineno, line in enumerate(stream, start=1):
        items = []
        for tok in line.split():
            try:
                value = int(tok)
            except ValueError:
                raise ParseError(lineno, f"not an integer item: {tok!r}") from None
            if value < 0:
                raise ParseError(lineno, f"negative item id: {value}")
            items.append(value)
        rows.append(items)
    return TransactionDatabase(rows)


def format_database(db: TransactionDatabase) -> str:
    return "".join(" ".join(map(str, t)) + "\n" for t in db)


def write_database(db: TransactionDatabase, stream: TextIO) -> None:
    stream.write(format_database(db))


def read_database(path) -> TransactionDatabase:
    with open(path, encoding="utf-8") as fh:
        return parse_database(fh)


def save_database(db: TransactionDatabase, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        write_database(db, fh)


def from_letters(rows: Sequence[str]) -> TransactionDatabase:
    """Build a database from letter itemsets, A -> 1, B -> 2, ...

    Handy for the small textbook-style examples.
    """
    return TransactionDatabase([[ord(c) - ord("A") + 1 for c in row if c.isalpha()] for row in rows])
