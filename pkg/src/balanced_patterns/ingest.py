"""Turn timestamped events into an ordered database by fixed-width windows."""

from __future__ import annotations

import io
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional, TextIO

from .transactions import ParseError, TransactionDatabase


class Event(NamedTuple):
    timestamp: int
    item: int


@dataclass(frozen=True)
class BucketConfig:
    window_seconds: int = 1800
    start: Optional[int] = None

    def __post_init__(self):
        if self.window_seconds < 1:
            raise ValueError("window_seconds must be >= 1")


def bucket(events: Iterable[Event], config: BucketConfig = BucketConfig()) -> TransactionDatabase:
    """Group events into windows ``[start + k*w, start + (k+1)*w)``.

    Empty windows between the first and the last event are kept as empty
    transactions, so positional distances reflect elapsed windows. Without
    an explicit start, the earliest event is floored to a window boundary.
    """
    events = [Event(int(ts), int(item)) for ts, item in events]
    if not events:
        return TransactionDatabase()
    w = config.window_seconds
    first = min(e.timestamp for e in events)
    last = max(e.timestamp for e in events)
    if config.start is None:
        start = first - first % w
    else:
        start = config.start
        for e in events:
            if e.timestamp < start:
                raise ValueError(f"event {e} precedes window start {start}")
    n = -(-(last - start + 1) // w)
    rows: list[set[int]] = [set() for _ in range(n)]
    for ts, item in events:
        if ts < 0:
            raise ValueError(f"negative timestamp in event {(ts, item)}")
        if item < 0:
            raise ValueError(f"negative item id in event {(ts, item)}")
        rows[(ts - start) // w].add(item)
    return TransactionDatabase(rows)


def parse_events(stream: TextIO | str, names: Optional[dict[str, int]] = None) -> list[Event]:
    """Read ``<timestamp> <item>`` lines; blank lines are skipped.

    When ``names`` is given, item tokens are arbitrary string keys; ``names``
    is filled in place with the key -> id map from :func:`assign_ids`.
    Otherwise item tokens must be integers.
    """
    if isinstance(stream, str):
        stream = io.StringIO(stream)
    raw: list[tuple[int, str, int]] = []
    for lineno, line in enumerate(stream, start=1):
        parts = line.split()
        if not parts:
            continue
        if len(parts) != 2:
            raise ParseError(lineno, f"expected 'timestamp item', got {line.strip()!r}")
        try:
            ts = int(parts[0])
        except ValueError:
            raise ParseError(lineno, f"bad timestamp {parts[0]!r}") from None
        if ts < 0:
            raise ParseError(lineno, f"negative timestamp {ts}")
        raw.append((ts, parts[1], lineno))

    if names is not None:
        names.update(assign_ids(key for _, key, _ in raw))
        return [Event(ts, names[key]) for ts, key, _ in raw]

    events = []
    for ts, key, lineno in raw:
        try:
            item = int(key)
        except ValueError:
            raise ParseError(lineno, f"bad item id {key!r}") from None
        if item < 0:
            raise ParseError(lineno, f"negative item id {item}")
        events.append(Event(ts, item))
    return events


def assign_ids(keys: Iterable[str]) -> dict[str, int]:
    """Dense ids 0.. in sorted key order (independent of event order)."""
    return {key: i for i, key in enumerate(sorted(set(keys)))}
