"""Text and CSV reports for mining results."""

from __future__ import annotations

import csv
from typing import Mapping, Optional, Sequence, TextIO

from .balanceclat import BalancedPatternResult
from .stability import StablePatternResult

MINE_FIELDS = ("items", "support", "t", "avgdist", "stdev", "succdists")
STABLE_FIELDS = ("items", "support", "value", "triples", "left_endpoints", "right_endpoints")


def read_names(stream: TextIO) -> dict[int, str]:
    """Two-column ``id label`` map; the label may contain spaces."""
    names = {}
    for lineno, line in enumerate(stream, start=1):
        line = line.strip()
        if not line:
            continue
        key, *rest = line.split(None, 1)
        try:
            names[int(key)] = rest[0] if rest else key
        except ValueError:
            raise ValueError(f"line {lineno}: bad id {key!r}") from None
    return names


def write_names(names: Mapping[str, int], stream: TextIO) -> None:
    for key, i in sorted(names.items(), key=lambda kv: kv[1]):
        stream.write(f"{i}\t{key}\n")


def format_items(items: Sequence[int], names: Optional[Mapping[int, str]] = None) -> str:
    if names:
        return "{" + ", ".join(names.get(i, str(i)) for i in items) + "}"
    return "{" + ", ".join(map(str, items)) + "}"


def format_bins(hist: Mapping[int, int], min_count: int) -> str:
    return ", ".join(f"{d}:{c}" for d, c in sorted(hist.items()) if c >= min_count)


def mine_text(
    results: Sequence[BalancedPatternResult],
    params: Mapping[str, object],
    stream: TextIO,
    report_min_count: int = 20,
    names: Optional[Mapping[int, str]] = None,
    wall_ms: Optional[float] = None,
) -> None:
    stream.write("# balanced patterns\n")
    for k, v in params.items():
        stream.write(f"# {k} = {v}\n")
    stream.write(f"# patterns = {len(results)}\n")
    if wall_ms is not None:
        stream.write(f"# wall_ms = {wall_ms:.3f}\n")
    for r in results:
        s = r.stats
        stream.write(
            f"{format_items(r.items, names)}\tsupport={s.support}\tt={s.balance_value}"
            f"\tavgdist={s.avgdist:.4f}\tstdev={s.stdev:.4f}\n"
        )
        bins = format_bins(r.succ_histogram.counts, report_min_count)
        stream.write(f"  succdists (count >= {report_min_count}): {bins}\n")


def mine_csv(
    results: Sequence[BalancedPatternResult],
    stream: TextIO,
    report_min_count: int = 20,
    names: Optional[Mapping[int, str]] = None,
) -> None:
    writer = csv.writer(stream, lineterminator="\r\n")
    writer.writerow(MINE_FIELDS)
    for r in results:
        s = r.stats
        label = " ".join(names.get(i, str(i)) for i in r.items) if names else " ".join(map(str, r.items))
        writer.writerow([
            label,
            s.support,
            s.balance_value,
            f"{s.avgdist:.4f}",
            f"{s.stdev:.4f}",
            format_bins(r.succ_histogram.counts, report_min_count),
        ])


def stable_text(results: Sequence[StablePatternResult], params: Mapping[str, object], stream: TextIO,
                names=None, wall_ms=None) -> None:
    stream.write("# stable patterns\n")
    for k, v in params.items():
        stream.write(f"# {k} = {v}\n")
    stream.write(f"# patterns = {len(results)}\n")
    if wall_ms is not None:
        stream.write(f"# wall_ms = {wall_ms:.3f}\n")
    for r in results:
        sc = r.score
        stream.write(
            f"{format_items(r.items, names)}\tsupport={r.support}\tvalue={sc.value}"
            f"\t({sc.triples}+{sc.left_endpoints}+{sc.right_endpoints})\n"
        )


def stable_csv(results: Sequence[StablePatternResult], stream: TextIO, names=None) -> None:
    writer = csv.writer(stream, lineterminator="\r\n")
    writer.writerow(STABLE_FIELDS)
    for r in results:
        sc = r.score
        label = " ".join(names.get(i, str(i)) for i in r.items) if names else " ".join(map(str, r.items))
        writer.writerow([label, r.support, sc.value, sc.triples, sc.left_endpoints, sc.right_endpoints])
