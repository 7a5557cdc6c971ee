"""Command-line entry point: ``balanceclat {mine,stable,generate,bucket,bench}``.

Exit codes: 0 on success (an empty result is a success), 2 on usage or
input errors.
"""

from __future__ import annotations

import argparse
import sys
import time
from contextlib import contextmanager
from decimal import Decimal, InvalidOperation

from . import bench, report
from .balanceclat import MiningParams, mine_balanced
from .datagen import GeneratorConfig, generate
from .ingest import BucketConfig, bucket, parse_events
from .stability import StabilityParams, mine_stable
from .transactions import ParseError, read_database, save_database


class UsageError(Exception):
    pass


def _decimal(text: str) -> float:
    try:
        value = Decimal(text)
    except InvalidOperation:
        raise argparse.ArgumentTypeError(f"not a decimal number: {text!r}") from None
    if not value.is_finite():
        raise argparse.ArgumentTypeError(f"not a finite number: {text!r}")
    return float(value)


def _int_list(text: str) -> list[int]:
    try:
        values = [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers: {text!r}") from None
    if not values:
        raise argparse.ArgumentTypeError("empty sweep")
    return values


@contextmanager
def _output(path):
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            yield fh


def _load_db(path):
    try:
        return read_database(path)
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}") from None
    except ParseError as e:
        raise UsageError(f"{path}: {e}") from None


def _load_names(path):
    if path is None:
        return None
    try:
        with open(path, encoding="utf-8") as fh:
            return report.read_names(fh)
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}") from None
    except ValueError as e:
        raise UsageError(f"{path}: {e}") from None


def _params(**kwargs):
    try:
        return MiningParams(**kwargs)
    except ValueError as e:
        raise UsageError(str(e)) from None


def cmd_mine(args) -> int:
    db = _load_db(args.input)
    names = _load_names(args.names)
    params = _params(
        minnumber=args.minnumber,
        maxstdev=args.maxstdev,
        minavg=args.minavg,
        ell=args.max_distance,
        mindistfreq=args.mindistfreq,
        max_pattern_size=args.max_size,
    )
    if args.report_min_count < 0:
        raise UsageError("--report-min-count must be >= 0")
    t0 = time.perf_counter()
    results = mine_balanced(db, params, threads=args.threads)
    wall_ms = (time.perf_counter() - t0) * 1000.0
    with _output(args.output) as out:
        if args.format == "csv":
            report.mine_csv(results, out, args.report_min_count, names)
        else:
            echo = {
                "input": args.input,
                "transactions": len(db),
                "minnumber": params.minnumber,
                "maxstdev": params.maxstdev,
                "minavg": params.minavg,
                "max_distance": params.ell,
                "mindistfreq": params.mindistfreq,
            }
            report.mine_text(results, echo, out, args.report_min_count, names, wall_ms)
    return 0


def cmd_stable(args) -> int:
    db = _load_db(args.input)
    names = _load_names(args.names)
    try:
        params = StabilityParams(w=args.w, minstable=args.minstable, minsup=args.minsup)
    except ValueError as e:
        raise UsageError(str(e)) from None
    t0 = time.perf_counter()
    results = mine_stable(db, params, max_pattern_size=args.max_size)
    wall_ms = (time.perf_counter() - t0) * 1000.0
    with _output(args.output) as out:
        if args.format == "csv":
            report.stable_csv(results, out, names)
        else:
            echo = {"input": args.input, "transactions": len(db), "w": params.w,
                    "minsup": params.minsup, "minstable": params.minstable}
            report.stable_text(results, echo, out, names, wall_ms)
    return 0


def _gen_config(args, n_transactions=None) -> GeneratorConfig:
    try:
        return GeneratorConfig(
            n_transactions=args.transactions if n_transactions is None else n_transactions,
            n_items=args.items,
            pattern_size=args.pattern_size,
            period=args.period,
            noise_percent=args.noise,
            background_density=args.background,
            seed=args.seed,
        )
    except ValueError as e:
        raise UsageError(str(e)) from None


def cmd_generate(args) -> int:
    db = generate(_gen_config(args))
    try:
        save_database(db, args.out)
    except OSError as e:
        raise UsageError(f"cannot write {args.out}: {e.strerror}") from None
    return 0


def cmd_bucket(args) -> int:
    names = {} if args.names_out else None
    try:
        with open(args.events, encoding="utf-8") as fh:
            events = parse_events(fh, names)
    except OSError as e:
        raise UsageError(f"cannot read {args.events}: {e.strerror}") from None
    except ParseError as e:
        raise UsageError(f"{args.events}: {e}") from None
    try:
        db = bucket(events, BucketConfig(args.window_seconds, args.start))
    except ValueError as e:
        raise UsageError(str(e)) from None
    save_database(db, args.out)
    if names is not None:
        with open(args.names_out, "w", encoding="utf-8", newline="\n") as fh:
            report.write_names(names, fh)
    return 0


def cmd_bench(args) -> int:
    if args.repeat < 1:
        raise UsageError("--repeat must be >= 1")
    base = _params(
        minnumber=1,
        maxstdev=args.maxstdev,
        minavg=args.minavg,
        ell=args.max_distance,
        mindistfreq=args.mindistfreq,
    )
    if args.mode == "minnumber-sweep":
        if any(v < 1 for v in args.values):
            raise UsageError("minnumber values must be >= 1")
        db = _load_db(args.input) if args.input else generate(_gen_config(args))
        rows = bench.minnumber_sweep(db, args.values, base, args.repeat, args.threads)
    else:
        if any(v < 0 for v in args.values):
            raise UsageError("sizes must be >= 0")
        if not 0 < args.fraction <= 1:
            raise UsageError("--fraction must be in (0, 1]")
        rows = bench.size_sweep(args.values, _gen_config(args, 0), base, args.fraction, args.repeat, args.threads)
    with _output(args.out) as out:
        bench.write_csv(rows, out)
    return 0


def _add_mining_thresholds(p, maxstdev=None, minavg=None):
    p.add_argument("--maxstdev", type=_decimal, required=maxstdev is None, default=maxstdev,
                   help="largest allowed stdev of successive distances")
    p.add_argument("--minavg", type=_decimal, required=minavg is None, default=minavg,
                   help="smallest allowed average successive distance")
    p.add_argument("--max-distance", type=int, default=10, help="largest all-pairs distance tracked (default 10)")
    p.add_argument("--mindistfreq", type=int, default=1,
                   help="only successive-distance bins with at least this count enter the statistics")


def _add_generator_flags(p):
    p.add_argument("--transactions", type=int, default=2000)
    p.add_argument("--items", type=int, default=200)
    p.add_argument("--pattern-size", type=int, default=5)
    p.add_argument("--period", type=int, default=4)
    p.add_argument("--noise", type=_decimal, default=0.0, help="dropout percentage per planted item")
    p.add_argument("--background", type=_decimal, default=0.0, help="per-item density of non-pattern items")
    p.add_argument("--seed", type=int, default=0)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="balanceclat", description="Mine patterns that recur at balanced intervals.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("mine", help="mine balanced patterns")
    p.add_argument("--input", required=True)
    p.add_argument("--minnumber", type=int, required=True)
    _add_mining_thresholds(p)
    p.add_argument("--max-size", type=int, default=None, help="largest pattern size")
    p.add_argument("--format", choices=("text", "csv"), default="text")
    p.add_argument("--report-min-count", type=int, default=20,
                   help="only list successive-distance bins with at least this count (default 20)")
    p.add_argument("--names", default=None, help="file of 'id label' lines")
    p.add_argument("--output", default=None)
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(func=cmd_mine)

    p = sub.add_parser("stable", help="mine stable patterns (w-good triples)")
    p.add_argument("--input", required=True)
    p.add_argument("--w", type=int, default=0)
    p.add_argument("--minstable", type=int, required=True)
    p.add_argument("--minsup", type=int, required=True)
    p.add_argument("--max-size", type=int, default=None)
    p.add_argument("--format", choices=("text", "csv"), default="text")
    p.add_argument("--names", default=None)
    p.add_argument("--output", default=None)
    p.set_defaults(func=cmd_stable)

    p = sub.add_parser("generate", help="write a synthetic planted-pattern database")
    p.add_argument("--out", required=True)
    _add_generator_flags(p)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("bucket", help="bucket 'timestamp item' events into windows")
    p.add_argument("--events", required=True)
    p.add_argument("--window-seconds", type=int, default=1800)
    p.add_argument("--start", type=int, default=None)
    p.add_argument("--out", required=True)
    p.add_argument("--names-out", default=None,
                   help="treat items as string keys and write the id map here")
    p.set_defaults(func=cmd_bucket)

    p = sub.add_parser("bench", help="runtime sweeps, CSV output")
    p.add_argument("--mode", choices=("size-sweep", "minnumber-sweep"), required=True)
    p.add_argument("--values", type=_int_list, required=True,
                   help="comma-separated sizes or minnumber values")
    p.add_argument("--input", default=None, help="database for minnumber-sweep (default: generated)")
    p.add_argument("--fraction", type=_decimal, default=0.1, help="size-sweep minnumber as a fraction of size")
    p.add_argument("--repeat", type=int, default=1, help="report the median of this many runs")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--out", default=None)
    _add_mining_thresholds(p, maxstdev=1.0, minavg=2.0)
    _add_generator_flags(p)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as e:
        print(f"balanceclat {args.command}: error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
