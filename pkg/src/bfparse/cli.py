"""Command-line driver: entropy tables, compression and access benchmarks.

Exit codes: 0 success, 1 usage, 2 I/O error, 3 format or verification error.
"""

from __future__ import annotations

import argparse
import csv
import json
import platform
import statistics
import sys
import time
from dataclasses import asdict, dataclass
from pathlib import Path

import numpy as np

from .bitio import FormatError
from .codec import compress, decompress, size_report
from .corpus import Text, load_text
from .entropy import entropy_report, hk_totals
from .parsing import best_naive, parse_h0_optimal, parse_h1_optimal
from .random_access import build_access
from .substring_index import build_counter

EXIT_USAGE, EXIT_IO, EXIT_FORMAT = 1, 2, 3


class UsageError(Exception):
    pass


class VerificationError(Exception):
    pass


@dataclass
class ReportRow:
    file: str
    variant: str
    m: int
    mean_entropy_bps: float
    baseline_bps: float
    baseline_avg_len: float
    baseline_distinct: int
    baseline_pairs: int
    algorithm_bps: float
    algorithm_avg_len: float
    algorithm_distinct: int
    algorithm_pairs: int
    algorithm_cost_bps: float


def analyze_text(text: Text, file_id: str, order: str, ms: list[int]) -> list[ReportRow]:
    """One row per m comparing the best naive parsing (B) with the DP parsing (A).

    The mean-entropy column is (1/m) sum_{i<m} H_i for h0 and
    (1/m) sum_{m<=i<2m} H_i for h1.
    """
    if text.n == 0:
        raise UsageError("cannot analyze an empty file")
    need = 2 * max(ms) if order == "h1" else max(ms)
    totals = hk_totals(text, 2 * max(ms) - 1 if order == "h1" else max(ms) - 1)
    counter = build_counter(text, need)
    rows = []
    for m in ms:
        if order == "h0":
            parsing, cost = parse_h0_optimal(text, m, counter)
        else:
            parsing, cost = parse_h1_optimal(text, m, counter)
        base, _ = best_naive(text, m, order)
        a = entropy_report(parsing, len(totals) - 1, totals)
        b = entropy_report(base, len(totals) - 1, totals)
        bits = (lambda r: r.h0_bits) if order == "h0" else (lambda r: r.h1_bits)
        lo, hi = (0, m) if order == "h0" else (m, 2 * m)
        rows.append(ReportRow(
            file=file_id, variant=order, m=m,
            mean_entropy_bps=a.mean_entropy(lo, hi),
            baseline_bps=b.bps(bits(b)), baseline_avg_len=b.avg_phrase_len,
            baseline_distinct=b.distinct, baseline_pairs=b.pairs,
            algorithm_bps=a.bps(bits(a)), algorithm_avg_len=a.avg_phrase_len,
            algorithm_distinct=a.distinct, algorithm_pairs=a.pairs,
            algorithm_cost_bps=cost / text.n,
        ))
    return rows


def _median_time(fn, runs: int = 3) -> float:
    times = []
    for _ in range(runs):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return statistics.median(times)


def access_bench(text: Text, m: int, d: int | None, t: int, queries: int, blocks: int,
                 block_size: int, seed: int, baseline: bool = False, verify: int = 10_000) -> dict:
    raw = text.to_bytes()
    parsing = best_naive(text, m, "h0")[0] if baseline and text.n else None
    structure = build_access(text, m, d, t, parsing)
    rng = np.random.default_rng(seed)
    report = {
        "m": m, "d": structure.d, "t": structure.t, "parsing": "naive" if baseline else "algorithm",
        "n": text.n, **structure.structure_size(),
    }
    if text.n:
        checks = rng.integers(0, text.n, min(verify, text.n)).tolist()
        bad = sum(structure.access(i) != raw[i] for i in checks)
        report["verified"] = len(checks)
        report["verify_failures"] = bad
        if bad:
            raise VerificationError(f"{bad} of {len(checks)} sampled accesses returned wrong bytes")
    positions = rng.integers(0, max(text.n, 1), queries).tolist() if text.n else []
    size = min(block_size, text.n)
    starts = rng.integers(0, text.n - size + 1, blocks).tolist() if text.n else []
    if positions:
        report["T_r"] = _median_time(lambda: [structure.access(i) for i in positions])
        report["raw_T_r"] = _median_time(lambda: [raw[i] for i in positions])
    if starts:
        report["T_b"] = _median_time(lambda: [structure.read_block(i, size) for i in starts])
        report["raw_T_b"] = _median_time(lambda: [raw[i:i + size] for i in starts])
    report["queries"], report["blocks"], report["block_size"] = len(positions), len(starts), size
    report["hardware"] = {"machine": platform.machine(), "processor": platform.processor(),
                          "python": platform.python_version()}
    return report


def _emit(rows: list[dict], fmt: str, out) -> None:
    if fmt == "json":
        json.dump(rows if len(rows) != 1 else rows[0], out, indent=2)
        out.write("\n")
        return
    flat = [{k: (json.dumps(v) if isinstance(v, dict) else v) for k, v in r.items()} for r in rows]
    writer = csv.DictWriter(out, fieldnames=list(flat[0]))
    writer.writeheader()
    writer.writerows(flat)


def _read(path: str, limit: int | None = None) -> bytes:
    with open(path, "rb") as fh:
        return fh.read() if limit is None else fh.read(limit)


def cmd_analyze(args, out) -> None:
    ms = args.m or ([4, 6, 8] if args.order == "h0" else [2, 3, 4])
    text = load_text(_read(args.input, args.limit))
    rows = analyze_text(text, Path(args.input).name, args.order, ms)
    _emit([asdict(r) for r in rows], args.format, out)


def cmd_compress(args, out) -> None:
    text = load_text(_read(args.input, args.limit))
    archive = compress(text, args.m, args.order, args.baseline)
    Path(args.output).write_bytes(archive.to_bytes())
    report = {"file": Path(args.input).name, "variant": args.order, "m": args.m,
              "parsing": "naive" if args.baseline else "algorithm", **size_report(archive).as_dict()}
    _emit([report], args.format, out)


def cmd_decompress(args, out) -> None:
    data = decompress(_read(args.input))
    Path(args.output).write_bytes(data)


def cmd_access_bench(args, out) -> None:
    text = load_text(_read(args.input, args.limit))
    report = access_bench(text, args.m, args.d, args.t, args.queries, args.blocks,
                          args.block_size, args.seed, args.baseline, args.verify)
    report["file"] = Path(args.input).name
    _emit([report], args.format, out)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _positive(value: str) -> int:
    v = int(value)
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def _non_negative(value: str) -> int:
    v = int(value)
    if v < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="bfparse", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("analyze", help="entropy of DP vs best naive parsings")
    p.add_argument("input")
    p.add_argument("--order", choices=["h0", "h1"], default="h0")
    p.add_argument("--m", type=_positive, nargs="+")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--limit", type=_positive, help="only read the first LIMIT bytes")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("compress", help="write an archive")
    p.add_argument("input")
    p.add_argument("output")
    p.add_argument("--order", choices=["h0", "h1"], default="h0")
    p.add_argument("--m", type=_positive, default=4)
    p.add_argument("--baseline", action="store_true", help="use the best naive parsing")
    p.add_argument("--format", choices=["csv", "json"], default="json")
    p.add_argument("--limit", type=_positive)
    p.set_defaults(func=cmd_compress)

    p = sub.add_parser("decompress", help="restore the original file")
    p.add_argument("input")
    p.add_argument("output")
    p.set_defaults(func=cmd_decompress)

    p = sub.add_parser("access-bench", help="random-access structure size and timings")
    p.add_argument("input")
    p.add_argument("--m", type=_positive, default=8)
    p.add_argument("--d", type=_positive, help="position sampling step (default 2m)")
    p.add_argument("--t", type=_positive, default=8, help="code-position sampling step")
    p.add_argument("--queries", type=_non_negative, default=10**6)
    p.add_argument("--blocks", type=_non_negative, default=1000)
    p.add_argument("--block-size", type=_positive, default=50 * 1024)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--verify", type=_non_negative, default=10_000)
    p.add_argument("--baseline", action="store_true", help="use the best naive parsing")
    p.add_argument("--format", choices=["csv", "json"], default="json")
    p.add_argument("--limit", type=_positive)
    p.set_defaults(func=cmd_access_bench)
    return parser


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    try:
        args = build_parser().parse_args(argv)
        args.func(args, out)
    except UsageError as exc:
        print(f"bfparse: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"bfparse: {exc}", file=sys.stderr)
        return EXIT_IO
    except (FormatError, VerificationError) as exc:
        print(f"bfparse: {exc}", file=sys.stderr)
        return EXIT_FORMAT
    return 0


def main_exit() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_exit()
