"""Command line entry point.

    funstream bench primes [--num-values N] [--max-value M] [--repetitions R]
                           [--seed S] [--workers W] [--csv]
    funstream demo {ep7,...,ep13} [--file PATH]
"""
from __future__ import annotations

import argparse
import sys

from .bench import BenchConfig, CountMismatch, run_benchmark
from .demos import DEMOS, UnknownDemo, run_demo

EXIT_MISMATCH = 1
EXIT_USAGE = 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="funstream", description=__doc__.splitlines()[0] or None)
    sub = parser.add_subparsers(dest="command", required=True)

    bench = sub.add_parser("bench", help="run benchmarks")
    bench_sub = bench.add_subparsers(dest="benchmark", required=True)
    primes = bench_sub.add_parser("primes", help="sequential vs parallel prime counting")
    defaults = BenchConfig()
    primes.add_argument("--num-values", type=int, default=defaults.num_values)
    primes.add_argument("--max-value", type=int, default=defaults.max_value)
    primes.add_argument("--repetitions", type=int, default=defaults.repetitions)
    primes.add_argument("--seed", type=int, default=None)
    primes.add_argument("--workers", type=int, default=None,
                        help="parallel workers (default: available CPUs)")
    primes.add_argument("--csv", action="store_true", help="print CSV instead of text lines")

    demo = sub.add_parser("demo", help="run a worked stream example")
    demo.add_argument("problem", choices=sorted(DEMOS, key=lambda k: int(k[2:])))
    demo.add_argument("--file", default=None, help="input file for ep7, ep11, ep12, ep13")
    return parser


def _bench_primes(args) -> int:
    try:
        cfg = BenchConfig(num_values=args.num_values, max_value=args.max_value,
                          repetitions=args.repetitions, seed=args.seed, workers=args.workers)
    except ValueError as e:
        print(f"funstream: {e}", file=sys.stderr)
        return EXIT_USAGE
    on_rep = None if args.csv else (lambda rep: print(rep.format(), flush=True))
    try:
        report = run_benchmark(cfg, on_repetition=on_rep)
    except CountMismatch as e:
        print(f"funstream: count mismatch: {e}", file=sys.stderr)
        return EXIT_MISMATCH
    if args.csv:
        sys.stdout.write(report.to_csv())
    return 0


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "bench":
        return _bench_primes(args)
    try:
        return run_demo(args.problem, args.file)
    except (UnknownDemo, ValueError, OSError) as e:
        # DecimalParseError and UnicodeDecodeError are ValueErrors
        msg = e.args[0] if isinstance(e, UnknownDemo) else e
        print(f"funstream: {msg}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
