"""Sequential vs parallel prime counting, with a summary line.

    python scripts/parallel_primes.py --num-values 200000 --workers 4
"""
import argparse
import json
import platform

from funstream import engine
from funstream.bench import BenchConfig, run_benchmark


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--num-values", type=int, default=2_000_000)
    parser.add_argument("--max-value", type=int, default=10_000)
    parser.add_argument("--repetitions", type=int, default=5)
    parser.add_argument("--seed", type=int, default=None)
    parser.add_argument("--workers", type=int, default=None)
    parser.add_argument("--backend", choices=engine.BACKENDS, default=engine.get_config().backend)
    parser.add_argument("--json", metavar="PATH", help="also write the report as JSON")
    args = parser.parse_args()

    cfg = BenchConfig(args.num_values, args.max_value, args.repetitions, args.seed, args.workers)
    with engine.override(backend=args.backend):
        report = run_benchmark(cfg, on_repetition=lambda rep: print(rep.format(), flush=True))
    print(f"# {platform.processor() or platform.machine()}, {engine.available_workers()} hardware "
          f"threads, {report.workers} workers ({args.backend}); median speedup {report.median_speedup:.2f}")
    if args.json:
        with open(args.json, "w") as f:
            json.dump(report.to_dict(), f, indent=2)


if __name__ == "__main__":
    main()
