"""Sequential-vs-parallel prime counting benchmark.

Counts the primes among a large array of random integers, once with a
sequential stream and once with a parallel one, and reports the durations
and their ratio for several repetitions.
"""
from __future__ import annotations

import csv
import io
import logging
import statistics
import time
from dataclasses import asdict, dataclass, field
from typing import Callable

import numpy as np

from . import engine, sources

log = logging.getLogger(__name__)

LINE_FORMAT = "sequential {sequential_ms}ms, parallel {parallel_ms}ms, speedup factor {speedup:.2f}"
CSV_FIELDS = ("repetition", "sequential_ms", "parallel_ms", "primes_sequential", "primes_parallel", "speedup")


class CountMismatch(AssertionError):
    """Sequential and parallel runs disagreed; the engine is broken."""


def is_prime_py(n: int) -> bool:
    """Trial division by every ``i`` in ``[2, n)``, deliberately slow.

    ``n`` must be at least 2.
    """
    for i in range(2, n):
        if n % i == 0:
            return False
    return True


try:
    import numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    log.warning("numba unavailable; the prime workload runs as plain Python")
    is_prime = is_prime_py
else:
    # Same loop, compiled; nogil lets the thread backend overlap calls.
    is_prime = numba.njit(nogil=True, cache=False)(is_prime_py)


@dataclass
class BenchConfig:
    num_values: int = 2_000_000
    max_value: int = 10_000
    repetitions: int = 5
    seed: int | None = None
    workers: int | None = None

    def __post_init__(self):
        if self.num_values < 1:
            raise ValueError("num_values must be >= 1")
        if self.max_value < 3:
            raise ValueError("max_value must be >= 3")
        if self.repetitions < 1:
            raise ValueError("repetitions must be >= 1")
        if self.workers is not None and self.workers < 1:
            raise ValueError("workers must be >= 1")


@dataclass
class Repetition:
    sequential_ms: int
    parallel_ms: int
    primes_sequential: int
    primes_parallel: int

    @property
    def speedup(self) -> float:
        return self.sequential_ms / self.parallel_ms

    def format(self) -> str:
        return LINE_FORMAT.format(sequential_ms=self.sequential_ms,
                                  parallel_ms=self.parallel_ms, speedup=self.speedup)


@dataclass
class BenchReport:
    config: BenchConfig
    workers: int
    repetitions: list[Repetition] = field(default_factory=list)

    @property
    def median_speedup(self) -> float:
        return statistics.median(r.speedup for r in self.repetitions)

    def lines(self) -> list[str]:
        return [r.format() for r in self.repetitions]

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_FIELDS)
        for i, r in enumerate(self.repetitions):
            writer.writerow([i, r.sequential_ms, r.parallel_ms, r.primes_sequential,
                             r.primes_parallel, f"{r.speedup:.2f}"])
        return buf.getvalue()

    def to_dict(self) -> dict:
        return {
            "config": asdict(self.config),
            "workers": self.workers,
            "repetitions": [dict(asdict(r), speedup=r.speedup) for r in self.repetitions],
        }


def generate_values(cfg: BenchConfig) -> list[int]:
    """``cfg.num_values`` integers drawn uniformly from ``[2, cfg.max_value)``."""
    rng = np.random.default_rng(cfg.seed)
    return rng.integers(2, cfg.max_value, size=cfg.num_values, dtype=np.int64).tolist()


def _elapsed_ms(start_ns: int) -> int:
    # sub-millisecond runs are reported as 1 ms so the ratio stays finite
    return max(1, (time.perf_counter_ns() - start_ns) // 1_000_000)


def count_primes(values: list[int], parallel: bool) -> int:
    stream = sources.from_numbers(values)
    stream = stream.parallel() if parallel else stream.sequential()
    return stream.filter(is_prime).count()


def run_benchmark(cfg: BenchConfig,
                  on_repetition: Callable[[Repetition], None] | None = None) -> BenchReport:
    values = generate_values(cfg)
    is_prime(2)  # compile before the first timed run
    with engine.override(workers=cfg.workers):
        report = BenchReport(cfg, engine.worker_count())
        for _ in range(cfg.repetitions):
            start = time.perf_counter_ns()
            primes_sequential = count_primes(values, parallel=False)
            sequential_ms = _elapsed_ms(start)

            start = time.perf_counter_ns()
            primes_parallel = count_primes(values, parallel=True)
            parallel_ms = _elapsed_ms(start)

            if primes_sequential != primes_parallel:
                raise CountMismatch(
                    f"sequential counted {primes_sequential} primes, parallel {primes_parallel}")
            rep = Repetition(sequential_ms, parallel_ms, primes_sequential, primes_parallel)
            report.repetitions.append(rep)
            if on_repetition is not None:
                on_repetition(rep)
    return report
