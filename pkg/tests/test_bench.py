import pytest
from hypothesis import given, settings, strategies as st

from funstream import bench, engine
from funstream.bench import BenchConfig, CountMismatch, Repetition, is_prime, is_prime_py

from oracles import sieve_prime_count


@pytest.mark.parametrize("fn", [is_prime, is_prime_py], ids=["compiled", "python"])
def test_is_prime_small(fn):
    assert fn(2) and fn(3)
    assert not fn(4) and not fn(9)


@pytest.mark.parametrize("fn", [is_prime, is_prime_py], ids=["compiled", "python"])
def test_prime_count_below_10000(fn):
    import funstream as fs
    assert fs.range(2, 10_000).filter(fn).count() == sieve_prime_count(10_000) == 1229


def test_compiled_and_python_agree():
    assert [n for n in range(2, 3000) if is_prime(n)] == [n for n in range(2, 3000) if is_prime_py(n)]


@pytest.mark.parametrize("kwargs", [
    {"num_values": 0}, {"max_value": 2}, {"repetitions": 0}, {"workers": 0},
])
def test_config_validation(kwargs):
    with pytest.raises(ValueError):
        BenchConfig(**kwargs)


def test_config_defaults():
    cfg = BenchConfig()
    assert (cfg.num_values, cfg.max_value, cfg.repetitions) == (2_000_000, 10_000, 5)


def test_generate_values_length_and_determinism():
    cfg = BenchConfig(num_values=10, seed=3)
    assert len(bench.generate_values(cfg)) == 10
    assert bench.generate_values(cfg) == bench.generate_values(BenchConfig(num_values=10, seed=3))
    assert all(type(v) is int for v in bench.generate_values(cfg))


@given(st.integers(1, 500), st.integers(3, 50), st.integers(0, 2**32))
@settings(max_examples=50)
def test_generate_values_in_range(n, max_value, seed):
    values = bench.generate_values(BenchConfig(num_values=n, max_value=max_value, seed=seed))
    assert len(values) == n
    assert all(2 <= v < max_value for v in values)


def test_generate_values_covers_range():
    values = bench.generate_values(BenchConfig(num_values=5000, max_value=10, seed=0))
    assert set(values) == set(range(2, 10))


def test_repetition_format():
    rep = Repetition(2907, 634, 10, 10)
    assert rep.format() == "sequential 2907ms, parallel 634ms, speedup factor 4.59"
    assert Repetition(1, 1, 0, 0).format() == "sequential 1ms, parallel 1ms, speedup factor 1.00"


def test_run_benchmark_small_workers1():
    cfg = BenchConfig(num_values=10_000, max_value=1_000, repetitions=2, seed=5, workers=1)
    seen = []
    report = bench.run_benchmark(cfg, on_repetition=seen.append)
    assert len(report.repetitions) == 2 and seen == report.repetitions
    assert report.workers == 1
    for rep in report.repetitions:
        assert rep.primes_sequential == rep.primes_parallel
        assert rep.sequential_ms >= 1 and rep.parallel_ms >= 1
    values = bench.generate_values(cfg)
    assert report.repetitions[0].primes_sequential == sum(1 for v in values if is_prime_py(v))


def test_run_benchmark_multiworker_counts_agree():
    cfg = BenchConfig(num_values=20_000, repetitions=2, seed=11, workers=3)
    report = bench.run_benchmark(cfg)
    assert {r.primes_sequential for r in report.repetitions} == {r.primes_parallel for r in report.repetitions}
    assert len({r.primes_parallel for r in report.repetitions}) == 1


def test_run_benchmark_restores_engine_config():
    before = engine.get_config()
    bench.run_benchmark(BenchConfig(num_values=100, repetitions=1, workers=2))
    assert engine.get_config() == before


def test_count_mismatch_raised(monkeypatch):
    real = bench.count_primes
    monkeypatch.setattr(bench, "count_primes", lambda values, parallel: real(values, parallel) + parallel)
    with pytest.raises(CountMismatch):
        bench.run_benchmark(BenchConfig(num_values=100, repetitions=1, workers=1))


def test_report_csv_and_dict():
    report = bench.BenchReport(BenchConfig(num_values=5), workers=2,
                               repetitions=[Repetition(10, 4, 3, 3), Repetition(9, 3, 3, 3)])
    assert report.to_csv().splitlines() == [
        "repetition,sequential_ms,parallel_ms,primes_sequential,primes_parallel,speedup",
        "0,10,4,3,3,2.50",
        "1,9,3,3,3,3.00",
    ]
    assert report.median_speedup == 2.75
    assert report.to_dict()["repetitions"][1]["speedup"] == 3.0
    assert report.lines()[0] == "sequential 10ms, parallel 4ms, speedup factor 2.50"


def test_sub_millisecond_reported_as_one(monkeypatch):
    monkeypatch.setattr(bench.time, "perf_counter_ns", lambda: 500_000)
    assert bench._elapsed_ms(0) == 1
