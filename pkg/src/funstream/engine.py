"""Sequential and chunked-parallel execution of terminal operations.

Parallel execution materializes the source (ranges stay arithmetic), splits
it into contiguous chunks, evaluates the stage chain on each chunk in a
worker, and merges the per-chunk partial results.

Two worker backends exist:

``"process"`` (default where ``fork`` is available)
    Workers are forked per terminal execution and inherit the pipeline,
    so lambdas and closures work without pickling.  Only partial results
    travel back.  ``for_each`` actions run in the calling process on the
    elements that survive the stages, since side effects inside a child
    would be lost.

``"thread"``
    A thread pool.  User functions, including ``for_each`` actions, are
    called concurrently from the workers.  Pure-Python stages gain nothing
    under the GIL; code that releases it (numba ``nogil``, numpy) does.
"""
from __future__ import annotations

import functools
import multiprocessing as mp
import operator
import os
import threading
from concurrent.futures import FIRST_EXCEPTION, Future, ProcessPoolExecutor, ThreadPoolExecutor, wait
from contextlib import contextmanager
from dataclasses import dataclass, replace
from typing import Any, Iterable, Iterator, Sequence

from .pipeline import ExecutionMode, Pipeline, Stage, StageKind, Terminal, TerminalKind
from .sources import IntRange, LiteralValues

CHUNKS_PER_WORKER = 4
_CANCEL_CHECK_EVERY = 256

BACKENDS = ("process", "thread")


def _fork_supported() -> bool:
    return "fork" in mp.get_all_start_methods()


@dataclass(frozen=True)
class EngineConfig:
    workers: int | None = None  # None: every CPU this process may use
    backend: str = "process" if _fork_supported() else "thread"

    def __post_init__(self):
        if self.workers is not None and self.workers < 1:
            raise ValueError(f"workers must be >= 1, got {self.workers}")
        if self.backend not in BACKENDS:
            raise ValueError(f"unknown backend {self.backend!r}; expected one of {BACKENDS}")


_config = EngineConfig()


def get_config() -> EngineConfig:
    return _config


def configure(**changes) -> EngineConfig:
    """Replace fields of the global engine configuration; returns the new one."""
    global _config
    _config = replace(_config, **changes)
    return _config


@contextmanager
def override(**changes):
    """Temporarily change the engine configuration, e.g. ``override(workers=1)``."""
    global _config
    saved = _config
    _config = replace(_config, **changes)
    try:
        yield _config
    finally:
        _config = saved


def available_workers() -> int:
    try:
        return len(os.sched_getaffinity(0))
    except AttributeError:
        return os.cpu_count() or 1


def worker_count() -> int:
    return _config.workers if _config.workers is not None else available_workers()


# -- chunk planning and merging -------------------------------------------


@dataclass(frozen=True)
class ChunkPlan:
    worker_count: int
    chunks: tuple[tuple[int, int], ...]

    def __len__(self) -> int:
        return len(self.chunks)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.chunks)

    @property
    def sizes(self) -> list[int]:
        return [end - start for start, end in self.chunks]


def plan_chunks(n_elements: int, workers: int) -> ChunkPlan:
    """Split ``[0, n_elements)`` into ``min(4 * workers, max(1, n_elements))``
    contiguous chunks whose sizes differ by at most one.

    >>> plan_chunks(10, 1).chunks
    ((0, 3), (3, 6), (6, 8), (8, 10))
    """
    if n_elements < 0:
        raise ValueError("n_elements must be non-negative")
    if workers < 1:
        raise ValueError("workers must be >= 1")
    k = min(workers * CHUNKS_PER_WORKER, max(1, n_elements))
    base, extra = divmod(n_elements, k)
    chunks = []
    start = 0
    for i in range(k):
        end = start + base + (1 if i < extra else 0)
        chunks.append((start, end))
        start = end
    return ChunkPlan(workers, tuple(chunks))


def _left_sum(values: Iterable) -> Any:
    # plain left-to-right addition; builtin sum() may compensate floats on newer Pythons
    return functools.reduce(operator.add, values, 0)


def merge(partials: Sequence, kind: TerminalKind) -> Any:
    """Combine per-chunk results, given in chunk order."""
    if kind in (TerminalKind.COUNT, TerminalKind.SUM):
        return _left_sum(partials)
    if kind is TerminalKind.FOR_EACH:
        return None
    raise ValueError(f"{kind.value} results cannot be merged")


# -- evaluation -----------------------------------------------------------


def _to_int(fn):
    index = operator.index

    def mapped(x):
        return index(fn(x))

    return mapped


def flow(elements: Iterable, stages: Sequence[Stage]) -> Iterator:
    """Lazily push ``elements`` through ``stages``, one element at a time."""
    it = iter(elements)
    for stage in stages:
        if stage.kind is StageKind.FILTER:
            it = filter(stage.fn, it)
        elif stage.kind is StageKind.MAP:
            it = map(stage.fn, it)
        else:
            it = map(_to_int(stage.fn), it)
    return it


class _Cancelled(Exception):
    pass


def _watch(elements: Iterable, cancel) -> Iterator:
    for i, x in enumerate(elements):
        if i % _CANCEL_CHECK_EVERY == 0 and cancel.is_set():
            raise _Cancelled()
        yield x


def _finish(it: Iterator, terminal: Terminal) -> Any:
    kind = terminal.kind
    if kind is TerminalKind.COUNT:
        n = 0
        for _ in it:
            n += 1
        return n
    if kind is TerminalKind.SUM:
        return _left_sum(it)
    if kind is TerminalKind.FOR_EACH:
        action = terminal.fn
        for x in it:
            action(x)
        return None
    return functools.reduce(terminal.fn, it, terminal.initial)


def _eval_chunk(data, stages, terminal: Terminal, start: int, end: int, cancel=None,
                collect: bool = False):
    elements = data[start:end]
    if cancel is not None:
        elements = _watch(elements, cancel)
    it = flow(elements, stages)
    if collect:
        return list(it)
    return _finish(it, terminal)


# sources whose length is known without reading them
_SIZED = (IntRange, LiteralValues)


def execute(p: Pipeline, terminal: Terminal) -> Any:
    """Run ``terminal`` on ``p`` and mark ``p`` consumed."""
    p.mark_consumed()
    try:
        if terminal.kind is TerminalKind.COUNT and not p.stages and isinstance(p.source, _SIZED):
            return len(p.source.materialize())
        if p.mode is ExecutionMode.SEQUENTIAL or terminal.kind is TerminalKind.REDUCE:
            return _finish(flow(p.source.iterate(), p.stages), terminal)
        return _execute_parallel(p, terminal)
    finally:
        p.source.close()


def _execute_parallel(p: Pipeline, terminal: Terminal) -> Any:
    data = p.source.materialize()
    workers = worker_count()
    plan = plan_chunks(len(data), workers)
    if workers == 1:
        partials = [_eval_chunk(data, p.stages, terminal, s, e) for s, e in plan]
    elif _config.backend == "thread" or not _fork_supported():
        partials = _run_threads(data, p.stages, terminal, plan)
    else:
        partials = _run_forked(data, p.stages, terminal, plan)
        if terminal.kind is TerminalKind.FOR_EACH:
            for survivors in partials:
                for x in survivors:
                    terminal.fn(x)
            return None
    return merge(partials, terminal.kind)


def _gather(futures: list[Future], cancel) -> list:
    """Collect results in chunk order.

    On failure the remaining chunks are cancelled (queued ones dropped,
    running ones stop at their next check) and the first real error in
    chunk order is raised once.
    """
    done, pending = wait(futures, return_when=FIRST_EXCEPTION)
    if not pending:
        failed = [f for f in futures if f.exception() is not None]
        if not failed:
            return [f.result() for f in futures]
    cancel.set()
    for f in pending:
        f.cancel()
    wait(futures)
    errors = [f.exception() for f in futures if not f.cancelled() and f.exception() is not None]
    raise next((e for e in errors if not isinstance(e, _Cancelled)), errors[0])


def _run_threads(data, stages, terminal: Terminal, plan: ChunkPlan) -> list:
    cancel = threading.Event()
    with ThreadPoolExecutor(max_workers=plan.worker_count) as pool:
        futures = [pool.submit(_eval_chunk, data, stages, terminal, s, e, cancel) for s, e in plan]
        return _gather(futures, cancel)


# state inherited by forked workers; set only while a forked run is active
_forked_job: tuple | None = None
_forked_lock = threading.Lock()


def _forked_chunk(start: int, end: int):
    data, stages, terminal, cancel = _forked_job
    collect = terminal.kind is TerminalKind.FOR_EACH
    try:
        return _eval_chunk(data, stages, terminal, start, end, cancel, collect=collect)
    except Exception:
        cancel.set()
        raise


def _run_forked(data, stages, terminal: Terminal, plan: ChunkPlan) -> list:
    global _forked_job
    ctx = mp.get_context("fork")
    cancel = ctx.Event()
    with _forked_lock:
        _forked_job = (data, stages, terminal, cancel)
        try:
            with ProcessPoolExecutor(max_workers=plan.worker_count, mp_context=ctx) as pool:
                futures = [pool.submit(_forked_chunk, s, e) for s, e in plan]
                return _gather(futures, cancel)
        finally:
            _forked_job = None
