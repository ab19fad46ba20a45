"""Small stream computations: line counts, range sums, per-line output and an exact decimal total."""
from __future__ import annotations

import sys
from typing import Callable, TextIO

from . import sources
from .exact_decimal import ZERO, ExactDecimal


class UnknownDemo(KeyError):
    pass


def _needs_file(path):
    if path is None:
        raise ValueError("this demo reads a file; pass --file PATH")
    return path


def _print_to(out: TextIO) -> Callable:
    return lambda x: print(x, file=out)


def ep7(path, out):
    print(sources.lines(_needs_file(path)).count(), file=out)


def ep8(path, out):
    print(sources.range_closed(27, 159).sum(), file=out)


def ep9(path, out):
    print(sources.range_closed(27, 159).filter(lambda x: x % 2 == 1).sum(), file=out)


def ep10(path, out):
    sources.range_closed(27, 159).for_each(_print_to(out))


def ep11(path, out):
    sources.lines(_needs_file(path)).map(lambda s: s[:1]).for_each(_print_to(out))


def ep12(path, out):
    sources.lines(_needs_file(path)).map_to_int(len).for_each(_print_to(out))


def ep13(path, out):
    total = (sources.lines(_needs_file(path))
             .map(ExactDecimal.parse)
             .reduce(ZERO, lambda tot, val: tot.add(val)))
    print(total, file=out)


DEMOS = {f.__name__: f for f in (ep7, ep8, ep9, ep10, ep11, ep12, ep13)}
FILE_DEMOS = frozenset({"ep7", "ep11", "ep12", "ep13"})


def run_demo(problem_id: str, path=None, out: TextIO | None = None) -> int:
    """Run one demo, printing to ``out`` (stdout by default); returns 0."""
    try:
        demo = DEMOS[problem_id]
    except KeyError:
        raise UnknownDemo(f"unknown demo {problem_id!r}; choose from {', '.join(DEMOS)}") from None
    demo(path, out if out is not None else sys.stdout)
    return 0
