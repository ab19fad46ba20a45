"""Function-value roles and small first-class-function demos.

Any Python callable can fill a role; the aliases below only document
the expected shape.
"""
from __future__ import annotations

import math
from typing import Any, Callable, TypeVar

T = TypeVar("T")
U = TypeVar("U")
R = TypeVar("R")

#: ``T -> bool``. Must be free of side effects on library state.
Predicate = Callable[[T], bool]
#: ``T -> U``. Deterministic during one pipeline execution.
Mapper = Callable[[T], U]
#: ``(result_so_far, new_element) -> result``.
Accumulator = Callable[[R, T], R]
#: ``T -> None``. May have side effects such as printing.
Consumer = Callable[[T], Any]


def apply(f: Mapper[int, int], x: int) -> int:
    """Call ``f`` on ``x`` and return the result unchanged."""
    return f(x)


def apply3(g: Callable[[float, float, float], float], u: float, v: float, w: float) -> float:
    return g(u, v, w)


def apply_to_seven(f: Mapper[int, int]) -> int:
    return apply(f, 7)


def apply_to_minus_nine(f: Mapper[int, int]) -> int:
    return apply(f, -9)


def add5(x: int) -> int:
    return x + 5


def mult_by_3_if_positive(x: int) -> int:
    if x > 0:
        return 3 * x
    else:
        return 0


def clamp_or_scale(z: int) -> int:
    # piecewise: saturate far outside [-100, 10], scale by ten inside
    if z > 10:
        return 100
    elif z < -100:
        return -100
    else:
        return z * 10


def norm3(u: float, v: float, w: float) -> float:
    """Euclidean length of ``(u, v, w)``."""
    return math.sqrt(u * u + v * v + w * w)
