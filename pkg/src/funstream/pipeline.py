"""The lazy pipeline: a source, a chain of stages and an execution mode.

Intermediate operations (``filter``, ``map``, ``map_to_int``) only record a
stage and return a new pipeline; the receiver is thereby used up, so every
pipeline object feeds exactly one downstream operation.  Terminal operations
(``count``, ``sum``, ``for_each``, ``reduce``) hand the pipeline to the engine
and consume it.

Parallel mode changes how ``count``, ``sum`` and ``for_each`` execute.  ``reduce``
always folds sequentially in encounter order: the two-argument form has no
combiner, so splitting it would silently assume an associative accumulator.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Any, Callable, Generic, TypeVar

from .functional import Accumulator, Consumer, Mapper, Predicate

T = TypeVar("T")
U = TypeVar("U")
R = TypeVar("R")


class AlreadyConsumed(RuntimeError):
    """A pipeline was operated on after a terminal or downstream operation."""


class ExecutionMode(enum.Enum):
    SEQUENTIAL = "sequential"
    PARALLEL = "parallel"


class StageKind(enum.Enum):
    FILTER = "filter"
    MAP = "map"
    MAP_TO_INT = "map_to_int"


@dataclass(frozen=True)
class Stage:
    kind: StageKind
    fn: Callable


class TerminalKind(enum.Enum):
    COUNT = "count"
    SUM = "sum"
    FOR_EACH = "for_each"
    REDUCE = "reduce"


@dataclass(frozen=True)
class Terminal:
    kind: TerminalKind
    fn: Callable | None = None
    initial: Any = None


class Pipeline(Generic[T]):
    """A single-use lazy stream."""

    def __init__(self, source, stages: tuple[Stage, ...] = (),
                 mode: ExecutionMode = ExecutionMode.SEQUENTIAL):
        self.source = source
        self._stages = tuple(stages)
        self._mode = mode
        self._consumed = False

    def __repr__(self) -> str:
        kinds = ", ".join(s.kind.value for s in self._stages)
        return (f"{type(self).__name__}({self.source!r}, stages=[{kinds}], "
                f"mode={self._mode.value}, consumed={self._consumed})")

    @property
    def stages(self) -> tuple[Stage, ...]:
        return self._stages

    @property
    def mode(self) -> ExecutionMode:
        return self._mode

    @property
    def consumed(self) -> bool:
        return self._consumed

    @property
    def is_parallel(self) -> bool:
        return self._mode is ExecutionMode.PARALLEL

    def _check_open(self) -> None:
        if self._consumed:
            raise AlreadyConsumed("stream has already been operated upon or consumed")

    def mark_consumed(self) -> None:
        self._check_open()
        self._consumed = True

    def close(self) -> None:
        """Release the source (only file sources hold resources)."""
        self.source.close()

    def __enter__(self):
        return self

    def __exit__(self, *exc) -> None:
        self.close()

    # -- mode -----------------------------------------------------------

    def parallel(self) -> Pipeline[T]:
        self._check_open()
        self._mode = ExecutionMode.PARALLEL
        return self

    def sequential(self) -> Pipeline[T]:
        self._check_open()
        self._mode = ExecutionMode.SEQUENTIAL
        return self

    # -- intermediate operations ---------------------------------------

    def _derive(self, stage: Stage, cls: type[Pipeline]) -> Pipeline:
        self.mark_consumed()
        return cls(self.source, self._stages + (stage,), self._mode)

    def filter(self, predicate: Predicate[T]) -> Pipeline[T]:
        """Keep only elements for which ``predicate`` is true, in order."""
        return self._derive(Stage(StageKind.FILTER, predicate), type(self))

    def map(self, mapper: Mapper[T, U]) -> Pipeline[U]:
        return self._derive(Stage(StageKind.MAP, mapper), Pipeline)

    def map_to_int(self, mapper: Mapper[T, int]) -> NumericPipeline:
        """Like ``map`` but yields a numeric stream of ints.

        Each result passes through ``operator.index``, so a mapper returning a
        float or a string fails at execution time with ``TypeError``.
        """
        return self._derive(Stage(StageKind.MAP_TO_INT, mapper), NumericPipeline)

    # -- terminal operations --------------------------------------------

    def _run(self, terminal: Terminal):
        from .engine import execute

        return execute(self, terminal)

    def count(self) -> int:
        return self._run(Terminal(TerminalKind.COUNT))

    def for_each(self, action: Consumer[T]) -> None:
        """Invoke ``action`` once per element.

        Sequential mode preserves encounter order; parallel mode does not
        promise any order.
        """
        self._run(Terminal(TerminalKind.FOR_EACH, action))

    def reduce(self, initial: R, accumulate: Accumulator[R, T]) -> R:
        """Left fold: ``accumulate(...accumulate(initial, x1)..., xn)``.

        Always evaluated sequentially, whatever the mode.
        """
        return self._run(Terminal(TerminalKind.REDUCE, accumulate, initial))


class NumericPipeline(Pipeline):
    """A pipeline of ints or floats, which additionally supports ``sum``."""

    def sum(self):
        return self._run(Terminal(TerminalKind.SUM))
