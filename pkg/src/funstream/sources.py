"""Stream sources: literal values, collections, text files and integer ranges.

Each descriptor is inert until the engine asks it for elements, so building
a pipeline never reads data.  ``iterate`` serves sequential execution;
``materialize`` returns a sized, sliceable view for chunked parallel work.
"""
from __future__ import annotations

import builtins
import os
from dataclasses import dataclass
from typing import Any, BinaryIO, Iterable, Iterator, Sequence

from .pipeline import NumericPipeline, Pipeline

__all__ = [
    "LiteralValues",
    "CollectionView",
    "FileLines",
    "IntRange",
    "of",
    "of_numbers",
    "from_collection",
    "from_numbers",
    "lines",
    "range",
    "range_closed",
]


@dataclass(frozen=True)
class LiteralValues:
    values: tuple

    def iterate(self) -> Iterator:
        return iter(self.values)

    def materialize(self) -> Sequence:
        return self.values

    def close(self) -> None:
        pass


@dataclass(frozen=True)
class CollectionView:
    """A live reference to a finite collection, read at terminal time."""

    collection: Iterable

    def iterate(self) -> Iterator:
        return iter(self.collection)

    def materialize(self) -> Sequence:
        c = self.collection
        if isinstance(c, (list, tuple, builtins.range)):
            return c
        return list(c)

    def close(self) -> None:
        pass


class FileLines:
    """Lines of a UTF-8 text file opened at creation time.

    Only ``"\\n"`` separates records; a ``"\\r"`` directly before it is
    dropped too.  A final terminator does not produce an empty last line.
    Decoding happens per line while reading, so invalid bytes raise
    ``UnicodeDecodeError`` at consumption rather than at creation.
    """

    def __init__(self, path: str | os.PathLike):
        self.path = os.fspath(path)
        self._handle: BinaryIO | None = open(self.path, "rb")

    def __repr__(self) -> str:
        return f"FileLines({self.path!r})"

    def iterate(self) -> Iterator[str]:
        handle = self._handle
        if handle is None:
            raise ValueError(f"file source {self.path!r} is closed")
        try:
            for raw in handle:
                if raw.endswith(b"\n"):
                    raw = raw[:-2] if raw.endswith(b"\r\n") else raw[:-1]
                yield raw.decode("utf-8")
        finally:
            self.close()

    def materialize(self) -> list[str]:
        return list(self.iterate())

    def close(self) -> None:
        if self._handle is not None:
            self._handle.close()
            self._handle = None


@dataclass(frozen=True)
class IntRange:
    lo: int
    hi: int
    inclusive: bool = False

    @property
    def stop(self) -> int:
        return self.hi + 1 if self.inclusive else self.hi

    def iterate(self) -> Iterator[int]:
        return iter(builtins.range(self.lo, self.stop))

    def materialize(self) -> builtins.range:
        # a range slices arithmetically, no list is built
        return builtins.range(self.lo, self.stop)

    def close(self) -> None:
        pass


def of(*values: Any) -> Pipeline:
    """Stream over the given values, in argument order.

    Pass an existing list with ``of(*items)``.
    """
    return Pipeline(LiteralValues(values))


def of_numbers(*values: int | float) -> NumericPipeline:
    """Numeric stream over literal ints or floats; supports ``sum``."""
    return NumericPipeline(LiteralValues(values))


def from_collection(collection: Iterable) -> Pipeline:
    return Pipeline(CollectionView(collection))


def from_numbers(collection: Iterable[int | float]) -> NumericPipeline:
    """Numeric stream over an existing collection of ints or floats."""
    return NumericPipeline(CollectionView(collection))


def lines(path: str | os.PathLike) -> Pipeline[str]:
    """Stream the lines of a text file.

    Raises ``FileNotFoundError``/``PermissionError`` immediately if the file
    cannot be opened.
    """
    return Pipeline(FileLines(path))


def range(lo: int, hi: int) -> NumericPipeline:
    """Integers ``lo, lo+1, ..., hi-1``; empty when ``lo >= hi``."""
    return NumericPipeline(IntRange(int(lo), int(hi), inclusive=False))


def range_closed(lo: int, hi: int) -> NumericPipeline:
    """Integers ``lo..hi`` inclusive; empty when ``lo > hi``."""
    return NumericPipeline(IntRange(int(lo), int(hi), inclusive=True))
