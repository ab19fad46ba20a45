"""Lazy functional streams with sequential and parallel execution."""
from .exact_decimal import ExactDecimal
from .pipeline import AlreadyConsumed, ExecutionMode, NumericPipeline, Pipeline
from .sources import from_collection, from_numbers, lines, of, of_numbers, range_closed
from .sources import range  # noqa: A004 - mirrors range_closed; kept out of __all__

__all__ = [
    "AlreadyConsumed",
    "ExactDecimal",
    "ExecutionMode",
    "NumericPipeline",
    "Pipeline",
    "from_collection",
    "from_numbers",
    "lines",
    "of",
    "of_numbers",
    "range_closed",
]
