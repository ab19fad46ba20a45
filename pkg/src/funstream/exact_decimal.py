"""Lossless decimal numbers: parse, add, print.

A value is ``sign * int(digits) * 10**-scale``.  Addition aligns scales by
padding with zeros and works digit by digit on the decimal strings, so no
rounding can ever occur.  Equality compares values: ``0.3 == 0.30``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

__all__ = ["ExactDecimal", "DecimalParseError", "parse", "add", "to_string", "ZERO"]

_NUMBER = re.compile(r"([+-]?)([0-9]+)(?:\.([0-9]+))?")


class DecimalParseError(ValueError):
    pass


def _strip_leading_zeros(digits: str) -> str:
    return digits.lstrip("0") or "0"


def _compare_magnitude(a: str, b: str) -> int:
    """Compare two canonical digit strings of equal scale."""
    if len(a) != len(b):
        return -1 if len(a) < len(b) else 1
    return (a > b) - (a < b)


def _add_magnitudes(a: str, b: str) -> str:
    width = max(len(a), len(b))
    a, b = a.rjust(width, "0"), b.rjust(width, "0")
    out = []
    carry = 0
    for da, db in zip(reversed(a), reversed(b)):
        carry, d = divmod(ord(da) + ord(db) - 96 + carry, 10)
        out.append(chr(48 + d))
    if carry:
        out.append("1")
    return _strip_leading_zeros("".join(reversed(out)))


def _sub_magnitudes(a: str, b: str) -> str:
    # requires a >= b
    b = b.rjust(len(a), "0")
    out = []
    borrow = 0
    for da, db in zip(reversed(a), reversed(b)):
        d = ord(da) - ord(db) - borrow
        borrow = 1 if d < 0 else 0
        out.append(chr(48 + d + 10 * borrow))
    return _strip_leading_zeros("".join(reversed(out)))


@dataclass(frozen=True, eq=False)
class ExactDecimal:
    sign: int
    digits: str
    scale: int = 0

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign!r}")
        if not self.digits.isdigit() or not self.digits.isascii():
            raise ValueError(f"digits must be decimal digits, got {self.digits!r}")
        if self.scale < 0:
            raise ValueError("scale must be non-negative")
        object.__setattr__(self, "digits", _strip_leading_zeros(self.digits))
        if self.digits == "0":
            object.__setattr__(self, "sign", 1)

    @classmethod
    def parse(cls, text: str) -> ExactDecimal:
        """Parse ``[+-]digits[.digits]``.

        >>> ExactDecimal.parse("-25.88")
        ExactDecimal('-25.88')
        """
        m = _NUMBER.fullmatch(text)
        if m is None:
            raise DecimalParseError(f"not a decimal number: {text!r}")
        sign, whole, frac = m.groups()
        frac = frac or ""
        return cls(-1 if sign == "-" else 1, whole + frac, len(frac))

    @property
    def is_zero(self) -> bool:
        return self.digits == "0"

    def _rescaled(self, scale: int) -> str:
        return self.digits if self.is_zero else self.digits + "0" * (scale - self.scale)

    def add(self, other: ExactDecimal) -> ExactDecimal:
        scale = max(self.scale, other.scale)
        a, b = self._rescaled(scale), other._rescaled(scale)
        if self.sign == other.sign:
            return ExactDecimal(self.sign, _add_magnitudes(a, b), scale)
        order = _compare_magnitude(a, b)
        if order == 0:
            return ExactDecimal(1, "0", scale)
        if order > 0:
            return ExactDecimal(self.sign, _sub_magnitudes(a, b), scale)
        return ExactDecimal(other.sign, _sub_magnitudes(b, a), scale)

    def __add__(self, other):
        if not isinstance(other, ExactDecimal):
            return NotImplemented
        return self.add(other)

    def to_string(self) -> str:
        digits = self.digits
        if self.scale:
            digits = digits.rjust(self.scale + 1, "0")
            digits = f"{digits[:-self.scale]}.{digits[-self.scale:]}"
        return f"-{digits}" if self.sign < 0 else digits

    __str__ = to_string

    def __repr__(self) -> str:
        return f"ExactDecimal({self.to_string()!r})"

    def _normalized(self) -> tuple[int, str, int]:
        digits, scale = self.digits, self.scale
        while scale and digits.endswith("0") and digits != "0":
            digits, scale = digits[:-1], scale - 1
        if digits == "0":
            scale = 0
        return self.sign, digits, scale

    def __eq__(self, other):
        if not isinstance(other, ExactDecimal):
            return NotImplemented
        return self._normalized() == other._normalized()

    def __hash__(self):
        return hash(self._normalized())


ZERO = ExactDecimal(1, "0", 0)


def parse(text: str) -> ExactDecimal:
    return ExactDecimal.parse(text)


def add(a: ExactDecimal, b: ExactDecimal) -> ExactDecimal:
    return a.add(b)


def to_string(a: ExactDecimal) -> str:
    return a.to_string()
