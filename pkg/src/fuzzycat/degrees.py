"""Exact plausibility degrees and t-norms.

A degree is a :class:`fractions.Fraction` in the closed unit interval.  Floats
are refused everywhere: diagram checks compare minima for equality, which only
makes sense with exact arithmetic.
"""

from __future__ import annotations

import re
from enum import Enum
from fractions import Fraction
from typing import Iterable, Union

from .errors import EmptyAggregateError, ParseError, RangeError

Degree = Fraction
DegreeLike = Union[Fraction, int, str]

ZERO = Fraction(0)
ONE = Fraction(1)

MAX_FRACTION_DIGITS = 12

_DECIMAL = re.compile(r"[+-]?(\d+)(?:\.(\d*))?|[+-]?\.(\d+)")
_RATIO = re.compile(r"([+-]?\d+)\s*/\s*(\d+)")


def parse_degree(text: str) -> Fraction:
    """Parse ``"0.4"`` or ``"2/5"`` into an exact degree.

    >>> parse_degree("0.4")
    Fraction(2, 5)
    """
    s = text.strip()
    m = _RATIO.fullmatch(s)
    if m:
        den = int(m.group(2))
        if den == 0:
            raise ParseError(f"zero denominator in degree {text!r}")
        value = Fraction(int(m.group(1)), den)
    else:
        m = _DECIMAL.fullmatch(s)
        if not m:
            raise ParseError(f"malformed degree {text!r}")
        digits = m.group(2) if m.group(2) is not None else (m.group(3) or "")
        if len(digits) > MAX_FRACTION_DIGITS:
            raise ParseError(
                f"degree {text!r} has more than {MAX_FRACTION_DIGITS} fractional digits"
            )
        value = Fraction(s)
    if not ZERO <= value <= ONE:
        raise RangeError(f"degree {text!r} is outside [0, 1]")
    return value


def as_degree(value: DegreeLike) -> Fraction:
    """Coerce an int, Fraction or degree literal, checking the range."""
    if isinstance(value, str):
        return parse_degree(value)
    if isinstance(value, bool) or not isinstance(value, (int, Fraction)):
        raise TypeError(f"degrees must be exact (int, Fraction or str), got {type(value).__name__}")
    value = Fraction(value)
    if not ZERO <= value <= ONE:
        raise RangeError(f"degree {value} is outside [0, 1]")
    return value


def format_degree(value: Fraction) -> str:
    """Shortest literal that :func:`parse_degree` maps back to ``value``.

    Terminating decimals within the digit limit are written as decimals,
    everything else as ``p/q``.
    """
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    for k in range(1, MAX_FRACTION_DIGITS + 1):
        scaled = value * 10**k
        if scaled.denominator == 1:
            whole, frac = divmod(scaled.numerator, 10**k)
            return f"{whole}.{frac:0{k}d}"
    return f"{value.numerator}/{value.denominator}"


class TNorm(Enum):
    MIN = "min"
    PRODUCT = "product"
    LUKASIEWICZ = "lukasiewicz"

    def __call__(self, a: Fraction, b: Fraction) -> Fraction:
        return tnorm_apply(self, a, b)

    @classmethod
    def from_name(cls, name: str) -> "TNorm":
        try:
            return cls(name.strip().lower())
        except ValueError:
            raise ParseError(f"unknown t-norm {name!r}") from None


def tnorm_apply(t: TNorm, a: Fraction, b: Fraction) -> Fraction:
    if t is TNorm.MIN:
        return min(a, b)
    if t is TNorm.PRODUCT:
        return a * b
    if t is TNorm.LUKASIEWICZ:
        return max(ZERO, a + b - 1)
    raise ValueError(f"not a t-norm: {t!r}")


def degree_min(values: Iterable[Fraction]) -> Fraction:
    values = list(values)
    if not values:
        raise EmptyAggregateError("minimum of an empty collection of degrees")
    return min(values)
