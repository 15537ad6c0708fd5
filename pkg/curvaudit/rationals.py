"""Exact rational helpers.

``ExactRational`` is :class:`fractions.Fraction`: always in lowest terms with a
positive denominator, arbitrary precision, no rounding. This module only adds
the textual ``"p/q"`` convention used by every file format and report.
"""
from __future__ import annotations

import re
from fractions import Fraction
from typing import Union

ExactRational = Fraction

RationalLike = Union[int, str, Fraction]

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


def parse_rational(value: RationalLike) -> Fraction:
    """Parse an integer, a Fraction or a ``"p/q"`` / ``"p"`` string.

    Floats and booleans are rejected: they would silently bring rounding into
    exact data.
    """
    if isinstance(value, bool):
        raise ValueError(f"Expected a rational, received boolean {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        match = _RATIONAL_RE.match(value)
        if not match:
            raise ValueError(f"Expected a rational of the form 'p/q', received {value!r}")
        numerator = int(match.group(1))
        denominator = int(match.group(2)) if match.group(2) is not None else 1
        if denominator == 0:
            raise ValueError(f"Zero denominator in {value!r}")
        return Fraction(numerator, denominator)
    raise ValueError(f"Expected an integer or 'p/q' string, received {value!r}")


def format_rational(value: Union[int, Fraction]) -> str:
    """Render as ``"p"`` for integers and ``"p/q"`` otherwise."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


__all__ = ["ExactRational", "RationalLike", "parse_rational", "format_rational"]
