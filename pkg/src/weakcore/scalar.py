"""Exact rational scalars.

Every entry of every matrix in this package is a :class:`fractions.Fraction`,
which already keeps a positive denominator and lowest terms at construction.
This module adds the strict text grammar used by the JSON matrix format::

    -? digits ( "/" digits )?
"""

from __future__ import annotations

import re
from fractions import Fraction

Rational = Fraction

_GRAMMAR = re.compile(r"-?[0-9]+(?:/[0-9]+)?")


class RationalParseError(ValueError):
    """Malformed rational text. ``position`` is the 0-based offending column."""

    def __init__(self, text: str, position: int, reason: str):
        self.text = text
        self.position = position
        self.reason = reason
        super().__init__(f"{reason} at position {position} in {text!r}")


def rat_make(num: int, den: int = 1) -> Fraction:
    if den == 0:
        raise ZeroDivisionError(f"zero denominator in {num}/{den}")
    return Fraction(num, den)


def _first_bad_position(text: str) -> int:
    pos = 0
    if text[:1] == "-":
        pos = 1
    start = pos
    while pos < len(text) and text[pos].isdigit():
        pos += 1
    if pos == start:
        return pos
    if pos < len(text) and text[pos] == "/":
        pos += 1
        start = pos
        while pos < len(text) and text[pos].isdigit():
            pos += 1
        if pos == start:
            return pos
    return pos


def rat_parse(text: str) -> Fraction:
    """Parse ``text`` into a canonical rational.

    Whitespace, decimal points, exponents and ``+`` signs are rejected so
    that only exact, canonical-looking strings enter a computation.
    """
    if not isinstance(text, str):
        raise RationalParseError(repr(text), 0, "expected a string")
    if _GRAMMAR.fullmatch(text) is None:
        raise RationalParseError(text, _first_bad_position(text), "malformed rational")
    num, _, den = text.partition("/")
    if den and int(den) == 0:
        raise RationalParseError(text, text.index("/") + 1, "zero denominator")
    return Fraction(int(num), int(den) if den else 1)


def rat_format(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"
