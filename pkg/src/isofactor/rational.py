"""Exact rational values and their text form.

Every threshold, margin, and factor value in this package is an exact
fraction; nothing is converted to floating point.  ``fractions.Fraction``
already guarantees lowest terms, a positive denominator, and rejection of
a zero denominator, so it is used directly as the rational type.  This
module adds the "p/q" text form shared by every serialization surface,
plus the infinity marker needed by isolated toughness.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction

INFINITY = math.inf


def format_rational(value) -> str:
    """Render a rational as "p/q", a bare integer when q = 1, or "inf"."""
    if value == INFINITY:
        return "inf"
    frac = Fraction(value)
    if frac.denominator == 1:
        return str(frac.numerator)
    return f"{frac.numerator}/{frac.denominator}"


def parse_rational(text: str):
    """Parse "p/q", a bare integer, or "inf" back into an exact value.

    Raises ValueError on malformed input, including a zero denominator.
    """
    text = text.strip()
    if text == "inf":
        return INFINITY
    if not re.fullmatch(r"[+-]?\d+(/\d+)?", text):
        raise ValueError(f"invalid rational {text!r}, expected 'p' or 'p/q'")
    try:
        return Fraction(text)
    except ZeroDivisionError:
        raise ValueError(f"invalid rational {text!r}: zero denominator") from None
