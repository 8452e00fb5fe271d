"""Exact rational helpers.

All probabilities in this package are `fractions.Fraction` values. Floats
are rejected everywhere: a literal like 0.9 must be given as the string
"0.9" or as Fraction(9, 10), so that it parses to exactly 9/10 instead of
the nearest binary double.
"""

from __future__ import annotations

from decimal import Decimal, localcontext
from fractions import Fraction

from .errors import ValidationError

RationalLike = "Fraction | int | str"


def exact(value) -> Fraction:
    """Coerce `value` to an exact Fraction.

    Accepts Fraction, int, and strings in any form Fraction understands
    ("9/10", "0.9", "1"). Floats are rejected to keep every probability
    exact.
    """
    if isinstance(value, float):
        raise ValidationError(
            f"floats are not exact; pass a string or Fraction instead of {value!r}"
        )
    if isinstance(value, Fraction):
        return value
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError, TypeError) as err:
        raise ValidationError(f"not a rational literal: {value!r}") from err


def decimal_str(value: Fraction, digits: int = 12) -> str:
    """Render `value` rounded to at most `digits` significant digits."""
    with localcontext() as ctx:
        ctx.prec = digits
        return str(Decimal(value.numerator) / Decimal(value.denominator))
