from __future__ import annotations

from decimal import ROUND_HALF_UP, Decimal
from fractions import Fraction

_Q = {d: Decimal(1).scaleb(-d) for d in range(0, 10)}


def round_half_up(value: float | Fraction | None, digits: int = 3) -> float | None:
    """Round to ``digits`` decimals with ties away from zero (table convention).

    Fractions round exactly; floats go through their shortest repr so that
    0.7585 rounds to 0.759 rather than falling to binary noise.
    """
    if value is None:
        return None
    if isinstance(value, Fraction):
        dec = Decimal(value.numerator) / Decimal(value.denominator)
    else:
        dec = Decimal(repr(float(value)))
    return float(dec.quantize(_Q[digits], rounding=ROUND_HALF_UP))


def fmt3(value: float | None) -> str:
    return "" if value is None else f"{value:.3f}"
