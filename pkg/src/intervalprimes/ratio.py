"""Exact rational ratios v > 1 used for all floor(x/v) arithmetic."""

from __future__ import annotations

from fractions import Fraction


def as_ratio(value: int | str | Fraction) -> Fraction:
    """Coerce to an exact Fraction and require value > 1.

    All ratios in this package are rational ((k+1)/k or 2 in practice), so
    floor(x / v) can be computed exactly as x*den // num with no rounding.
    """
    v = Fraction(value)
    if v <= 1:
        raise ValueError(f"ratio must be > 1, got {v}")
    return v


def floor_div_ratio(x: int, v: Fraction) -> int:
    """floor(x / v) computed exactly in integers."""
    return x * v.denominator // v.numerator


def ceil_div(a: int, b: int) -> int:
    return -(-a // b)
