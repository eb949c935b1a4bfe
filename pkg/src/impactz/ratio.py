"""Exact non-negative rational values and their decimal rendering.

All indicator values are carried as canonical reduced fractions so that
ordering comparisons are exact; floats appear only at the display boundary.
"""

from __future__ import annotations

from fractions import Fraction


class Ratio(Fraction):
    """A canonical reduced fraction with num >= 0 and den > 0.

    Inherits exact comparison from Fraction (cross-multiplication on big
    integers), so ordering never loses precision.
    """

    def __new__(cls, numerator=0, denominator=None):
        self = super().__new__(cls, numerator, denominator)
        if self.numerator < 0:
            raise ValueError(f"Ratio must be non-negative, got {self}")
        return self

    @property
    def num(self) -> int:
        return self.numerator

    @property
    def den(self) -> int:
        return self.denominator

    def __repr__(self) -> str:
        return f"Ratio({self.numerator}, {self.denominator})"


def format_exact(r: Fraction) -> str:
    """Render as ``num/den``, always with an explicit denominator."""
    return f"{r.numerator}/{r.denominator}"


def to_decimal(r: Fraction, places: int = 2) -> str:
    """Fixed-point decimal string, rounded half-up.

    Half-up (not banker's) rounding: 17/8 at two places is "2.13".
    """
    if places < 0:
        raise ValueError("places must be >= 0")
    scaled = r.numerator * 10**places
    q, rem = divmod(scaled, r.denominator)
    if 2 * rem >= r.denominator:
        q += 1
    if places == 0:
        return str(q)
    digits = str(q).rjust(places + 1, "0")
    return f"{digits[:-places]}.{digits[-places:]}"
