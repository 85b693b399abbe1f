"""Rational <-> string conversions used by every JSON surface.

All rationals cross process boundaries as exact strings: "p/q" when the
denominator is not 1, plain "p" otherwise.  No floats, ever.
"""

from fractions import Fraction


def rat_to_str(x: Fraction | int) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def rat_from_str(s: str) -> Fraction:
    return Fraction(s.strip())
