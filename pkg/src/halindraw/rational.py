"""Exact rational number kernel shared by constructors and validators.

All geometry in this package is exact: x-coordinates are rationals, layers
are integers.  gmpy2's mpq is used when available (it is drop-in compatible
and much faster on large numerators); otherwise fractions.Fraction.
"""

from __future__ import annotations

from fractions import Fraction

try:
    from gmpy2 import mpq as Rat
except ImportError:  # pragma: no cover - gmpy2 is normally present
    Rat = Fraction

RatLike = object  # int, Fraction or mpq; all interoperate


def rat(num, den=1):
    """Build an exact rational."""
    return Rat(num, den)


def parse_rat(text: str):
    """Parse "p" or "p/q" into an exact rational.

    Raises ValueError on anything else (floats are rejected on purpose:
    drawing documents must stay exact).
    """
    s = text.strip()
    if "/" in s:
        p, q = s.split("/", 1)
        num, den = int(p), int(q)
        if den == 0:
            raise ValueError(f"zero denominator in rational {text!r}")
        return Rat(num, den)
    return Rat(int(s))


def format_rat(value) -> str:
    """Format a rational as "p" or "p/q" (lossless round-trip)."""
    f = Fraction(value)
    if f.denominator == 1:
        return str(f.numerator)
    return f"{f.numerator}/{f.denominator}"
