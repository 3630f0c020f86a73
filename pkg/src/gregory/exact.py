"""Exact arithmetic substrate: big integers, normalized rationals, harmonic numbers.

Python ints are already exact at any size, and ``fractions.Fraction`` keeps
every value normalized (positive denominator, coprime parts, zero as 0/1),
so those are the number types used throughout the package.  This module adds
the handful of named operations the rest of the code builds on.
"""

from fractions import Fraction
from math import factorial

__all__ = [
    "Fraction",
    "factorial",
    "harmonic",
    "format_rational",
    "parse_rational",
    "decimal_string",
]


def harmonic(n: int) -> Fraction:
    """H(n) = 1 + 1/2 + ... + 1/n as an exact rational; H(0) = 0.

    Computed by direct summation (each addition reduces by gcd), so it can
    serve as an independent reference for the Stirling-number route in
    :func:`gregory.stirling.harmonic_from_stirling`.
    """
    if n < 0:
        raise ValueError("harmonic() is defined for n >= 0")
    total = Fraction(0)
    for k in range(1, n + 1):
        total += Fraction(1, k)
    return total


def format_rational(q) -> str:
    """Render a rational as 'p/q', or just 'p' for integers."""
    return str(Fraction(q))


def parse_rational(text: str) -> Fraction:
    """Inverse of :func:`format_rational`; raises ValueError on junk."""
    return Fraction(text.strip())


def decimal_string(q, digits: int) -> str:
    """Fixed-point decimal expansion of a rational, round-half-even.

    ``digits`` is the number of places after the point; 0 gives an integer
    string.  The sign is dropped when the rounded value is zero.
    """
    if digits < 0:
        raise ValueError("digits must be >= 0")
    q = Fraction(q)
    shift = 10 ** digits
    scaled, rem = divmod(abs(q.numerator) * shift, q.denominator)
    double = 2 * rem
    if double > q.denominator or (double == q.denominator and scaled % 2 == 1):
        scaled += 1
    sign = "-" if q < 0 and scaled > 0 else ""
    if digits == 0:
        return sign + str(scaled)
    whole, frac = divmod(scaled, shift)
    return "%s%d.%0*d" % (sign, whole, digits, frac)
