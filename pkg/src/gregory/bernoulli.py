"""Bernoulli numbers of the second kind by four independent methods.

b_n is defined by the generating function x/ln(1+x); the series division in
:mod:`gregory.series` is therefore the reference column.  Three further
routes reach the same numbers through the Stirling triangle:

* ``nemes``:    b_n = (1/n!) sum_{k=0}^{n} s(n,k)/(k+1)
* ``theorem``:  b_n = (1/n!) sum_{k=1}^{n-1} (-1)^k s(n-1,k) / ((k+1)(k+2)),
                valid for n >= 2
* ``ank``:      b_n = (-1)^n (1/n!) (1/(n+1) + sum_{k=2}^{n}
                (a(n,k) - n a(n-1,k)) / k!), valid for n >= 2

All four must agree bit-exactly as normalized rationals; the report built by
:func:`bernoulli2_report` records that agreement per n.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .asequence import ASequence
from .series import bernoulli2_series
from .stirling import StirlingTriangle, stirling_triangle

__all__ = [
    "MethodReport",
    "bernoulli2_theorem",
    "bernoulli2_nemes",
    "bernoulli2_ank",
    "bernoulli2_report",
]


def bernoulli2_theorem(n: int, triangle: StirlingTriangle) -> Fraction:
    """b_n from row n-1 of the triangle with weights (-1)^k / ((k+1)(k+2))."""
    if n < 2:
        raise ValueError("this formula is stated for n >= 2")
    if triangle.max_n < n - 1:
        raise ValueError("triangle filled to row %d, need row %d" % (triangle.max_n, n - 1))
    total = Fraction(0)
    for k in range(1, n):
        total += Fraction((-1) ** k * triangle.value(n - 1, k), (k + 1) * (k + 2))
    return total / factorial(n)


def bernoulli2_nemes(n: int, triangle: StirlingTriangle) -> Fraction:
    """b_n from row n of the triangle with weights 1/(k+1); valid for n >= 0."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if triangle.max_n < n:
        raise ValueError("triangle filled to row %d, need row %d" % (triangle.max_n, n))
    total = Fraction(0)
    for k in range(n + 1):
        total += Fraction(triangle.value(n, k), k + 1)
    return total / factorial(n)


def bernoulli2_ank(n: int, a: ASequence) -> Fraction:
    """b_n from first differences of the a(n,k) table; valid for n >= 2."""
    if n < 2:
        raise ValueError("this formula is stated for n >= 2")
    if a.max_n < n:
        raise ValueError("a-table filled to row %d, need row %d" % (a.max_n, n))
    total = Fraction(1, n + 1)
    for k in range(2, n + 1):
        total += Fraction(a.value(n, k) - n * a.value(n - 1, k), factorial(k))
    return (-1) ** n * total / factorial(n)


@dataclass
class MethodReport:
    """Value of b_n under each method, plus the agreement flag."""

    n: int
    by_series: Fraction
    by_nemes: Fraction
    by_theorem: Fraction
    by_ank: Fraction
    agree: bool

    @classmethod
    def gather(cls, n, by_series, by_nemes, by_theorem, by_ank):
        agree = by_series == by_nemes == by_theorem == by_ank
        return cls(n, by_series, by_nemes, by_theorem, by_ank, agree)


def bernoulli2_report(max_n: int):
    """One MethodReport per n in [2, max_n], all methods sharing one table set."""
    if max_n < 2:
        raise ValueError("max_n must be >= 2")
    triangle = stirling_triangle(max_n)
    a = ASequence.from_triangle(triangle, max_n)
    series = bernoulli2_series(max_n)
    return [
        MethodReport.gather(
            n,
            series[n],
            bernoulli2_nemes(n, triangle),
            bernoulli2_theorem(n, triangle),
            bernoulli2_ank(n, a),
        )
        for n in range(2, max_n + 1)
    ]
