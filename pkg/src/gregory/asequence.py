"""The auxiliary positive table a(n,k) and its row-shape probe.

a(n,k) is defined for n >= 1 and 2 <= k <= n + 1 by a(n,2) = (n-1)! and, for
k >= 3, a(n,k) = (k-1)! (n-1)! times the (k-2)-fold nested reciprocal sum
over strictly decreasing chains below n.  It collapses to the signed Stirling
numbers through a(n,k) = (-1)^(n+k-1) (k-1)! s(n,k-1); that relation is the
fast production route, while the nested sums stay around as the literal
reference for small n.

Empirically every row rises to a single (possibly flat) peak and then falls;
that is only a conjecture, so :func:`probe_row` reports the row shape instead
of asserting it.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from . import _kernels
from .stirling import StirlingTriangle, stirling_triangle

__all__ = [
    "ASequence",
    "ProbeReport",
    "a_nested_sum",
    "a_from_stirling",
    "a_difference_identity_check",
    "probe_row",
]


class ASequence:
    """Table of a(n,k) values for 1 <= n <= max_n, 2 <= k <= n + 1."""

    __slots__ = ("_rows",)

    def __init__(self, rows):
        self._rows = rows

    @classmethod
    def from_triangle(cls, triangle: StirlingTriangle, max_n: int) -> "ASequence":
        """Fill the table through row max_n via the Stirling relation."""
        if max_n < 1:
            raise ValueError("max_n must be >= 1")
        if triangle.max_n < max_n:
            raise ValueError(
                "triangle filled to row %d, need row %d" % (triangle.max_n, max_n)
            )
        rows = [
            [a_from_stirling(n, k, triangle) for k in range(2, n + 2)]
            for n in range(1, max_n + 1)
        ]
        return cls(rows)

    @classmethod
    def build(cls, max_n: int) -> "ASequence":
        return cls.from_triangle(stirling_triangle(max_n), max_n)

    @property
    def max_n(self) -> int:
        return len(self._rows)

    def value(self, n: int, k: int) -> int:
        self._check(n, k)
        return self._rows[n - 1][k - 2]

    def row(self, n: int):
        """Row n as a tuple (a(n,2), ..., a(n,n+1))."""
        if not 1 <= n <= self.max_n:
            raise ValueError("row %d not in table (max %d)" % (n, self.max_n))
        return tuple(self._rows[n - 1])

    def _check(self, n, k):
        if not 1 <= n <= self.max_n:
            raise ValueError("row %d not in table (max %d)" % (n, self.max_n))
        if not 2 <= k <= n + 1:
            raise ValueError("need 2 <= k <= n+1, got n=%d k=%d" % (n, k))

    def __repr__(self):
        return "ASequence(max_n=%d)" % self.max_n


def a_nested_sum(n: int, k: int) -> int:
    """a(n,k) from the literal nested-sum definition (reference route)."""
    _check_indices(n, k)
    table = _kernels.nested_sum_table(k - 2, n - 1)
    num, den = table[k - 2][n - 1]
    value = Fraction(factorial(k - 1) * factorial(n - 1) * num, den)
    if value.denominator != 1:
        raise AssertionError("a(%d,%d) nested sum is not an integer" % (n, k))
    if value <= 0:
        raise AssertionError("a(%d,%d) must be positive, got %s" % (n, k, value))
    return value.numerator


def a_from_stirling(n: int, k: int, triangle: StirlingTriangle) -> int:
    """a(n,k) = (-1)^(n+k-1) (k-1)! s(n,k-1) (production route)."""
    _check_indices(n, k)
    if triangle.max_n < n:
        raise ValueError("triangle filled to row %d, need row %d" % (triangle.max_n, n))
    return (-1) ** (n + k - 1) * factorial(k - 1) * triangle.value(n, k - 1)


def a_difference_identity_check(n: int, k: int, triangle: StirlingTriangle) -> bool:
    """Check a(n,k) - n*a(n-1,k) = (-1)^(n+k-1) (k-1)! [s(n-1,k-1) + s(n-1,k-2)].

    Uses the convention s(m,0) = 0 for m >= 1, which the stored triangle
    already satisfies.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    if not 2 <= k <= n:
        raise ValueError("need 2 <= k <= n, got n=%d k=%d" % (n, k))
    if triangle.max_n < n:
        raise ValueError("triangle filled to row %d, need row %d" % (triangle.max_n, n))
    lhs = a_from_stirling(n, k, triangle) - n * a_from_stirling(n - 1, k, triangle)
    rhs = (-1) ** (n + k - 1) * factorial(k - 1) * (
        triangle.value(n - 1, k - 1) + triangle.value(n - 1, k - 2)
    )
    return lhs == rhs


@dataclass
class ProbeReport:
    """Shape summary of one a(n, .) row."""

    n: int
    row: list
    peak_indices: list  # k values where the row maximum is attained
    is_unimodal: bool
    increasing_in_n_ok: bool


def probe_row(n: int, a: ASequence, previous: ProbeReport = None) -> ProbeReport:
    """Report peak positions, unimodality, and growth against row n-1.

    A row counts as unimodal when it rises weakly to a single maximal plateau
    and falls weakly afterwards; a flat plateau of equal maxima is fine.  The
    growth check compares against ``previous.row`` when the caller supplies
    the matching report, otherwise against row n-1 of the table.
    """
    row = list(a.row(n))
    top = max(row)
    first = row.index(top)
    last = len(row) - 1 - row[::-1].index(top)
    plateau_solid = all(row[i] == top for i in range(first, last + 1))
    rising = all(row[i] <= row[i + 1] for i in range(first))
    falling = all(row[i] >= row[i + 1] for i in range(last, len(row) - 1))
    unimodal = plateau_solid and rising and falling
    peaks = [i + 2 for i in range(first, last + 1)] if plateau_solid else [
        i + 2 for i, v in enumerate(row) if v == top
    ]

    if previous is not None and previous.n == n - 1:
        prev_row = previous.row
    elif n >= 2:
        prev_row = list(a.row(n - 1))
    else:
        prev_row = None
    if prev_row is None:
        increasing = True
    else:
        increasing = all(row[i] >= prev_row[i] for i in range(len(prev_row)))

    return ProbeReport(
        n=n,
        row=row,
        peak_indices=peaks,
        is_unimodal=unimodal,
        increasing_in_n_ok=increasing,
    )


def _check_indices(n, k):
    if n < 1:
        raise ValueError("n must be >= 1")
    if not 2 <= k <= n + 1:
        raise ValueError("need 2 <= k <= n+1, got n=%d k=%d" % (n, k))
