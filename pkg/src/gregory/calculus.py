"""Closed-form n-th derivative of 1/ln x and its numeric verification.

The exact part never touches floats: the expansion coefficients are
c_k = (-1)^k k! s(n,k), giving

    (d/dx)^n (1/ln x) = x^(-n) * sum_{k=1}^{n} c_k (1/ln x)^(k+1).

The verifier is deliberately independent of the Stirling machinery: it
estimates the derivative by a central finite-difference stencil whose weights
are solved exactly from the moment conditions, then compares in double
precision at a relative tolerance.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

from .stirling import StirlingTriangle, stirling_triangle

__all__ = [
    "DerivativeExpansion",
    "FiniteDifferenceResult",
    "reciprocal_log_derivative_coeffs",
    "evaluate_expansion",
    "central_difference_weights",
    "finite_difference_check",
]

MAX_CHECK_ORDER = 6


@dataclass
class DerivativeExpansion:
    """n and the coefficient list [(k, c_k)] with c_k = (-1)^k k! s(n,k)."""

    n: int
    coeffs: list


def reciprocal_log_derivative_coeffs(n: int, triangle: StirlingTriangle) -> DerivativeExpansion:
    """Exact expansion coefficients of the n-th derivative of 1/ln x."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if triangle.max_n < n:
        raise ValueError("triangle filled to row %d, need row %d" % (triangle.max_n, n))
    coeffs = [
        (k, (-1) ** k * math.factorial(k) * triangle.value(n, k)) for k in range(1, n + 1)
    ]
    return DerivativeExpansion(n=n, coeffs=coeffs)


def evaluate_expansion(e: DerivativeExpansion, x: float) -> float:
    """Evaluate the expansion at x > 0, x != 1 (1/ln x has a pole at 1)."""
    if x <= 0:
        raise ValueError("x must be positive")
    if x == 1:
        raise ValueError("x = 1 is the pole of 1/ln x")
    u = 1.0 / math.log(x)
    total = math.fsum(c * u ** (k + 1) for k, c in e.coeffs)
    return total / x ** e.n


def central_difference_weights(n: int):
    """Offsets and exact weights of the order-2 central stencil for f^(n).

    Uses 2*ceil(n/2) + 1 points.  The weights w_j solve the moment conditions
    sum_j w_j j^p = n! [p == n] for p = 0 .. 2m, solved in exact rational
    arithmetic, so f^(n)(x) ~ h^(-n) sum_j w_j f(x + j h) with O(h^2) error.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    m = (n + 1) // 2
    offsets = list(range(-m, m + 1))
    size = 2 * m + 1
    matrix = [[Fraction(j) ** p for j in offsets] for p in range(size)]
    rhs = [Fraction(math.factorial(n)) if p == n else Fraction(0) for p in range(size)]
    # Gauss-Jordan; the Vandermonde system is tiny (at most 7x7) and nonsingular.
    for col in range(size):
        pivot = next(r for r in range(col, size) if matrix[r][col] != 0)
        matrix[col], matrix[pivot] = matrix[pivot], matrix[col]
        rhs[col], rhs[pivot] = rhs[pivot], rhs[col]
        inv = Fraction(1) / matrix[col][col]
        matrix[col] = [v * inv for v in matrix[col]]
        rhs[col] *= inv
        for r in range(size):
            if r != col and matrix[r][col]:
                f = matrix[r][col]
                matrix[r] = [v - f * w for v, w in zip(matrix[r], matrix[col])]
                rhs[r] -= f * rhs[col]
    return offsets, rhs


@dataclass
class FiniteDifferenceResult:
    passed: bool
    residual: float  # relative deviation between stencil and closed form
    expected: float  # closed-form value
    estimate: float  # stencil value


def finite_difference_check(n: int, x: float, h: float, tol: float) -> FiniteDifferenceResult:
    """Compare the closed form against a central-difference estimate.

    Supports 1 <= n <= 6.  The stencil must stay strictly right of the pole
    at t = 1, so x - m*h > 1 is required (m is the stencil half-width).
    """
    if not 1 <= n <= MAX_CHECK_ORDER:
        raise ValueError("n must be in [1, %d]" % MAX_CHECK_ORDER)
    if h <= 0:
        raise ValueError("h must be positive")
    if x <= 1:
        raise ValueError("x must be > 1 to keep the stencil away from the pole")
    offsets, weights = central_difference_weights(n)
    if x + offsets[0] * h <= 1:
        raise ValueError(
            "stencil [%g, %g] crosses the pole at t = 1"
            % (x + offsets[0] * h, x + offsets[-1] * h)
        )
    expansion = reciprocal_log_derivative_coeffs(n, stirling_triangle(n))
    expected = evaluate_expansion(expansion, x)
    estimate = math.fsum(
        float(w) / math.log(x + j * h) for j, w in zip(offsets, weights)
    ) / h ** n
    residual = abs(estimate - expected) / abs(expected)
    return FiniteDifferenceResult(
        passed=residual <= tol, residual=residual, expected=expected, estimate=estimate
    )
