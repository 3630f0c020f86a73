"""Exact Bernoulli numbers of the second kind (Gregory coefficients), signed
Stirling numbers of the first kind, harmonic numbers, and the auxiliary table
a(n,k), each computable by several independent formulas that are cross-checked
for bit-exact agreement.

All sequence values are exact: arbitrary-precision integers or normalized
rationals.  Floating point only appears in the numeric finite-difference
verifier for the 1/ln x derivative formula.

The hot loops live in a compiled extension when it was built at install time
(``gregory._core``) and in a pure-Python twin otherwise; see
:mod:`gregory._kernels` for the selection logic and the ``bench`` CLI
subcommand for a side-by-side timing.
"""

from fractions import Fraction

from ._kernels import active_backend, available_backends, set_backend, use_backend
from .asequence import (
    ASequence,
    ProbeReport,
    a_difference_identity_check,
    a_from_stirling,
    a_nested_sum,
    probe_row,
)
from .bernoulli import (
    MethodReport,
    bernoulli2_ank,
    bernoulli2_nemes,
    bernoulli2_report,
    bernoulli2_theorem,
)
from .calculus import (
    DerivativeExpansion,
    FiniteDifferenceResult,
    central_difference_weights,
    evaluate_expansion,
    finite_difference_check,
    reciprocal_log_derivative_coeffs,
)
from .exact import decimal_string, factorial, format_rational, harmonic, parse_rational
from .series import (
    TruncatedSeries,
    bernoulli2_series,
    log1p_series,
    series_div,
    series_mul,
    series_pow,
    stirling_gf_coeff,
)
from .stirling import (
    StirlingTriangle,
    harmonic_from_stirling,
    stirling_closed_form,
    stirling_column_recurrence,
    stirling_nested_sum,
    stirling_nested_sum_direct,
    stirling_triangle,
)

__version__ = "0.1.0"

__all__ = [
    "Fraction",
    "__version__",
    "active_backend",
    "available_backends",
    "set_backend",
    "use_backend",
    "ASequence",
    "ProbeReport",
    "a_difference_identity_check",
    "a_from_stirling",
    "a_nested_sum",
    "probe_row",
    "MethodReport",
    "bernoulli2_ank",
    "bernoulli2_nemes",
    "bernoulli2_report",
    "bernoulli2_theorem",
    "DerivativeExpansion",
    "FiniteDifferenceResult",
    "central_difference_weights",
    "evaluate_expansion",
    "finite_difference_check",
    "reciprocal_log_derivative_coeffs",
    "decimal_string",
    "factorial",
    "format_rational",
    "harmonic",
    "parse_rational",
    "TruncatedSeries",
    "bernoulli2_series",
    "log1p_series",
    "series_div",
    "series_mul",
    "series_pow",
    "stirling_gf_coeff",
    "StirlingTriangle",
    "harmonic_from_stirling",
    "stirling_closed_form",
    "stirling_column_recurrence",
    "stirling_nested_sum",
    "stirling_nested_sum_direct",
    "stirling_triangle",
]
