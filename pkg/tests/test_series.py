"""Truncated power series: the generating-function oracle."""

import random
from fractions import Fraction

import pytest

from gregory import (
    TruncatedSeries,
    bernoulli2_series,
    log1p_series,
    series_div,
    series_mul,
    series_pow,
    stirling_gf_coeff,
    stirling_triangle,
)
from gregory.series import one_series, x_series

F = Fraction

GOLDEN_B = [F(1), F(1, 2), F(-1, 12), F(1, 24), F(-19, 720), F(3, 160)]


def S(*coeffs):
    return TruncatedSeries([F(c) for c in coeffs])


def test_log1p_examples():
    assert log1p_series(0) == S(0)
    assert log1p_series(3) == S(0, 1, F(-1, 2), F(1, 3))
    assert log1p_series(5)[5] == F(1, 5)


def test_log1p_rejects_negative_order():
    with pytest.raises(ValueError):
        log1p_series(-1)


def test_mul_examples():
    assert series_mul(S(1, 1), S(1, 1)) == S(1, 2)
    assert series_mul(S(0, 1, 0), S(0, 1, 0)) == S(0, 0, 1)
    sq = series_mul(log1p_series(4), log1p_series(4))
    assert sq[3] == F(-1)  # 2 * (1) * (-1/2)


def test_mul_order_mismatch_rejected():
    with pytest.raises(ValueError):
        series_mul(S(1, 1), S(1, 1, 1))


def test_div_geometric():
    assert series_div(S(1, 0, 0), S(1, 1, 0)) == S(1, -1, 1)


def test_div_bernoulli_prefix():
    # x / ln(1+x) needs order 4 inputs to determine coefficients through x^3
    q = series_div(x_series(4), log1p_series(4))
    assert q == S(1, F(1, 2), F(-1, 12), F(1, 24))
    assert q.order == 3


def test_div_self_is_one():
    for s in (S(3, 1, 4), S(1, 0, -2, 7), log1p_series(5)):
        v = s.valuation()
        assert series_div(s, s) == one_series(s.order - v)


def test_div_by_zero_series_rejected():
    with pytest.raises(ZeroDivisionError):
        series_div(S(1, 2), S(0, 0))


def test_div_valuation_violation_rejected():
    with pytest.raises(ValueError):
        series_div(S(1, 0, 0), S(0, 1, 0))  # 1/x is not a power series


def test_div_mul_round_trip_random():
    rng = random.Random(77)
    for _ in range(60):
        order = rng.randint(1, 8)
        a = TruncatedSeries(
            [F(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(order + 1)]
        )
        b_coeffs = [F(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(order + 1)]
        b_coeffs[0] = F(rng.randint(1, 9), rng.randint(1, 9))  # unit constant term
        b = TruncatedSeries(b_coeffs)
        assert series_mul(series_div(a, b), b) == a


def test_div_round_trip_with_valuation_shift():
    b = log1p_series(6)  # valuation 1
    a = series_mul(x_series(6), b)  # valuation 2
    q = series_div(a, b)
    assert q.order == 5
    assert q == x_series(5)


def test_pow_examples():
    s = log1p_series(3)
    assert series_pow(s, 0) == one_series(3)
    assert series_pow(s, 1) == s
    assert series_pow(log1p_series(4), 2)[2] == F(1)
    with pytest.raises(ValueError):
        series_pow(s, -1)


def test_stirling_gf_examples():
    assert stirling_gf_coeff(1, 1, 1) == 1
    assert stirling_gf_coeff(3, 2, 3) == -3
    assert stirling_gf_coeff(4, 2, 4) == 11


def test_stirling_gf_range_check():
    with pytest.raises(ValueError):
        stirling_gf_coeff(3, 5, 10)
    with pytest.raises(ValueError):
        stirling_gf_coeff(5, 1, 4)


def test_stirling_gf_is_integral_and_matches_triangle():
    top = 15
    triangle = stirling_triangle(top)
    log = log1p_series(top)
    power = one_series(top)
    for k in range(1, top + 1):
        power = series_mul(power, log)
        for n in range(k, top + 1):
            value = stirling_gf_coeff(n, k, top) if n <= 6 else _from_power(power, n, k)
            assert value.denominator == 1
            assert value == triangle.value(n, k)


def _from_power(power, n, k):
    from math import factorial

    return power[n] * factorial(n) / factorial(k)


def test_bernoulli2_series_examples():
    assert bernoulli2_series(0) == [F(1)]
    assert bernoulli2_series(2) == [F(1), F(1, 2), F(-1, 12)]
    assert bernoulli2_series(5) == GOLDEN_B
    assert bernoulli2_series(6)[4] == F(-19, 720)
    with pytest.raises(ValueError):
        bernoulli2_series(-1)


def test_series_immutable():
    s = S(1, 2, 3)
    with pytest.raises(AttributeError):
        s.coeffs = ()
