import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from trigprod.coeffs import pn_coefficients, qn_coefficients
from trigprod.pointeval import (
    ScaledMagnitude,
    abs_pn_from_coefficients,
    log_abs_pn,
    log_abs_pn_at_3pi_over_2n,
    log_abs_qn,
    log_cosine_product,
    log_sine_product,
)


def test_examples_p():
    assert log_abs_pn(4, Fraction(2, 5)).log_value == pytest.approx(math.log(5), abs=1e-14)
    assert log_abs_pn(4, 2 * math.pi / 5).log_value == pytest.approx(math.log(5), abs=1e-13)
    assert log_abs_pn(7, 0.0).is_zero
    assert log_abs_pn(7, Fraction(0)).is_zero
    assert log_abs_pn(1, math.pi).log_value == pytest.approx(math.log(2), abs=1e-15)


def test_examples_q():
    assert log_abs_qn(9, 0.0).log_value == pytest.approx(9 * math.log(2), abs=1e-14)
    assert log_abs_qn(4, Fraction(2, 5)).log_value == pytest.approx(0.0, abs=1e-14)
    assert log_abs_qn(3, Fraction(1, 2)).is_zero
    assert log_abs_qn(3, math.pi / 2).is_zero


def test_big_point():
    assert log_abs_pn_at_3pi_over_2n(1).log_value == pytest.approx(0.5 * math.log(2), abs=1e-15)
    assert log_abs_pn_at_3pi_over_2n(10).log_value == log_abs_pn(10, Fraction(3, 20)).log_value


def test_float_zero_detection_at_rational_angles():
    # theta = 2 pi h / k hits a zero of P_n whenever k <= n
    for k in range(1, 30):
        assert log_abs_pn(30, 2 * math.pi / k).is_zero


@pytest.mark.parametrize("n", [1, 2, 7, 50, 1000])
def test_roots_of_unity_identity(n):
    for h in (1, n // 2 + 1):
        if math.gcd(h, n + 1) != 1:
            continue
        v = log_abs_pn(n, 2 * math.pi * h / (n + 1)).value()
        assert v == pytest.approx(n + 1, rel=1e-10)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 25), st.floats(0.0, 2 * math.pi))
def test_product_matches_coefficient_evaluation(n, theta):
    # summing coefficients cancels; its rounding error scales with sum |c_j|
    p = pn_coefficients(n).as_ints()
    via = abs_pn_from_coefficients(p, theta)
    slack = 1e-13 * sum(abs(c) for c in p)
    assert log_abs_pn(n, theta).value() == pytest.approx(via, rel=1e-9, abs=slack)
    q = qn_coefficients(n).as_ints()
    zq = abs(math.fsum(c * math.cos(j * theta) for j, c in enumerate(q))
             + 1j * math.fsum(c * math.sin(j * theta) for j, c in enumerate(q)))
    assert log_abs_qn(n, theta).value() == pytest.approx(zq, rel=1e-9, abs=1e-13 * 2**n)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 40), st.fractions(min_value=0, max_value=4, max_denominator=50))
def test_rational_and_float_paths_agree(n, r):
    exact = log_abs_pn(n, r)
    approx = log_abs_pn(n, float(r) * math.pi)
    if exact.is_zero:
        assert approx.is_zero or approx.log_value < -25
    else:
        assert approx.log_value == pytest.approx(exact.log_value, abs=1e-9)


def test_vectorised_kernels():
    t = np.array([0.03, 0.13, 0.2371, 0.45])
    s = log_sine_product(5, t)
    c = log_cosine_product(5, t)
    for i, ti in enumerate(t):
        assert s[i] == pytest.approx(log_abs_pn(5, 2 * math.pi * ti).log_value, abs=1e-12)
        assert c[i] == pytest.approx(log_abs_qn(5, 2 * math.pi * ti).log_value, abs=1e-12)
    assert np.isneginf(log_sine_product(5, np.array([0.0])))[0]


def test_scaled_magnitude_arithmetic():
    a = ScaledMagnitude.from_value(2**2000)
    b = ScaledMagnitude.from_value(2**1999)
    assert a.value() == math.inf
    assert a.ratio(b) == pytest.approx(2.0)
    assert (a * ScaledMagnitude.zero()).is_zero
    assert (a**0.5).log_value == pytest.approx(1000 * math.log(2))
    with pytest.raises(ZeroDivisionError):
        a / ScaledMagnitude.zero()
    with pytest.raises(ValueError):
        ScaledMagnitude(math.nan)
    with pytest.raises(ValueError):
        ScaledMagnitude.from_value(-1)
