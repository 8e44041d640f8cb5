import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from trigprod.coeffs import pn_coefficients, qn_coefficients
from trigprod.norms import (
    linf_norm_pn,
    lp_norm_coefficients,
    lp_norm_pn,
    lp_norm_qn,
    parseval_l2,
)
from trigprod.pointeval import log_abs_pn


def _rel(a, b):
    return abs(math.exp(a - b) - 1.0)


def test_tiny_cases():
    assert lp_norm_pn(1, 2).value.value() == pytest.approx(math.sqrt(2), rel=1e-12)
    assert lp_norm_qn(1, 2).value.value() == pytest.approx(math.sqrt(2), rel=1e-12)
    assert parseval_l2(pn_coefficients(1)).value.value() == pytest.approx(math.sqrt(2), rel=1e-15)


@pytest.mark.parametrize("n", [10, 37, 100])
def test_quadrature_matches_parseval(n):
    for fn, table in ((lp_norm_pn, pn_coefficients(n)), (lp_norm_qn, qn_coefficients(n))):
        quad = fn(n, 2)
        assert quad.method == "quadrature"
        assert _rel(quad.log_value, parseval_l2(table).log_value) <= 1e-8


@pytest.mark.parametrize("n", [6, 15, 30])
def test_p4_matches_coefficients_of_square(n):
    # ||f||_4^4 = ||f^2||_2^2 and the coefficients of P_n^2 are exact integer convolutions
    for fn, table in ((lp_norm_pn, pn_coefficients(n)), (lp_norm_qn, qn_coefficients(n))):
        c = table.as_ints()
        sq = np.convolve(np.array(c, dtype=object), np.array(c, dtype=object))
        exact = math.log(sum(int(x) ** 2 for x in sq)) / 4
        assert _rel(fn(n, 4).log_value, exact) <= 1e-8


@pytest.mark.parametrize("n", [3, 8])
def test_p1_against_trapezoid(n):
    # trapezoid on a fine grid of the full circle; |P_n| is Lipschitz so error is O(h^2)
    m = 2_000_000
    theta = np.arange(m) * (2 * np.pi / m)
    k = np.arange(1, n + 1)[:, None]
    vals = np.prod(2 * np.abs(np.sin(0.5 * k * theta)), axis=0)
    ref = vals.mean()
    assert lp_norm_pn(n, 1).value.value() == pytest.approx(ref, rel=1e-6)
    vals_q = np.prod(2 * np.abs(np.cos(0.5 * k * theta)), axis=0)
    assert lp_norm_qn(n, 1).value.value() == pytest.approx(vals_q.mean(), rel=1e-6)


@settings(max_examples=15, deadline=None)
@given(st.integers(1, 40), st.floats(1.0, 6.0))
def test_lp_monotone_in_p(n, p):
    # normalised measure: ||f||_p is nondecreasing in p
    a = lp_norm_pn(n, p, tol=1e-9).log_value
    b = lp_norm_pn(n, p + 0.5, tol=1e-9).log_value
    assert a <= b + 1e-8


def test_p_validation():
    with pytest.raises(ValueError):
        lp_norm_pn(5, 0.5)
    with pytest.raises(ValueError):
        lp_norm_qn(0, 2)


def test_coefficient_norms():
    q = qn_coefficients(20)
    assert lp_norm_coefficients(q, 1).value.value() == pytest.approx(1048576.0, rel=1e-15)
    assert math.exp(lp_norm_coefficients(q, 1).log_value) == pytest.approx(2**20)
    assert lp_norm_coefficients(pn_coefficients(6), math.inf).value.value() == pytest.approx(2.0)
    t = pn_coefficients(100)
    assert _rel(lp_norm_coefficients(t, 2).log_value, lp_norm_pn(100, 2).log_value) <= 1e-6
    # non-integer p agrees with a float oracle
    c = np.abs(pn_coefficients(30).to_float())
    ref = math.log((c**2.5).sum()) / 2.5
    assert lp_norm_coefficients(pn_coefficients(30), 2.5).log_value == pytest.approx(ref, abs=1e-12)


def test_linf_small_and_bounds():
    r = linf_norm_pn(1)
    assert r.value.value() == pytest.approx(2.0, rel=1e-14)
    for n in (2, 5, 17, 60):
        r = linf_norm_pn(n)
        assert r.value.value() >= n + 1 - 1e-9
        assert r.log_value <= math.log(sum(abs(c) for c in pn_coefficients(n).as_ints())) + 1e-12


def test_linf_against_dense_direct_scan():
    n = 12
    theta = np.linspace(0, np.pi, 400_001)
    k = np.arange(1, n + 1)[:, None]
    dense = np.prod(2 * np.abs(np.sin(0.5 * k * theta)), axis=0).max()
    r = linf_norm_pn(n).value.value()
    assert r >= dense * (1 - 1e-12)
    assert r == pytest.approx(dense, rel=1e-6)


def test_linf_attained(consts):
    n = 40
    r = linf_norm_pn(n)
    # the reported value is a genuine function value, close to the theta the peak sits at
    theta0 = 2 * math.pi * consts.w0.value / n
    assert log_abs_pn(n, theta0).log_value <= r.log_value + 1e-12


def test_linf_asymptotic_ratio(consts):
    n = 300
    r = linf_norm_pn(n)
    pred = consts.K.value * n + math.log(consts.B.value * consts.C.value) + 0.5 * math.log(n / (4 * math.pi))
    assert 0.8 <= math.exp(r.log_value - pred) <= 1.1


def test_l1_ratio_at_400(consts):
    r = lp_norm_pn(400, 1, tol=1e-8)
    ratio = math.exp(r.log_value - consts.K.value * 400 + math.log(400))
    assert abs(ratio - consts.B.value) <= 0.15 * consts.B.value


def test_q_l1_ratio_at_200():
    r = lp_norm_qn(200, 1, tol=1e-8)
    ratio = math.exp(r.log_value + 1.5 * math.log(200) - 200 * math.log(2))
    assert abs(ratio - math.sqrt(6 / math.pi)) <= 0.10 * math.sqrt(6 / math.pi)
