"""L^p norms of P_n and Q_n on the circle and l^p norms of their coefficients.

With theta = 2 pi t and the symmetry t -> 1 - t,

    ||P_n||_p^p = 2 int_0^{1/2} Pi_n(t)^p dt,   Pi_n(t)  = prod 2|sin(pi k t)|,
    ||Q_n||_p^p = 2 int_0^{1/2} Psi_n(t)^p dt,  Psi_n(t) = prod 2|cos(pi k t)|.

The integrands are handled as (Pi_n / M)^p with M close to their peak, and
recombined in log space.  Almost all of the mass sits in a window of width
~n^{-3/2} around t = w0/n (for P) or t = 0 (for Q); the window edges are
forced panel breakpoints so the adaptive integrator refines there first.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

import numpy as np
import scipy.fft

from .coeffs import CoefficientTable, pn_coefficients
from .constants import compute_constants
from .pointeval import ScaledMagnitude, log_cosine_product, log_sine_product
from .quadrature import integrate_adaptive

Method = Literal["quadrature", "parseval", "coefficient-sum", "scan-refine"]

DEFAULT_TOL = 1e-10
WINDOW_HALF_WIDTHS = 10.0
LINF_GRID_FACTOR = 64
LINF_TOP_BRACKETS = 32


@dataclass(frozen=True)
class NormResult:
    value: ScaledMagnitude
    p: float
    method: Method
    error_estimate: float  # relative

    @property
    def log_value(self) -> float:
        return self.value.log_value


def _check_p(p: float) -> float:
    p = float(p)
    if not p >= 1.0:
        raise ValueError(f"p must be >= 1, got {p}")
    return p


def _lp_norm_product(n: int, p: float, tol: float, kernel, centre: float) -> NormResult:
    if n < 1:
        raise ValueError("n must be positive")
    p = _check_p(p)
    if math.isinf(p):
        raise ValueError("use linf_norm_pn for p = inf")
    half = WINDOW_HALF_WIDTHS * n**-1.5
    coarse = np.linspace(0.0, 0.5, 4 * n + 1)[1:-1]
    log_m = float(max(kernel(n, coarse).max(), kernel(n, np.array([max(centre, 1e-300)]))[0]))

    def integrand(t: np.ndarray) -> np.ndarray:
        return np.exp(p * (kernel(n, t) - log_m))

    res = integrate_adaptive(
        integrand,
        0.0,
        0.5,
        tol,
        breakpoints=(centre - half, centre + half),
        initial_panels=max(4, n),
    )
    log_norm = (math.log(2.0 * res.value)) / p + log_m
    rel = res.error_estimate / res.value / p
    return NormResult(ScaledMagnitude(log_norm), p, "quadrature", rel)


def lp_norm_pn(n: int, p: float, tol: float = DEFAULT_TOL) -> NormResult:
    """||P_n||_p by quadrature, 1 <= p < inf."""
    w0 = compute_constants().w0.value
    return _lp_norm_product(n, p, tol, log_sine_product, w0 / n)


def lp_norm_qn(n: int, p: float, tol: float = DEFAULT_TOL) -> NormResult:
    """||Q_n||_p by quadrature, 1 <= p < inf."""
    return _lp_norm_product(n, p, tol, log_cosine_product, 0.0)


def lp_norm_coefficients(table: CoefficientTable, p: float) -> NormResult:
    """l^p norm of a coefficient table.

    Exact integer arithmetic for p = inf and integer p (so p = 2 is the exact
    Parseval value); other p factor out the largest coefficient.
    """
    p = _check_p(p)
    mags = [abs(int(c)) for c in table.coeffs]
    if math.isinf(p):
        return NormResult(ScaledMagnitude.from_value(max(mags)), p, "coefficient-sum", 0.0)
    if p.is_integer():
        e = int(p)
        total = sum(m**e for m in mags)
        return NormResult(ScaledMagnitude(math.log(total) / p), p, "coefficient-sum", 0.0)
    top = max(mags)
    s = math.fsum((m / top) ** p for m in mags if m)
    log_norm = math.log(top) + math.log(s) / p
    return NormResult(ScaledMagnitude(log_norm), p, "coefficient-sum", 4 * len(mags) * 2.0**-53)


def parseval_l2(table: CoefficientTable) -> NormResult:
    """||P_n||_2 or ||Q_n||_2 from the exact coefficient sum of squares."""
    r = lp_norm_coefficients(table, 2)
    return NormResult(r.value, 2.0, "parseval", 0.0)


# --------------------------------------------------------------------------
# L^infinity of P_n


def _golden_max(f, lo: float, hi: float, tol: float) -> tuple[float, float]:
    invphi = (math.sqrt(5.0) - 1.0) / 2.0
    x1 = hi - invphi * (hi - lo)
    x2 = lo + invphi * (hi - lo)
    f1, f2 = f(x1), f(x2)
    while hi - lo > tol:
        if f1 >= f2:
            hi, x2, f2 = x2, x1, f1
            x1 = hi - invphi * (hi - lo)
            f1 = f(x1)
        else:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + invphi * (hi - lo)
            f2 = f(x2)
    return (x1, f1) if f1 >= f2 else (x2, f2)


def linf_norm_pn(
    n: int,
    tol: float = 1e-12,
    *,
    table: CoefficientTable | None = None,
    grid_factor: int = LINF_GRID_FACTOR,
    top: int = LINF_TOP_BRACKETS,
) -> NormResult:
    """max |P_n| on the circle: grid scan, then golden-section refinement.

    The scan evaluates P_n at ``grid_factor * n^2`` equispaced angles in
    [0, pi] from its coefficients with one real FFT.  The ``top`` highest
    local maxima are refined on the direct product, so the reported value is
    a value actually attained by |P_n|.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if table is None:
        table = pn_coefficients(n)
    coeffs = table.to_float()
    scale = float(np.max(np.abs(coeffs)))
    half_grid = grid_factor * n * n
    length = 2 * scipy.fft.next_fast_len((max(2 * half_grid, len(coeffs)) + 1) // 2, real=True)
    vals = np.abs(scipy.fft.rfft(coeffs / scale, n=length))
    # local maxima over theta_j = 2 pi j / length, j = 0 .. length/2
    padded = np.concatenate([vals[1:2], vals, vals[-2:-1]])
    is_peak = (padded[1:-1] >= padded[:-2]) & (padded[1:-1] >= padded[2:])
    peaks = np.flatnonzero(is_peak)
    peaks = peaks[np.argsort(vals[peaks])[::-1][:top]]

    ks = np.arange(1, n + 1, dtype=np.float64)
    log2n = n * math.log(2.0)

    def log_abs(theta: float) -> float:
        with np.errstate(divide="ignore"):
            return log2n + float(np.sum(np.log(np.abs(np.sin(0.5 * theta * ks)))))

    step = 2.0 * math.pi / length
    best = -math.inf
    for j in peaks:
        lo = max(0.0, (j - 1) * step)
        hi = min(math.pi, (j + 1) * step)
        _, val = _golden_max(log_abs, lo, hi, tol)
        best = max(best, val, log_abs(j * step))
    return NormResult(ScaledMagnitude(best), math.inf, "scan-refine", 0.0)
