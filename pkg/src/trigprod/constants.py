"""Analytic constants governing the growth of P_n and Q_n.

=========  =============================================================
w0         maximiser on (0, 1) of  g(w) = w^{-1} int_0^w log sin(pi t) dt,
           equivalently the zero of  F(w) = int_0^w t cot(pi t) dt
K          log 2 + g(w0), the exponential growth rate of P_n
B          2 e^K (1 - e^{2K}/4)^{-1/4}
C          sqrt(-(pi / (2 w0)) cot(pi w0)); g''(w0) = -2 C^2
G          Catalan's constant
A          2G / (3 pi), the growth rate of |P_n(3 pi / 2n)|
=========  =============================================================

Errors are propagated to first order only.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .errors import DomainError
from .quadrature import find_root, integrate_singular

DEFAULT_TOL = 1e-12
W0_BRACKET = (0.5, 0.95)

# decimals printed in the literature, kept for reporting only
PUBLISHED = {
    "w0": 0.7912265710,
    "K": 0.1986176152,
    "eK": 1.219715476,
    "B": 2.740222990,
    "C": 1.606193491,
    "G": 0.9159655942,
    "eA": 1.214550362,
    "l2_prefactor_p": 1.551046691,
}


@dataclass(frozen=True)
class Estimate:
    value: float
    error: float


@dataclass(frozen=True)
class ConstantsSet:
    w0: Estimate
    K: Estimate
    B: Estimate
    C: Estimate
    G: Estimate
    A: Estimate
    eK: float | None = None
    eA: float | None = None
    l2_prefactor_p: float | None = None
    linf_prefactor_p: float | None = None
    q_l1_prefactor: float | None = None

    def as_rows(self) -> list[tuple[str, float, float, float | None]]:
        """(name, value, error, published value) for display."""
        rows = [
            ("w0", self.w0.value, self.w0.error),
            ("K", self.K.value, self.K.error),
            ("eK", self.eK, self.eK * self.K.error),
            ("B", self.B.value, self.B.error),
            ("C", self.C.value, self.C.error),
            ("G", self.G.value, self.G.error),
            ("A", self.A.value, self.A.error),
            ("eA", self.eA, self.eA * self.A.error),
            ("l2_prefactor_p", self.l2_prefactor_p, _l2_error(self)),
            ("linf_prefactor_p", self.linf_prefactor_p, None),
            ("q_l1_prefactor", self.q_l1_prefactor, 0.0),
        ]
        return [(name, v, e, PUBLISHED.get(name)) for name, v, e in rows]


def _l2_error(cs: ConstantsSet) -> float:
    return cs.l2_prefactor_p * (cs.B.error / cs.B.value + 0.5 * cs.C.error / cs.C.value)


# --------------------------------------------------------------------------


def _t_cot(t: np.ndarray) -> np.ndarray:
    # removable singularity at 0: t cot(pi t) -> 1/pi - pi t^2 / 3
    small = np.abs(t) < 1e-6
    safe = np.where(small, 0.5, t)
    return np.where(small, 1.0 / np.pi - np.pi * t * t / 3.0, safe / np.tan(np.pi * safe))


def _log_sin_pi(t: np.ndarray) -> np.ndarray:
    return np.log(np.sin(np.pi * t))


def stationarity_integral(w: float, tol: float = DEFAULT_TOL) -> float:
    """F(w) = int_0^w t cot(pi t) dt."""
    return integrate_singular(_t_cot, 0.0, w, tol).value


def log_sine_mean(w: float, tol: float = DEFAULT_TOL) -> float:
    """g(w) = w^{-1} int_0^w log sin(pi t) dt."""
    return integrate_singular(_log_sin_pi, 0.0, w, tol).value / w


def compute_w0(tol: float = DEFAULT_TOL) -> Estimate:
    if tol < 1e-13:
        raise DomainError("tol below 1e-13 is not attainable in double precision")
    quad_tol = min(tol, 1e-13)
    res = find_root(lambda w: stationarity_integral(w, quad_tol), *W0_BRACKET, tol=tol)
    # F'(w0) = w0 cot(pi w0); a quadrature error q moves the root by q / |F'|
    slope = abs(res.root / math.tan(math.pi * res.root))
    return Estimate(res.root, res.bracket_width + quad_tol / slope)


def compute_K(w0: Estimate, tol: float = DEFAULT_TOL) -> Estimate:
    res = integrate_singular(_log_sin_pi, 0.0, w0.value, tol)
    k = math.log(2.0) + res.value / w0.value
    # g'(w0) = 0, so the w0 error enters only at second order (|g''| = 2 C^2 < 6)
    err = res.error_estimate / w0.value + 3.0 * w0.error**2 + 4.0 * math.ulp(k)
    return Estimate(k, err)


def compute_B(K: Estimate | float) -> Estimate:
    k, dk = (K.value, K.error) if isinstance(K, Estimate) else (float(K), 0.0)
    inner = 1.0 - 0.25 * math.exp(2.0 * k)
    if inner <= 0:
        raise DomainError("e^{2K} >= 4: B undefined")
    b = 2.0 * math.exp(k) * inner**-0.25
    # d log B / dK = 1 + (e^{2K} / 8) / inner
    dlog = 1.0 + 0.125 * math.exp(2.0 * k) / inner
    return Estimate(b, b * dlog * dk + 4.0 * math.ulp(b))


def compute_C(w0: Estimate | float) -> Estimate:
    w, dw = (w0.value, w0.error) if isinstance(w0, Estimate) else (float(w0), 0.0)
    if not 0.5 < w < 1.0:
        raise DomainError("w0 must lie in (1/2, 1) for cot(pi w0) < 0")
    c2 = -0.5 * (math.pi / w) * (math.cos(math.pi * w) / math.sin(math.pi * w))
    if c2 <= 0:
        raise DomainError("C^2 <= 0")
    c = math.sqrt(c2)
    # numerical derivative of C in w0 is plenty for first-order propagation
    h = 1e-6
    dc = abs(
        math.sqrt(-0.5 * math.pi / (w + h) / math.tan(math.pi * (w + h)))
        - math.sqrt(-0.5 * math.pi / (w - h) / math.tan(math.pi * (w - h)))
    ) / (2 * h)
    return Estimate(c, dc * dw)


def _euler_transform_tail(a: list[Fraction]) -> tuple[float, float]:
    """Sum_{k>=0} (-1)^k a_k via the Euler transform of the given terms.

    Forward differences are computed exactly in rationals.  Returns the
    estimate and the last term used (an error proxy).
    """
    total = Fraction(0)
    row = list(a)
    last = Fraction(0)
    for j in range(len(a)):
        last = row[0] / 2 ** (j + 1)
        total += last if j % 2 == 0 else -last
        row = [row[i + 1] - row[i] for i in range(len(row) - 1)]
        if not row:
            break
    return float(total), abs(float(last))


def compute_catalan(tol: float = DEFAULT_TOL) -> Estimate:
    """Catalan's constant: the alternating series sum (-1)^k / (2k+1)^2.

    The first terms are summed directly; the tail gets an Euler transform
    (van Wijngaarden's split) whose terms shrink at least geometrically.
    """
    if tol < 1e-13:
        raise DomainError("tol below 1e-13 is not attainable in double precision")
    head = 10
    head_sum = math.fsum((-1) ** k / (2 * k + 1) ** 2 for k in range(head))
    n_terms = 8
    while True:
        tail_terms = [Fraction(1, (2 * (head + i) + 1) ** 2) for i in range(n_terms)]
        tail, last = _euler_transform_tail(tail_terms)
        if 2.0 * last <= tol or n_terms > 200:
            break
        n_terms *= 2
    sign = -1 if head % 2 else 1
    return Estimate(head_sum + sign * tail, 2.0 * last + 4 * math.ulp(1.0))


def derived_prefactors(cs: ConstantsSet) -> ConstantsSet:
    B, C, K, A = cs.B.value, cs.C.value, cs.K.value, cs.A.value
    return ConstantsSet(
        w0=cs.w0,
        K=cs.K,
        B=cs.B,
        C=cs.C,
        G=cs.G,
        A=cs.A,
        eK=math.exp(K),
        eA=math.exp(A),
        l2_prefactor_p=2.0**-0.75 * math.pi**-0.25 * B * math.sqrt(C),
        linf_prefactor_p=B * C / math.sqrt(4.0 * math.pi),
        q_l1_prefactor=math.sqrt(6.0 / math.pi),
    )


@lru_cache(maxsize=8)
def compute_constants(tol: float = DEFAULT_TOL) -> ConstantsSet:
    """All constants at the given tolerance (cached; the result is immutable)."""
    w0 = compute_w0(tol)
    K = compute_K(w0, tol)
    B = compute_B(K)
    C = compute_C(w0)
    G = compute_catalan(tol)
    A = Estimate(2.0 * G.value / (3.0 * math.pi), 2.0 * G.error / (3.0 * math.pi))
    return derived_prefactors(ConstantsSet(w0=w0, K=K, B=B, C=C, G=G, A=A))
