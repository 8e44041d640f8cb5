"""Numerical kernels: two integrators and a bracketing root finder.

Integrands are called with numpy arrays of abscissae and must return an
array of the same shape.

* :func:`integrate_singular` is tanh-sinh (double exponential) quadrature.
  Endpoint distances are computed directly, so an integrand like
  ``log(sin(pi t))`` on ``[0, w]`` is never evaluated at ``t == 0``.
* :func:`integrate_adaptive` bisects Gauss-Legendre panels of order 15.
  Gauss nodes are interior, so panel endpoints (where our integrands may
  vanish and their logs be ``-inf``) are never sampled.
* :func:`find_root` is Brent's method.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from .errors import AccuracyError, DomainError

Integrand = Callable[[np.ndarray], np.ndarray]

TANH_SINH_MAX_LEVEL = 12
TANH_SINH_TMAX = 4.5
GL_ORDER = 15
DEFAULT_MAX_DEPTH = 48

_GL_X, _GL_W = np.polynomial.legendre.leggauss(GL_ORDER)
_EPS = float(np.finfo(float).eps)


@dataclass(frozen=True)
class IntegralResult:
    value: float
    error_estimate: float
    evaluations: int

    def __post_init__(self):
        if not math.isfinite(self.value):
            raise ValueError(f"non-finite integral value {self.value!r}")
        if self.error_estimate < 0 or self.evaluations <= 0:
            raise ValueError("error estimate must be >= 0 and evaluations > 0")


@dataclass(frozen=True)
class RootResult:
    root: float
    residual: float
    bracket_width: float
    #: best |f| seen after each iteration (non-increasing by construction)
    history: tuple[float, ...] = field(default=(), compare=False)


# --------------------------------------------------------------------------
# tanh-sinh


def _tanh_sinh_sum(f: Integrand, a: float, b: float, t: np.ndarray) -> tuple[float, int]:
    """Sum of w(t) f(x(t)) over the given nodes t >= 0 (t=0 weighted by 1/2)."""
    hl = 0.5 * (b - a)
    u = 0.5 * math.pi * np.sinh(t)
    cu = np.cosh(u)
    w = 0.5 * math.pi * np.cosh(t) / (cu * cu) * hl
    # distance from either endpoint: hl * (1 - tanh u) = 2 hl / (exp(2u) + 1)
    d = 2.0 * hl / (np.exp(2.0 * u) + 1.0)
    keep = d > 0.0
    t, w, d = t[keep], w[keep], d[keep]
    right = np.asarray(f(b - d), dtype=np.float64)
    left = np.asarray(f(a + d), dtype=np.float64)
    centre = t == 0.0
    contrib = w * (right + left)
    contrib[centre] *= 0.5
    return math.fsum(contrib.tolist()), 2 * len(t)


def integrate_singular(f: Integrand, a: float, b: float, tol: float = 1e-12) -> IntegralResult:
    """Tanh-sinh quadrature of f over (a, b); tolerates endpoint singularities.

    Levels halve the step size, reusing earlier nodes.  The error estimate is
    the change between the last two levels.
    """
    if not a < b:
        raise DomainError("need a < b")
    if tol <= 0:
        raise DomainError("tol must be positive")
    h = 1.0
    raw, evals = _tanh_sinh_sum(f, a, b, np.arange(0.0, TANH_SINH_TMAX + 0.5 * h, h))
    prev = raw * h
    err = math.inf
    for level in range(1, TANH_SINH_MAX_LEVEL + 1):
        h *= 0.5
        new_nodes = np.arange(h, TANH_SINH_TMAX + 0.5 * h, 2 * h)
        extra, n_new = _tanh_sinh_sum(f, a, b, new_nodes)
        raw += extra
        evals += n_new
        cur = raw * h
        err = abs(cur - prev)
        if not math.isfinite(cur):
            raise AccuracyError("integrand produced a non-finite sum", cur, math.inf)
        if level >= 3 and err <= tol:
            return IntegralResult(cur, err, evals)
        prev = cur
    raise AccuracyError(
        f"tanh-sinh did not reach tol={tol:g} within {TANH_SINH_MAX_LEVEL} levels (err={err:g})",
        prev,
        err,
    )


# --------------------------------------------------------------------------
# adaptive Gauss-Legendre


def _gl_panels(f: Integrand, left: np.ndarray, right: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Order-15 Gauss-Legendre value and |f| integral on each panel."""
    mid = 0.5 * (left + right)
    half = 0.5 * (right - left)
    x = mid[:, None] + half[:, None] * _GL_X[None, :]
    y = np.asarray(f(x.ravel()), dtype=np.float64).reshape(x.shape)
    val = half * (y @ _GL_W)
    absval = half * (np.abs(y) @ _GL_W)
    return val, absval


def integrate_adaptive(
    f: Integrand,
    a: float,
    b: float,
    tol: float = 1e-10,
    *,
    breakpoints: Sequence[float] = (),
    initial_panels: int = 1,
    max_depth: int = DEFAULT_MAX_DEPTH,
) -> IntegralResult:
    """Adaptive bisection with order-15 Gauss-Legendre panels.

    Each panel is compared against the sum over its two halves; panels whose
    error exceeds their width-proportional share of ``tol * int|f|`` are split.
    ``breakpoints`` inside (a, b) are forced panel edges, and each initial
    segment is cut into ``initial_panels`` equal panels.
    """
    if not a < b:
        raise DomainError("need a < b")
    if tol <= 0:
        raise DomainError("tol must be positive")
    edges = sorted({a, b, *(p for p in breakpoints if a < p < b)})
    lefts, rights = [], []
    for lo, hi in zip(edges[:-1], edges[1:]):
        cuts = np.linspace(lo, hi, initial_panels + 1)
        lefts.append(cuts[:-1])
        rights.append(cuts[1:])
    left = np.concatenate(lefts)
    right = np.concatenate(rights)
    whole, _ = _gl_panels(f, left, right)
    evals = GL_ORDER * len(left)
    min_width = (b - a) * 2.0 ** (-max_depth)

    done_val: list[float] = []
    done_abs: list[float] = []
    done_err: list[float] = []
    length = b - a
    while True:
        mid = 0.5 * (left + right)
        lv, la = _gl_panels(f, left, mid)
        rv, ra = _gl_panels(f, mid, right)
        evals += 2 * GL_ORDER * len(left)
        halves = lv + rv
        err = np.abs(halves - whole)

        total_abs = math.fsum(done_abs) + math.fsum((la + ra).tolist())
        total_err = math.fsum(done_err) + math.fsum(err.tolist())
        if not (math.isfinite(total_abs) and math.isfinite(total_err)):
            raise AccuracyError("integrand produced non-finite values")
        target = tol * total_abs
        split = err > target * (right - left) / length
        if total_err <= target:
            split[:] = False
        stuck = split & ((right - left) <= min_width)
        if stuck.any():
            value = math.fsum(done_val) + math.fsum(halves.tolist())
            raise AccuracyError(
                f"adaptive quadrature hit depth cap {max_depth} (err={total_err:g})", value, total_err
            )
        keep = ~split
        done_val.extend(halves[keep].tolist())
        done_abs.extend((la + ra)[keep].tolist())
        done_err.extend(err[keep].tolist())
        if not split.any():
            break
        # children: [left, mid] and [mid, right]; their GL values are already known
        left = np.concatenate([left[split], mid[split]])
        right = np.concatenate([mid[split], right[split]])
        whole = np.concatenate([lv[split], rv[split]])

    return IntegralResult(math.fsum(done_val), math.fsum(done_err), evals)


# --------------------------------------------------------------------------
# Brent root finding


def find_root(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    tol: float = 1e-12,
    *,
    max_iter: int = 200,
) -> RootResult:
    """Brent's method on a sign-changing bracket [lo, hi].

    Inverse quadratic / secant steps are accepted only while they shrink the
    bracket fast enough; otherwise the step falls back to bisection.
    """
    a, b = float(lo), float(hi)
    fa, fb = f(a), f(b)
    if fa == 0.0:
        return RootResult(a, 0.0, 0.0, (0.0,))
    if fb == 0.0:
        return RootResult(b, 0.0, 0.0, (0.0,))
    if fa * fb > 0:
        raise DomainError(f"no sign change on [{lo}, {hi}]: f={fa:g}, {fb:g}")
    c, fc = a, fa
    d = e = b - a
    history: list[float] = []
    best = math.inf
    for _ in range(max_iter):
        if fb * fc > 0:
            c, fc = a, fa
            d = e = b - a
        if abs(fc) < abs(fb):
            a, b, c = b, c, b
            fa, fb, fc = fb, fc, fb
        best = min(best, abs(fb))
        history.append(best)
        tol1 = 0.5 * max(tol, 4.0 * _EPS * abs(b))
        xm = 0.5 * (c - b)
        if abs(xm) <= tol1 or fb == 0.0:
            return RootResult(b, abs(fb), abs(c - b), tuple(history))
        if abs(e) >= tol1 and abs(fa) > abs(fb):
            s = fb / fa
            if a == c:
                p = 2.0 * xm * s
                q = 1.0 - s
            else:
                q = fa / fc
                r = fb / fc
                p = s * (2.0 * xm * q * (q - r) - (b - a) * (r - 1.0))
                q = (q - 1.0) * (r - 1.0) * (s - 1.0)
            if p > 0:
                q = -q
            p = abs(p)
            if 2.0 * p < min(3.0 * xm * q - abs(tol1 * q), abs(e * q)):
                e, d = d, p / q
            else:
                d = e = xm
        else:
            d = e = xm
        a, fa = b, fb
        b += d if abs(d) > tol1 else math.copysign(tol1, xm)
        fb = f(b)
    raise AccuracyError(f"find_root did not converge in {max_iter} iterations", b, abs(c - b))
