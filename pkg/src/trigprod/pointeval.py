"""Log-domain evaluation of |P_n(theta)| and |Q_n(theta)| on the unit circle.

|P_n(theta)| = prod 2|sin(k theta / 2)| and |Q_n(theta)| = prod 2|cos(k theta / 2)|.
Both are returned as :class:`ScaledMagnitude` so values like e^{0.2 n} or
2^n never overflow.

An angle may be passed either as a float (radians) or as a
:class:`fractions.Fraction` ``r`` meaning ``theta = r * pi``.  The rational
form reduces every argument exactly and detects vanishing factors
symbolically.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

import numpy as np

Angle = Union[float, Fraction]

LOG2 = math.log(2.0)


@dataclass(frozen=True, order=True)
class ScaledMagnitude:
    """A nonnegative real stored as its natural log (``-inf`` encodes zero)."""

    log_value: float

    def __post_init__(self):
        if math.isnan(self.log_value) or self.log_value == math.inf:
            raise ValueError(f"invalid log-magnitude {self.log_value!r}")

    @classmethod
    def zero(cls) -> "ScaledMagnitude":
        return cls(-math.inf)

    @classmethod
    def from_value(cls, x) -> "ScaledMagnitude":
        """Accepts floats and arbitrarily large ints."""
        if x < 0:
            raise ValueError("magnitude must be nonnegative")
        return cls(math.log(x)) if x else cls.zero()

    @property
    def is_zero(self) -> bool:
        return self.log_value == -math.inf

    def value(self) -> float:
        """Plain float; ``inf`` if the magnitude exceeds the double range."""
        try:
            return math.exp(self.log_value)
        except OverflowError:
            return math.inf

    def __mul__(self, other: "ScaledMagnitude") -> "ScaledMagnitude":
        if self.is_zero or other.is_zero:
            return ScaledMagnitude.zero()
        return ScaledMagnitude(self.log_value + other.log_value)

    def __truediv__(self, other: "ScaledMagnitude") -> "ScaledMagnitude":
        if other.is_zero:
            raise ZeroDivisionError("division by a zero magnitude")
        if self.is_zero:
            return self
        return ScaledMagnitude(self.log_value - other.log_value)

    def __pow__(self, p: float) -> "ScaledMagnitude":
        if self.is_zero:
            return self
        return ScaledMagnitude(self.log_value * p)

    def ratio(self, other: "ScaledMagnitude") -> float:
        """self / other as a plain float."""
        return (self / other).value()


# --------------------------------------------------------------------------


def _ulp_zero(x: float) -> bool:
    return abs(x - round(x)) <= math.ulp(max(abs(x), 1.0))


def _log_product_float(n: int, theta: float, cosine: bool) -> float:
    half = 0.5 * theta
    terms = []
    for k in range(1, n + 1):
        x = k * theta / (2.0 * math.pi)
        if cosine:
            x -= 0.5
        if _ulp_zero(x):
            return -math.inf
        s = math.cos(k * half) if cosine else math.sin(k * half)
        if s == 0.0:
            return -math.inf
        terms.append(math.log(abs(s)))
    return n * LOG2 + math.fsum(terms)


def _log_product_rational(n: int, r: Fraction, cosine: bool) -> float:
    # factor k: sin(pi * k r / 2) or cos(pi * k r / 2) = sin(pi * (k r / 2 + 1/2))
    terms = []
    for k in range(1, n + 1):
        x = k * r / 2
        if cosine:
            x += Fraction(1, 2)
        x %= 1  # |sin(pi x)| has period 1
        if x == 0:
            return -math.inf
        if x > Fraction(1, 2):
            x = 1 - x
        terms.append(math.log(math.sin(math.pi * float(x))))
    return n * LOG2 + math.fsum(terms)


def _log_product(n: int, theta: Angle, cosine: bool) -> ScaledMagnitude:
    if n < 1:
        raise ValueError("n must be positive")
    if isinstance(theta, Fraction):
        return ScaledMagnitude(_log_product_rational(n, theta, cosine))
    theta = float(theta)
    if not math.isfinite(theta):
        raise ValueError("theta must be finite")
    return ScaledMagnitude(_log_product_float(n, theta, cosine))


def log_abs_pn(n: int, theta: Angle) -> ScaledMagnitude:
    """|P_n(theta)| in log form; exact zero gives the -inf sentinel."""
    return _log_product(n, theta, cosine=False)


def log_abs_qn(n: int, theta: Angle) -> ScaledMagnitude:
    """|Q_n(theta)| in log form; exact zero gives the -inf sentinel."""
    return _log_product(n, theta, cosine=True)


def log_abs_pn_at_3pi_over_2n(n: int) -> ScaledMagnitude:
    return log_abs_pn(n, Fraction(3, 2 * n))


# --------------------------------------------------------------------------
# Vectorised kernels in the variable t = theta / (2 pi), used by the norms.


def log_sine_product(n: int, t: np.ndarray) -> np.ndarray:
    """log prod_{k=1}^n 2|sin(pi k t)| for an array of t."""
    return _log_trig_product(n, t, np.sin)


def log_cosine_product(n: int, t: np.ndarray) -> np.ndarray:
    """log prod_{k=1}^n 2|cos(pi k t)| for an array of t."""
    return _log_trig_product(n, t, np.cos)


def _log_trig_product(n: int, t, trig) -> np.ndarray:
    t = np.asarray(t, dtype=np.float64)
    acc = np.full(t.shape, n * LOG2)
    pt = np.pi * t
    with np.errstate(divide="ignore"):
        for k in range(1, n + 1):
            acc += np.log(np.abs(trig(k * pt)))
    return acc


def abs_pn_from_coefficients(coeffs, theta: float) -> float:
    """|sum_k c_k e^{i k theta}| with compensated summation (cross-check only)."""
    re, im = [], []
    for k, c in enumerate(coeffs):
        if c:
            cf = float(c)
            re.append(cf * math.cos(k * theta))
            im.append(cf * math.sin(k * theta))
    return math.hypot(math.fsum(re), math.fsum(im))
