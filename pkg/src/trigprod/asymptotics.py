"""Asymptotic formulas for P_n and Q_n, and checks of them against measurements.

Every ``verify_*`` function returns a :class:`VerificationReport`.  Limits
without published convergence rates are checked by a tolerance on the
largest n plus a trend condition: the deviation from the limit must not
increase over the last three (geometrically spaced) sample points.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from .coeffs import (
    degree,
    iter_tables,
    nonzero_count,
    pentagonal_series_prefix,
    pn_coefficients,
)
from .constants import ConstantsSet, compute_constants
from .norms import linf_norm_pn, lp_norm_coefficients, lp_norm_pn, lp_norm_qn, parseval_l2
from .pointeval import LOG2, ScaledMagnitude, log_abs_pn_at_3pi_over_2n

THEOREM_TAGS = (
    "T1", "T2", "T3", "T4", "T5", "T6", "T7",
    "bigpoint", "bigsmall", "littlewood", "wallis", "wright-coeff", "pentagonal",
)
ALIASES = {"T3": "bigpoint", "T4": "bigsmall", "T5": "wallis"}


@dataclass
class VerificationReport:
    theorem_tag: str
    n_range: list[int]
    observed: list[float]
    target: float | list[float] | None
    tolerance: float | None
    passed: bool
    details: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class WrightCoefficientParams:
    n: int
    k: int
    N: int
    m: float
    L: float

    @classmethod
    def from_index(cls, n: int, k: int, w0: float) -> "WrightCoefficientParams":
        N = degree(n)
        return cls(n=n, k=k, N=N, m=k - N / 2, L=(2 * N - k) * w0 / n - n / 4)


class SignedLog(NamedTuple):
    sign: int
    log_abs: float

    def to_float(self) -> float:
        return self.sign * math.exp(self.log_abs) if self.sign else 0.0


def _consts(consts: ConstantsSet | None) -> ConstantsSet:
    return consts if consts is not None else compute_constants()


def geometric_tail(n_max: int) -> list[int]:
    """The three trend sample points n_max/4, n_max/2, n_max."""
    return sorted({max(1, n_max // 4), max(1, n_max // 2), n_max})


def _non_increasing(xs: Sequence[float], slack: float = 1e-12) -> bool:
    return all(b <= a + slack for a, b in zip(xs, xs[1:]))


# --------------------------------------------------------------------------
# formulas


def wallis_integral(n: int) -> float:
    """int_0^{pi/2} cos^n t dt = (sqrt(pi)/2) Gamma((n+1)/2) / Gamma(n/2 + 1)."""
    return 0.5 * math.sqrt(math.pi) * math.exp(math.lgamma((n + 1) / 2) - math.lgamma(n / 2 + 1))


def asymptotic_value(
    tag: str,
    n: int,
    p: float | None = None,
    consts: ConstantsSet | None = None,
    *,
    c0: float = 0.0,
) -> ScaledMagnitude:
    """Log-domain value of the leading-order formula named by ``tag``.

    T1 coefficient max of P_n; T2 L^p norm of P_n (p may be inf); T3 value of
    |P_n(3pi/2n)| up to n^{+-c0}; T4 the L^2 lower bound (with n^{-c0});
    T5 the Hoelder bound on ||Q_n||_1; T6 L^p norm of Q_n; T7 coefficient
    max of Q_n; Pnorder / Qnorder the conjectured l^p orders of magnitude.
    """
    cs = _consts(consts)
    K, B, C, A = cs.K.value, cs.B.value, cs.C.value, cs.A.value
    ln = math.log(n)
    tag = {"bigpoint": "T3", "bigsmall": "T4", "wallis": "T5"}.get(tag, tag)
    if tag == "T1":
        v = math.log(B) + K * n - ln
    elif tag == "T2":
        if p is None:
            raise ValueError("T2 needs p")
        peak = K * n + math.log(B * C) + 0.5 * (ln - math.log(4 * math.pi))
        if math.isinf(p):
            v = peak
        else:
            v = math.log(2 * math.sqrt(math.pi) / (C * math.sqrt(p))) / p - 1.5 * ln / p + peak
    elif tag == "T3":
        v = A * n
    elif tag == "T4":
        v = A * n - c0 * ln - 0.5 * math.log(2.2 * n * (n + 1))
    elif tag == "T5":
        v = (n + 1) * LOG2 + math.log(wallis_integral(n) / math.pi)
    elif tag == "T6":
        if p is None:
            raise ValueError("T6 needs p")
        v = math.log(6 / (p * math.pi)) / (2 * p) + n * LOG2 - 1.5 * ln / p
    elif tag == "T7":
        v = n * LOG2 + 0.5 * math.log(6 / math.pi) - 1.5 * ln
    elif tag == "Pnorder":
        v = K * n + (1.5 / p - 1.0) * ln
    elif tag == "Qnorder":
        v = n * LOG2 + (1.5 / p - 1.5) * ln
    else:
        raise ValueError(f"unknown theorem tag {tag!r}")
    return ScaledMagnitude(v)


def wright_coefficient_formula(
    params: WrightCoefficientParams,
    consts: ConstantsSet | None = None,
    variant: str = "gaussian",
    *,
    envelope_power: int = 3,
) -> SignedLog:
    """Leading-order prediction of the coefficient k of P_n near the centre.

    ``plain``:    (B e^{Kn} / n) cos(2 pi L)
    ``gaussian``: (B/n) exp(Kn - pi^2 m^2 / (C^2 n^p)) cos(n pi / 2 + 2 pi m w0 / n)

    The Gaussian envelope width follows from the peak of |P_n| having width
    ~1/(C n^{3/2}); ``envelope_power=3`` matches it.  ``envelope_power=2``
    gives a far narrower envelope that does not fit the exact coefficients.
    """
    cs = _consts(consts)
    K, B, C, w0 = cs.K.value, cs.B.value, cs.C.value, cs.w0.value
    n, m = params.n, params.m
    if variant == "plain":
        log_amp = math.log(B) + K * n - math.log(n)
        osc = math.cos(2 * math.pi * params.L)
    elif variant == "gaussian":
        log_amp = math.log(B / n) + K * n - (math.pi * m) ** 2 / (C**2 * n**envelope_power)
        osc = math.cos(n * math.pi / 2 + 2 * math.pi * m * w0 / n)
    else:
        raise ValueError(f"unknown variant {variant!r}")
    if osc == 0.0:
        return SignedLog(0, -math.inf)
    return SignedLog(1 if osc > 0 else -1, log_amp + math.log(abs(osc)))


# --------------------------------------------------------------------------
# verifications


def _tables_at(kind: str, n_values: Iterable[int]):
    wanted = sorted(set(n_values))
    if not wanted:
        return
    for table in iter_tables(kind, wanted[-1]):
        if table.n in wanted:
            yield table


def verify_wright_linf_coeff(
    n_values: Sequence[int], consts: ConstantsSet | None = None, tol: float = 0.15
) -> VerificationReport:
    """max_k |P_n coefficient| * n e^{-Kn} -> B."""
    cs = _consts(consts)
    K, B = cs.K.value, cs.B.value
    ns, obs = [], []
    for table in _tables_at("P", n_values):
        top = lp_norm_coefficients(table, math.inf).log_value
        ns.append(table.n)
        obs.append(math.exp(top - K * table.n + math.log(table.n)))
    devs = [abs(o - B) for o in obs]
    passed = devs[-1] <= tol * B and _non_increasing(devs[-3:])
    return VerificationReport("T1", ns, obs, B, tol, passed, {"deviation": devs})


def verify_lp_ratio_p(
    n_values: Sequence[int], p: float, consts: ConstantsSet | None = None, tol: float = 0.15
) -> VerificationReport:
    """||P_n||_p divided by its asymptotic formula -> 1."""
    cs = _consts(consts)
    ns, obs = [], []
    for n in sorted(set(n_values)):
        measured = lp_norm_pn(n, p, tol=1e-8)
        ns.append(n)
        obs.append(measured.value.ratio(asymptotic_value("T2", n, p, cs)))
    devs = [abs(o - 1.0) for o in obs]
    passed = devs[-1] <= tol and _non_increasing(devs[-3:])
    return VerificationReport("T2", ns, obs, 1.0, tol, passed, {"p": p, "deviation": devs})


def verify_lp_ratio_q(
    n_values: Sequence[int], p: float, tol: float = 0.10
) -> VerificationReport:
    """||Q_n||_p divided by (6/(p pi))^{1/2p} 2^n n^{-3/2p} -> 1."""
    ns, obs = [], []
    for n in sorted(set(n_values)):
        measured = lp_norm_qn(n, p, tol=1e-8)
        ns.append(n)
        obs.append(measured.value.ratio(asymptotic_value("T6", n, p)))
    devs = [abs(o - 1.0) for o in obs]
    passed = devs[-1] <= tol and _non_increasing(devs[-3:])
    return VerificationReport("T6", ns, obs, 1.0, tol, passed, {"p": p, "deviation": devs})


def verify_bigpoint(n_values: Sequence[int], consts: ConstantsSet | None = None) -> VerificationReport:
    """(log|P_n(3pi/2n)| - A n) / log n stays bounded; its max magnitude is the fitted C0."""
    cs = _consts(consts)
    A = cs.A.value
    ns = [n for n in sorted(set(n_values)) if n >= 2]
    obs = [(log_abs_pn_at_3pi_over_2n(n).log_value - A * n) / math.log(n) for n in ns]
    mags = [abs(o) for o in obs]
    i_max = int(np.argmax(mags))
    c0 = mags[i_max]
    # bounded: the maximum is not attained among the largest 10% of n
    passed = i_max < math.floor(0.9 * len(ns)) if len(ns) >= 10 else _non_increasing(mags)
    return VerificationReport(
        "bigpoint", ns, obs, None, c0, passed, {"fitted_C0": c0, "argmax_n": ns[i_max]}
    )


def verify_bigsmall(n_values: Sequence[int], consts: ConstantsSet | None = None) -> VerificationReport:
    """|P_n(3pi/2n)|^2 <= 2.2 n(n+1) ||P_n||_2^2, with ||P_n||_2 exact by Parseval.

    ``observed`` holds log(lhs / rhs), which must be <= 0.
    """
    ns, obs = [], []
    for table in _tables_at("P", n_values):
        n = table.n
        lhs = 2.0 * log_abs_pn_at_3pi_over_2n(n).log_value
        rhs = math.log(2.2 * n * (n + 1)) + 2.0 * parseval_l2(table).log_value
        ns.append(n)
        obs.append(lhs - rhs)
    return VerificationReport("bigsmall", ns, obs, 0.0, 0.0, all(o <= 0.0 for o in obs))


def verify_littlewood_count(n_values: Sequence[int]) -> VerificationReport:
    """P_n has at least 1.5 sqrt(n) nonzero coefficients."""
    ns, obs, target = [], [], []
    for table in _tables_at("P", n_values):
        ns.append(table.n)
        obs.append(float(nonzero_count(table)))
        target.append(1.5 * math.sqrt(table.n))
    passed = all(o >= t for o, t in zip(obs, target))
    return VerificationReport("littlewood", ns, obs, target, 0.0, passed)


def verify_wallis_bound(n_values: Sequence[int], tol: float = 0.02) -> VerificationReport:
    """||Q_n||_1 <= 2^{n+1} G_n / pi, and G_n sqrt(n+2) -> sqrt(pi/2).

    ``observed`` holds ||Q_n||_1 divided by the bound (must be <= 1).  The
    Wallis limit is closed form, so it is checked at max(n, 100) where its
    1 + 0.75/n approach is inside the tolerance.
    """
    ns = sorted(set(n_values))
    obs = []
    for n in ns:
        q1 = lp_norm_qn(n, 1, tol=1e-8)
        obs.append(q1.value.ratio(asymptotic_value("T5", n)))
    n_lim = max(ns[-1], 100)
    wallis_ratio = wallis_integral(n_lim) * math.sqrt(n_lim + 2) / math.sqrt(math.pi / 2)
    passed = all(o <= 1.0 for o in obs) and abs(wallis_ratio - 1.0) <= tol
    return VerificationReport(
        "wallis", ns, obs, 1.0, tol, passed, {"wallis_sqrt_ratio": wallis_ratio, "wallis_n": n_lim}
    )


def verify_qhat_max(n_values: Sequence[int], tol: float = 0.10) -> VerificationReport:
    """max_j Q_n coefficient * n^{3/2} / 2^n -> sqrt(6/pi), attained at j = N/2."""
    target = math.sqrt(6.0 / math.pi)
    ns, obs, centred = [], [], True
    for table in _tables_at("Q", n_values):
        n, N = table.n, table.degree
        c = table.coeffs
        top = max(c)
        centred &= c[N // 2] == top and c[(N + 1) // 2] == top
        ns.append(n)
        obs.append(math.exp(math.log(top) + 1.5 * math.log(n) - n * LOG2))
    devs = [abs(o - target) for o in obs]
    passed = centred and devs[-1] <= tol * target and _non_increasing(devs[-3:])
    return VerificationReport("T7", ns, obs, target, tol, passed, {"argmax_centred": centred, "deviation": devs})


def verify_wright_coefficients(
    n: int = 120,
    consts: ConstantsSet | None = None,
    *,
    half_window: int | None = None,
    envelope_power: int = 3,
    min_correlation: float = 0.9,
    min_sign_agreement: float = 0.85,
) -> VerificationReport:
    """Gaussian coefficient formula against exact coefficients over |k - N/2| <= 3n.

    Passes when the Pearson correlation is high and the signs agree on the
    indices where the prediction exceeds half its peak magnitude.
    """
    cs = _consts(consts)
    table = pn_coefficients(n)
    N = table.degree
    w = 3 * n if half_window is None else half_window
    ks = range(max(0, N // 2 - w), min(N, (N + 1) // 2 + w) + 1)
    scale = cs.K.value * n - math.log(n)
    exact = np.array([math.exp(math.log(abs(c)) - scale) * (1 if c > 0 else -1) if c else 0.0
                      for c in (int(table.coeffs[k]) for k in ks)])
    pred = np.array([
        _scaled(wright_coefficient_formula(
            WrightCoefficientParams.from_index(n, k, cs.w0.value), cs, "gaussian",
            envelope_power=envelope_power), scale)
        for k in ks
    ])
    corr = float(np.corrcoef(pred, exact)[0, 1])
    big = np.abs(pred) >= 0.5 * np.abs(pred).max()
    agree = float(np.mean(np.sign(pred[big]) == np.sign(exact[big])))
    passed = corr >= min_correlation and agree >= min_sign_agreement
    return VerificationReport(
        "wright-coeff",
        [n],
        [corr, agree],
        [min_correlation, min_sign_agreement],
        None,
        passed,
        {"correlation": corr, "sign_agreement": agree, "indices": len(pred), "above_half_peak": int(big.sum())},
    )


def _scaled(s: SignedLog, log_scale: float) -> float:
    return s.sign * math.exp(s.log_abs - log_scale) if s.sign else 0.0


def verify_pentagonal(n_max: int) -> VerificationReport:
    """Coefficients j <= n of P_n agree with the pentagonal series for all n <= n_max."""
    series = pentagonal_series_prefix(n_max)
    bad = []
    for table in iter_tables("P", n_max):
        n = table.n
        if any(int(table.coeffs[j]) != series[j] for j in range(n + 1)):
            bad.append(n)
    return VerificationReport("pentagonal", [1, n_max], [float(len(bad))], 0.0, 0.0, not bad, {"mismatches": bad})


def sandwich_check(table, *, linf_log: float | None = None) -> dict:
    """||P_n||_inf <= ||hat P_n||_1 <= (N+1) ||hat P_n||_inf, plus ||P_n||_inf >= n+1."""
    n, N = table.n, table.degree
    if linf_log is None:
        linf_log = linf_norm_pn(n, table=table).log_value
    l1 = sum(abs(int(c)) for c in table.coeffs)
    top = max(abs(int(c)) for c in table.coeffs)
    return {
        "n": n,
        "linf_ge_n_plus_1": linf_log >= math.log(n + 1) - 1e-12,
        "linf_le_l1": linf_log <= math.log(l1) + 1e-12,
        "l1_le_count_times_max": l1 <= (N + 1) * top,
    }


def conjecture_ratio_series(kind: str, p: float, n_values: Sequence[int]) -> list[tuple[int, float, float]]:
    """Rows (n, log ||coeffs||_p, ratio to the conjectured order of magnitude)."""
    tag = {"P": "Pnorder", "Q": "Qnorder"}[kind]
    cs = compute_constants()
    rows = []
    for table in _tables_at(kind, n_values):
        norm = lp_norm_coefficients(table, p)
        rows.append((table.n, norm.log_value, norm.value.ratio(asymptotic_value(tag, table.n, p, cs))))
    return rows


# --------------------------------------------------------------------------


def run_verification(tag: str, n_max: int) -> list[VerificationReport]:
    """Run the check named ``tag`` over a desk-scale range ending at ``n_max``."""
    tag = ALIASES.get(tag, tag)
    tail = geometric_tail(n_max)
    if tag == "T1":
        return [verify_wright_linf_coeff(tail)]
    if tag == "T2":
        return [verify_lp_ratio_p(tail, 1.0), verify_lp_ratio_p(tail, 2.0)]
    if tag == "T6":
        return [verify_lp_ratio_q(tail, 1.0), verify_lp_ratio_q(tail, 2.0)]
    if tag == "T7":
        return [verify_qhat_max(tail)]
    if tag == "bigpoint":
        return [verify_bigpoint(range(2, n_max + 1))]
    if tag == "bigsmall":
        return [verify_bigsmall(range(1, n_max + 1))]
    if tag == "littlewood":
        return [verify_littlewood_count(range(1, n_max + 1))]
    if tag == "wallis":
        return [verify_wallis_bound(range(1, n_max + 1))]
    if tag == "wright-coeff":
        return [verify_wright_coefficients(min(n_max, 120))]
    if tag == "pentagonal":
        return [verify_pentagonal(n_max)]
    raise ValueError(f"unknown theorem tag {tag!r}; expected one of {', '.join(THEOREM_TAGS)}")


def run_all(n_max: int) -> list[VerificationReport]:
    tags = ("T1", "T2", "bigpoint", "bigsmall", "wallis", "T6", "T7", "littlewood", "wright-coeff", "pentagonal")
    return [r for tag in tags for r in run_verification(tag, n_max)]
