"""CSV data behind the six figures.

=====  ================================================  ================
id     quantity                                          range
=====  ================================================  ================
1      prod_{k=1}^{10} 2|sin(k theta)|                   2048 theta in [0, pi/2]
2      ||P_n||_1 / (e^{Kn} n^{-1})                       n = 1..400
3      ||P_n||_2 / (e^{Kn} n^{-1/4})                     n = 1..400
4      prod_{k=1}^{10} 2|cos(k theta)|                   2048 theta in [0, pi/2]
5      ||hat P_n||_1 / (e^{Kn} n^{1/2})                  n = 1..500
6      ||hat Q_n||_3 / (2^n n^{-1})                      n = 1..400
=====  ================================================  ================
"""

from __future__ import annotations

import csv
import math
import os
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .coeffs import iter_tables
from .constants import compute_constants
from .norms import lp_norm_coefficients, lp_norm_pn, parseval_l2
from .pointeval import log_abs_pn, log_abs_qn

DEFAULT_N_MAX = {2: 400, 3: 400, 5: 500, 6: 400}
CURVE_SAMPLES = 2048
CURVE_N = 10


@dataclass(frozen=True)
class FigureSpec:
    figure_id: int
    out: Path
    n_max: int | None = None

    def __post_init__(self):
        if self.figure_id not in range(1, 7):
            raise ValueError(f"figure id must be 1..6, got {self.figure_id}")
        if self.n_max is not None and self.n_max < 1:
            raise ValueError("n_max must be positive")

    @property
    def n_range(self) -> range:
        return range(1, (self.n_max or DEFAULT_N_MAX.get(self.figure_id, 0)) + 1)


def _fmt(x: float) -> str:
    return f"{x:.17g}"


def _curve_rows(cosine: bool):
    # prod 2|sin(k theta)| = |P_10(2 theta)|, likewise for cos and Q_10
    evaluate = log_abs_qn if cosine else log_abs_pn
    for theta in np.linspace(0.0, math.pi / 2, CURVE_SAMPLES):
        yield _fmt(theta), _fmt(evaluate(CURVE_N, 2.0 * float(theta)).value())


def _l1_rows(ns: range):
    K = compute_constants().K.value
    for n in ns:
        norm = lp_norm_pn(n, 1, tol=1e-8)
        yield n, _fmt(norm.log_value), _fmt(math.exp(norm.log_value - K * n + math.log(n)))


def _l2_rows(ns: range):
    K = compute_constants().K.value
    for table in iter_tables("P", ns[-1]):
        n = table.n
        norm = parseval_l2(table)
        yield n, _fmt(norm.log_value), _fmt(math.exp(norm.log_value - K * n + 0.25 * math.log(n)))


def _ell1_p_rows(ns: range):
    K = compute_constants().K.value
    for table in iter_tables("P", ns[-1]):
        n = table.n
        norm = lp_norm_coefficients(table, 1)
        yield n, _fmt(norm.log_value), _fmt(math.exp(norm.log_value - K * n - 0.5 * math.log(n)))


def _ell3_q_rows(ns: range):
    for table in iter_tables("Q", ns[-1]):
        n = table.n
        norm = lp_norm_coefficients(table, 3)
        yield n, _fmt(norm.log_value), _fmt(math.exp(norm.log_value - n * math.log(2) + math.log(n)))


def figure_rows(spec: FigureSpec):
    """(header, row iterator) for a figure."""
    fid = spec.figure_id
    if fid in (1, 4):
        return ("theta", "value"), _curve_rows(cosine=fid == 4)
    header = ("n", "log_norm", "ratio")
    rows = {2: _l1_rows, 3: _l2_rows, 5: _ell1_p_rows, 6: _ell3_q_rows}[fid](spec.n_range)
    return header, rows


def emit_figure(spec: FigureSpec) -> Path:
    """Write the figure's CSV; a partial file is removed if anything fails."""
    out = Path(spec.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    tmp = out.with_name(out.name + ".partial")
    header, rows = figure_rows(spec)
    try:
        with open(tmp, "w", encoding="utf-8", newline="") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(header)
            writer.writerows(rows)
        os.replace(tmp, out)
    except BaseException:
        tmp.unlink(missing_ok=True)
        raise
    return out
