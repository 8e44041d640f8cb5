"""Exact coefficients, norms and asymptotic checks for prod (1 - z^k) and prod (1 + z^k)."""

from .coeffs import CoefficientTable, coefficients, degree, iter_tables, pn_coefficients, qn_coefficients
from .constants import ConstantsSet, compute_constants
from .errors import (
    AccuracyError,
    DomainError,
    IntegrityError,
    OracleScaleError,
    ResourceLimitError,
    TrigProdError,
)
from .norms import NormResult, linf_norm_pn, lp_norm_coefficients, lp_norm_pn, lp_norm_qn, parseval_l2
from .pointeval import ScaledMagnitude, log_abs_pn, log_abs_qn

__all__ = [
    "AccuracyError",
    "CoefficientTable",
    "ConstantsSet",
    "DomainError",
    "IntegrityError",
    "NormResult",
    "OracleScaleError",
    "ResourceLimitError",
    "ScaledMagnitude",
    "TrigProdError",
    "coefficients",
    "compute_constants",
    "degree",
    "iter_tables",
    "linf_norm_pn",
    "log_abs_pn",
    "log_abs_qn",
    "lp_norm_coefficients",
    "lp_norm_pn",
    "lp_norm_qn",
    "parseval_l2",
    "pn_coefficients",
    "qn_coefficients",
]
