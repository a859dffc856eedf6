"""Rigorous completeness certificates for lists of L-function zeros."""

from .certify import (
    CertificateReport,
    CertifyOptions,
    Theorem,
    Verdict,
    certify,
    certify_elliptic,
    certify_general,
    certify_hecke,
    certify_zeta_R,
    certify_zeta_window,
)
from .diagnostics import explicit_formula_check, recommend_cutoff, zeta_counting_bounds, zeta_zero_sum_tails
from .errors import AxiomViolation, BudgetError, DomainError, HypothesisViolation, ParseError, ZerocertError
from .interval import ComplexInterval, Interval
from .lfunc import (
    LFunctionDescriptor,
    ZeroList,
    descriptor_from_file,
    elliptic_descriptor,
    gaussian_descriptor,
    zeta_descriptor,
)
from .testfn import TestWindow, fhat_eval

__version__ = "0.1.0"

__all__ = [
    "AxiomViolation",
    "BudgetError",
    "CertificateReport",
    "CertifyOptions",
    "ComplexInterval",
    "DomainError",
    "HypothesisViolation",
    "Interval",
    "LFunctionDescriptor",
    "ParseError",
    "TestWindow",
    "Theorem",
    "Verdict",
    "ZeroList",
    "ZerocertError",
    "certify",
    "certify_elliptic",
    "certify_general",
    "certify_hecke",
    "certify_zeta_R",
    "certify_zeta_window",
    "descriptor_from_file",
    "elliptic_descriptor",
    "explicit_formula_check",
    "fhat_eval",
    "gaussian_descriptor",
    "recommend_cutoff",
    "zeta_counting_bounds",
    "zeta_descriptor",
    "zeta_zero_sum_tails",
]
