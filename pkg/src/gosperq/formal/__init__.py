"""Exact truncated q-series engine and the formal prover."""
from .builders import (
    constant_formal,
    pi_ratio_formal,
    pochhammer_formal,
    theta1_formal,
    theta1_prime0_formal,
)
from .gaussian import GaussianRational
from .laurent import LaurentPoly
from .prover import ProofReport, formal_ids, prove
from .series import NomeSeries

__all__ = [
    "GaussianRational",
    "LaurentPoly",
    "NomeSeries",
    "ProofReport",
    "constant_formal",
    "formal_ids",
    "pi_ratio_formal",
    "pochhammer_formal",
    "prove",
    "theta1_formal",
    "theta1_prime0_formal",
]
