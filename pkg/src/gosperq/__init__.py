"""Gosper's q-trigonometric functions, Jacobi theta1, and identity verification.

Numeric evaluation lives in :mod:`qseries`, :mod:`theta` and :mod:`qtrig`;
the catalogued identities in :mod:`catalog` and :mod:`sweep`; exact
truncated q-series proofs in :mod:`gosperq.formal`.
"""
from ._backend import BACKEND
from .registry import IdentityDescriptor, catalog
from .errors import (
    ContractError,
    DomainError,
    GosperQError,
    IdentityEvaluationError,
    NonConvergenceError,
    NumericInstabilityError,
    RangeError,
)
from .formal import ProofReport, prove
from .qseries import DEFAULT_POLICY, TruncationPolicy, qpoch_finite, qpoch_infinite
from .qtrig import QParameter, cos_q, pi_q, pi_ratio, sin_q
from .verify import GridSpec, ResidualRecord, SweepReport, eta_quotient_check, evaluate, sweep, verify_constant_relation
from .theta import ModularPoint, theta1_prime0, theta1_product, theta1_series

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "ContractError",
    "DEFAULT_POLICY",
    "DomainError",
    "GosperQError",
    "GridSpec",
    "IdentityDescriptor",
    "IdentityEvaluationError",
    "ModularPoint",
    "NonConvergenceError",
    "NumericInstabilityError",
    "ProofReport",
    "QParameter",
    "RangeError",
    "ResidualRecord",
    "SweepReport",
    "TruncationPolicy",
    "catalog",
    "cos_q",
    "eta_quotient_check",
    "evaluate",
    "pi_q",
    "pi_ratio",
    "prove",
    "qpoch_finite",
    "qpoch_infinite",
    "sin_q",
    "sweep",
    "theta1_prime0",
    "theta1_product",
    "theta1_series",
    "verify_constant_relation",
]
