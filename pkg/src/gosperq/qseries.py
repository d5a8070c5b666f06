"""Finite and infinite q-Pochhammer symbols under an explicit truncation policy.

All numeric evaluation in the package goes through :class:`TruncationPolicy`,
so the stopping rule of every infinite series or product is visible and
tunable. Infinite products are multiplied out directly; the supported
numeric envelope is ``|q| <= 0.95``.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Iterable

from . import _backend
from .errors import DomainError, NonConvergenceError

#: Largest nome modulus for which product evaluation is supported.
NUMERIC_ENVELOPE = 0.95


@dataclass(frozen=True)
class TruncationPolicy:
    """Absolute tail tolerance plus a hard cap on terms or factors."""

    tol: float = 1e-15
    max_terms: int = 1_000_000

    def __post_init__(self):
        if not (isinstance(self.tol, (int, float)) and math.isfinite(self.tol) and self.tol > 0):
            raise DomainError(f"tol must be a positive finite real, got {self.tol!r}")
        if not isinstance(self.max_terms, int) or self.max_terms < 1:
            raise DomainError(f"max_terms must be a positive integer, got {self.max_terms!r}")

    def tighter(self, factor: float = 2.0) -> "TruncationPolicy":
        return TruncationPolicy(self.tol / factor, self.max_terms)


DEFAULT_POLICY = TruncationPolicy()


def as_complex(x, name: str = "value") -> complex:
    """Coerce to ``complex`` and reject NaN/Inf components."""
    try:
        c = complex(x)
    except (TypeError, ValueError) as exc:
        raise DomainError(f"{name} is not a complex number: {x!r}") from exc
    if not (math.isfinite(c.real) and math.isfinite(c.imag)):
        raise DomainError(f"{name} must be finite, got {c!r}")
    return c


def qpoch_finite(a, q, n: int) -> complex:
    """Return ``(a; q)_n``, the product of ``1 - a q**i`` for ``i < n``."""
    a = as_complex(a, "a")
    q = as_complex(q, "q")
    if not isinstance(n, int) or n < 0:
        raise DomainError(f"n must be a nonnegative integer, got {n!r}")
    prod = 1.0 + 0.0j
    aqi = a
    for _ in range(n):
        prod *= 1.0 - aqi
        aqi *= q
    return prod


def qpoch_infinite_terms(a, q, policy: TruncationPolicy = DEFAULT_POLICY) -> tuple[complex, int]:
    """Like :func:`qpoch_infinite` but also report the number of factors used."""
    a = as_complex(a, "a")
    q = as_complex(q, "q")
    if abs(q) >= 1.0:
        raise DomainError(f"(a;q)_inf needs |q| < 1, got |q| = {abs(q):.17g}")
    value, terms, converged = _backend.qpoch_inf(a, q, policy.tol, policy.max_terms)
    if not converged:
        raise NonConvergenceError(
            f"(a;q)_inf did not reach tol={policy.tol:g} within {policy.max_terms} factors "
            f"(|a|={abs(a):.6g}, |q|={abs(q):.6g})"
        )
    return value, terms


def qpoch_infinite(a, q, policy: TruncationPolicy = DEFAULT_POLICY) -> complex:
    """Return ``(a; q)_inf``.

    The product stops at the first ``k`` with ``|a| |q|**k / (1 - |q|) < tol``,
    which bounds the log of the omitted tail. Raises :class:`DomainError` for
    ``|q| >= 1`` and :class:`NonConvergenceError` when the cap is hit.
    """
    return qpoch_infinite_terms(a, q, policy)[0]


def qpoch_multi(args: Iterable, q, policy: TruncationPolicy = DEFAULT_POLICY) -> complex:
    """Return ``(a_1, ..., a_k; q)_inf``; the empty list gives 1."""
    q = as_complex(q, "q")
    prod = 1.0 + 0.0j
    for a in args:
        prod *= qpoch_infinite(a, q, policy)
    return prod


def qpower(log_q: complex, s) -> complex:
    """``q**s`` as ``exp(s * log_q)``, the convention used for all non-integer powers."""
    return cmath.exp(complex(s) * log_q)
