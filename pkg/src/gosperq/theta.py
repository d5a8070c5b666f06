"""The first Jacobi theta function and its transformation laws.

``theta1(z | tau) = 2 * sum_{n>=0} (-1)**n q**((2n+1)**2/4) sin((2n+1) z)``
with nome ``q = exp(i pi tau)``. Fractional nome powers are always taken
as ``exp(i pi tau s)``, never through a logarithm of ``q``, so the
functions here are single valued in ``tau``.

Every public function accepts either a :class:`ModularPoint` or a raw
complex ``tau`` with positive imaginary part; derived points such as
``tau'/9`` are passed around as raw values.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Literal, Union

from . import _backend
from .errors import DomainError, NonConvergenceError, RangeError
from .qseries import DEFAULT_POLICY, TruncationPolicy, as_complex, qpoch_infinite

PI = math.pi


@dataclass(frozen=True)
class ModularPoint:
    """A point ``tau`` of the upper half-plane with ``Re(tau)`` in ``(-1, 1]``.

    The window on the real part makes ``Log q == i pi tau`` under the
    principal logarithm.
    """

    tau: complex

    def __post_init__(self):
        tau = as_complex(self.tau, "tau")
        if tau.imag <= 0:
            raise DomainError(f"tau must lie in the upper half-plane, got {tau!r}")
        if not (-1.0 < tau.real <= 1.0):
            raise DomainError(f"Re(tau) must lie in (-1, 1], got {tau.real!r}")
        object.__setattr__(self, "tau", tau)

    @classmethod
    def from_nome(cls, q) -> "ModularPoint":
        q = as_complex(q, "q")
        if not 0.0 < abs(q) < 1.0:
            raise DomainError(f"nome must satisfy 0 < |q| < 1, got |q| = {abs(q)!r}")
        return cls(cmath.log(q) / (1j * PI))

    @property
    def q(self) -> complex:
        return cmath.exp(1j * PI * self.tau)

    @property
    def tau_dual(self) -> complex:
        return -1.0 / self.tau

    @property
    def p(self) -> complex:
        return cmath.exp(1j * PI * self.tau_dual)

    def dual(self) -> "ModularPoint":
        return ModularPoint(self.tau_dual)


TauLike = Union[ModularPoint, complex, float]


def _tau_of(M: TauLike) -> complex:
    if isinstance(M, ModularPoint):
        return M.tau
    tau = as_complex(M, "tau")
    if tau.imag <= 0:
        raise DomainError(f"tau must lie in the upper half-plane, got {tau!r}")
    return tau


def nome_power(tau: complex, s: float) -> complex:
    """``q**s`` for ``q = exp(i pi tau)``."""
    return cmath.exp(1j * PI * tau * s)


def theta1_series(z, M: TauLike, policy: TruncationPolicy = DEFAULT_POLICY) -> complex:
    """theta1 by its defining alternating series.

    Terms are bounded by ``2 |q|**(j**2/4) exp(j |Im z|)`` with ``j = 2n+1``;
    summation stops once that bound falls below ``tol`` times the bound of
    the first term.
    """
    z = as_complex(z, "z")
    tau = _tau_of(M)
    value, _, converged = _backend.theta1_sum(z, tau, policy.tol, policy.max_terms)
    if not converged:
        raise NonConvergenceError(f"theta1 series not converged in {policy.max_terms} terms")
    return value


def theta1_scaled(z, M: TauLike, policy: TruncationPolicy = DEFAULT_POLICY) -> complex:
    """``theta1(z | tau) / (2 q**(1/4))``, finite even when ``q**(1/4)`` underflows."""
    z = as_complex(z, "z")
    tau = _tau_of(M)
    value, _, converged = _backend.theta1_sum(z, tau, policy.tol, policy.max_terms, True)
    if not converged:
        raise NonConvergenceError(f"theta1 series not converged in {policy.max_terms} terms")
    return value


def theta1_product(
    z,
    M: TauLike,
    form: Literal["exponential", "sine"] = "sine",
    policy: TruncationPolicy = DEFAULT_POLICY,
) -> complex:
    """theta1 through one of its two triple-product representations."""
    z = as_complex(z, "z")
    tau = _tau_of(M)
    q2 = nome_power(tau, 2.0)
    q14 = nome_power(tau, 0.25)
    e2 = cmath.exp(2j * z)
    if form == "exponential":
        return (
            1j
            * q14
            * cmath.exp(-1j * z)
            * qpoch_infinite(q2 / e2, q2, policy)
            * qpoch_infinite(e2, q2, policy)
            * qpoch_infinite(q2, q2, policy)
        )
    if form == "sine":
        return (
            2.0
            * q14
            * cmath.sin(z)
            * qpoch_infinite(q2 * e2, q2, policy)
            * qpoch_infinite(q2 / e2, q2, policy)
            * qpoch_infinite(q2, q2, policy)
        )
    raise DomainError(f"unknown product form {form!r}; expected 'exponential' or 'sine'")


def theta1_half_period(M: TauLike, policy: TruncationPolicy = DEFAULT_POLICY) -> complex:
    """Closed form ``theta1(pi/2) = 2 q**(1/4) (-q^2; q^2)_inf**2 (q^2; q^2)_inf``."""
    tau = _tau_of(M)
    q2 = nome_power(tau, 2.0)
    return 2.0 * nome_power(tau, 0.25) * qpoch_infinite(-q2, q2, policy) ** 2 * qpoch_infinite(q2, q2, policy)


def theta1_prime0_series(M: TauLike, policy: TruncationPolicy = DEFAULT_POLICY) -> complex:
    """``theta1'(0)`` from the term-wise differentiated series."""
    tau = _tau_of(M)
    value, _, converged = _backend.theta1_prime_sum(tau, policy.tol, policy.max_terms)
    if not converged:
        raise NonConvergenceError(f"theta1' series not converged in {policy.max_terms} terms")
    return value


def theta1_prime0(
    M: TauLike, policy: TruncationPolicy = DEFAULT_POLICY, cross_check: bool = False
) -> complex:
    """``theta1'(0) = 2 q**(1/4) (q^2; q^2)_inf**3``.

    With ``cross_check`` the product is compared against the differentiated
    series and a :class:`NonConvergenceError` is raised if they disagree by
    more than ``1e-10`` relative.
    """
    tau = _tau_of(M)
    q2 = nome_power(tau, 2.0)
    value = 2.0 * nome_power(tau, 0.25) * qpoch_infinite(q2, q2, policy) ** 3
    if cross_check:
        other = theta1_prime0_series(tau, policy)
        if abs(value - other) > 1e-10 * max(1.0, abs(value)):
            raise NonConvergenceError(
                f"theta1'(0) product {value!r} disagrees with series {other!r}"
            )
    return value


def _relative(lhs: complex, rhs: complex) -> complex:
    return (lhs - rhs) / max(1.0, abs(lhs), abs(rhs))


def quasi_period_residuals(
    z, M: TauLike, policy: TruncationPolicy = DEFAULT_POLICY
) -> tuple[complex, complex]:
    """Residuals of the shifts ``z -> z + pi`` and ``z -> z + pi tau``.

    Both are divided by ``max(1, |theta1(z)|)``.
    """
    z = as_complex(z, "z")
    tau = _tau_of(M)
    base = theta1_series(z, tau, policy)
    scale = max(1.0, abs(base))
    r_pi = (theta1_series(z + PI, tau, policy) + base) / scale
    shifted = theta1_series(z + PI * tau, tau, policy)
    r_pitau = (shifted + nome_power(tau, -1.0) * cmath.exp(-2j * z) * base) / scale
    return r_pi, r_pitau


def oddness_residual(z, M: TauLike, policy: TruncationPolicy = DEFAULT_POLICY) -> complex:
    z = as_complex(z, "z")
    tau = _tau_of(M)
    a = theta1_series(z, tau, policy)
    return (a + theta1_series(-z, tau, policy)) / max(1.0, abs(a))


def transform_k_residual(
    z, M: TauLike, k: int, policy: TruncationPolicy = DEFAULT_POLICY
) -> complex:
    """Residual of ``theta1(z + pi tau | tau/k) = (-1)**k q**-k e**(-2kiz) theta1(z | tau/k)``."""
    if not isinstance(k, int) or k < 1:
        raise DomainError(f"k must be a positive integer, got {k!r}")
    z = as_complex(z, "z")
    tau = _tau_of(M)
    lhs = theta1_series(z + PI * tau, tau / k, policy)
    rhs = (-1) ** k * nome_power(tau, -k) * cmath.exp(-2j * k * z) * theta1_series(z, tau / k, policy)
    return _relative(lhs, rhs)


def jacobi_transform_residual(z, M: TauLike, policy: TruncationPolicy = DEFAULT_POLICY) -> complex:
    """Residual of the imaginary transformation relating ``tau`` and ``-1/tau``.

    Uses the principal branch of ``(-i tau)**(-1/2)``.
    """
    z = as_complex(z, "z")
    tau = _tau_of(M)
    tau_d = -1.0 / tau
    expo = 1j * tau_d * z * z / PI
    if expo.real > 700.0:
        raise RangeError(f"exp(i tau' z^2 / pi) overflows for z = {z!r}")
    lhs = theta1_series(z, tau, policy)
    rhs = (-1j * tau) ** -0.5 * (-1j) * cmath.exp(expo) * theta1_series(z * tau_d, tau_d, policy)
    return _relative(lhs, rhs)


def dual_prime_residual(M: TauLike, policy: TruncationPolicy = DEFAULT_POLICY) -> complex:
    """Residual of ``theta1'(0 | tau') = (-i tau)**(3/2) 2 q**(1/4) (q^2; q^2)_inf**3``."""
    tau = _tau_of(M)
    lhs = theta1_prime0_series(-1.0 / tau, policy)
    rhs = (-1j * tau) ** 1.5 * theta1_prime0(tau, policy)
    return _relative(lhs, rhs)
