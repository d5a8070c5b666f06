"""Gosper's q-analogues of sine and cosine and the constant ``Pi_q``.

With ``w = z / pi`` the functions are the normalized products

    sin_q(z) = q**((w - 1/2)**2) (q**(2w), q**(2 - 2w); q^2)_inf / (q; q^2)_inf**2
    cos_q(z) = q**(w**2)         (q**(1 + 2w), q**(1 - 2w); q^2)_inf / (q; q^2)_inf**2

so ``sin_q(pi/2) == 1`` and ``cos_q(0) == 1``. Every power ``q**s`` is
``exp(s Log q)`` with the principal logarithm. The dual-nome forms
``theta1(z | tau') / theta1(pi/2 | tau')`` are provided for the ``q -> 1``
regime where the products converge slowly.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

from .errors import DomainError, GosperQError
from .qseries import DEFAULT_POLICY, NUMERIC_ENVELOPE, TruncationPolicy, as_complex, qpoch_infinite
from .theta import ModularPoint, theta1_scaled

PI = math.pi
_MAX_IM_W = 2.0


@dataclass(frozen=True)
class QParameter:
    """A nome ``q`` with ``0 < |q| < 1`` and its fixed logarithm.

    ``log`` defaults to the principal ``Log q``. :meth:`power` keeps
    ``k * log`` so that ``q**k`` stays attached to ``k * tau``.
    """

    q: complex
    log: complex = field(default=None)  # type: ignore[assignment]

    def __post_init__(self):
        q = as_complex(self.q, "q")
        if not 0.0 < abs(q) < 1.0:
            raise DomainError(f"q must satisfy 0 < |q| < 1, got |q| = {abs(q)!r}")
        object.__setattr__(self, "q", q)
        if self.log is None:
            object.__setattr__(self, "log", cmath.log(q))
        else:
            lg = as_complex(self.log, "log")
            if not -PI < lg.imag <= PI:
                raise DomainError(f"log q = {lg!r} is not the principal logarithm")
            object.__setattr__(self, "log", lg)

    def power(self, k: int) -> "QParameter":
        """The parameter ``q**k`` with logarithm ``k Log q``."""
        lg = self.log * k
        if not -PI < lg.imag <= PI:
            raise DomainError(
                f"q**{k} leaves the principal-log window (arg = {lg.imag:.6g}); "
                "use a nome with smaller argument"
            )
        return QParameter(cmath.exp(lg), lg)

    def pow(self, s) -> complex:
        return cmath.exp(complex(s) * self.log)

    @property
    def tau(self) -> complex:
        return self.log / (1j * PI)

    @property
    def tau_dual(self) -> complex:
        return -1.0 / self.tau

    @property
    def p(self) -> complex:
        return cmath.exp(1j * PI * self.tau_dual)

    @property
    def modular_point(self) -> ModularPoint:
        return ModularPoint(self.tau)


def _as_qparam(Q) -> QParameter:
    return Q if isinstance(Q, QParameter) else QParameter(Q)


def _odd_denominator(Q: QParameter, policy: TruncationPolicy) -> complex:
    return qpoch_infinite(Q.q, Q.pow(2), policy) ** 2


def _check_envelope(Q: QParameter, w: complex, args: tuple[complex, ...]) -> None:
    if abs(Q.q) > NUMERIC_ENVELOPE:
        raise DomainError(f"|q| = {abs(Q.q):.6g} exceeds the product envelope {NUMERIC_ENVELOPE}")
    if abs(w.imag) > _MAX_IM_W:
        raise DomainError(f"|Im(z/pi)| = {abs(w.imag):.6g} exceeds {_MAX_IM_W}")
    for a in args:
        if abs(a) >= 1.0:
            raise DomainError(f"product argument has modulus {abs(a):.17g} >= 1")


def sin_q_product(z, Q, policy: TruncationPolicy = DEFAULT_POLICY) -> complex:
    """sin_q by its product definition, without rerouting.

    Raises :class:`DomainError` outside the envelope ``|q| <= 0.95``,
    ``|Im w| <= 2`` and ``|q**(2w)|, |q**(2-2w)| < 1``.
    """
    Q = _as_qparam(Q)
    w = as_complex(z, "z") / PI
    a1, a2 = Q.pow(2 * w), Q.pow(2 - 2 * w)
    _check_envelope(Q, w, (a1, a2))
    q2 = Q.pow(2)
    num = qpoch_infinite(a1, q2, policy) * qpoch_infinite(a2, q2, policy)
    return Q.pow((w - 0.5) ** 2) * num / _odd_denominator(Q, policy)


def cos_q_product(z, Q, policy: TruncationPolicy = DEFAULT_POLICY) -> complex:
    """cos_q by its own product definition (not via sin_q)."""
    Q = _as_qparam(Q)
    w = as_complex(z, "z") / PI
    a1, a2 = Q.pow(1 + 2 * w), Q.pow(1 - 2 * w)
    _check_envelope(Q, w, (a1, a2))
    q2 = Q.pow(2)
    num = qpoch_infinite(a1, q2, policy) * qpoch_infinite(a2, q2, policy)
    return Q.pow(w * w) * num / _odd_denominator(Q, policy)


def _theta_half(Q: QParameter, policy: TruncationPolicy) -> complex:
    denom = theta1_scaled(PI / 2, Q.tau_dual, policy)
    if denom == 0:
        raise GosperQError("theta1(pi/2 | tau') vanished; this cannot happen for Im tau' > 0")
    return denom


def sin_q_via_theta(z, Q, policy: TruncationPolicy = DEFAULT_POLICY) -> complex:
    """``theta1(z | tau') / theta1(pi/2 | tau')`` evaluated at the dual nome.

    Both values are taken without their common ``2 p**(1/4)`` factor, so
    the quotient survives ``q -> 1`` where ``p`` underflows.
    """
    Q = _as_qparam(Q)
    z = as_complex(z, "z")
    return theta1_scaled(z, Q.tau_dual, policy) / _theta_half(Q, policy)


def cos_q_via_theta(z, Q, policy: TruncationPolicy = DEFAULT_POLICY) -> complex:
    """``theta1(z + pi/2 | tau') / theta1(pi/2 | tau')``."""
    Q = _as_qparam(Q)
    z = as_complex(z, "z")
    return theta1_scaled(z + PI / 2, Q.tau_dual, policy) / _theta_half(Q, policy)


def _routed(product_fn, theta_fn, z, Q, policy):
    Q = _as_qparam(Q)
    try:
        return product_fn(z, Q, policy)
    except DomainError as exc:
        if abs(Q.p) < abs(Q.q):
            return theta_fn(z, Q, policy)
        raise DomainError(f"{exc}; dual nome |p| = {abs(Q.p):.3g} does not help") from exc


def sin_q(z, Q, policy: TruncationPolicy = DEFAULT_POLICY) -> complex:
    """sin_q(z); outside the product envelope the dual-nome form is used when ``|p| < |q|``."""
    return _routed(sin_q_product, sin_q_via_theta, z, Q, policy)


def cos_q(z, Q, policy: TruncationPolicy = DEFAULT_POLICY) -> complex:
    """cos_q(z) with the same routing rule as :func:`sin_q`."""
    return _routed(cos_q_product, cos_q_via_theta, z, Q, policy)


def pi_q(Q, policy: TruncationPolicy = DEFAULT_POLICY) -> complex:
    """Gosper's ``Pi_q = q**(1/4) (q^2; q^2)_inf**2 / (q; q^2)_inf**2``."""
    Q = _as_qparam(Q)
    q2 = Q.pow(2)
    return Q.pow(0.25) * qpoch_infinite(q2, q2, policy) ** 2 / _odd_denominator(Q, policy)


def pi_ratio(Q, k: int, policy: TruncationPolicy = DEFAULT_POLICY) -> complex:
    """``Pi_q / Pi_{q**k}``."""
    Q = _as_qparam(Q)
    return pi_q(Q, policy) / pi_q(Q.power(k), policy)
