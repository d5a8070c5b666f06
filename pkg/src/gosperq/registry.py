"""Registry of the q-trigonometric and theta-function identities.

Every entry evaluates its two sides through :mod:`gosperq.qtrig` and
:mod:`gosperq.theta` only. Base function values are memoized per point,
but no composite expression is shared between the two sides.

Notation inside the evaluators: ``T(x, k) = theta1(x | tau'/k)``,
``S(k) = T(pi/2, k)``, ``Tp(k) = theta1'(0 | tau'/k)``, ``sin(x, k) =
sin_{q**k}(x)`` and ``pr(k) = Pi_q / Pi_{q**k}``.

Theta-form entries are homogeneous products of theta values that become
tiny as the dual nome shrinks. Their sides are divided by a positive
reference magnitude built from ``S(k)`` values of matching degree, so the
relative error measures the identity and not the size of ``p``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Callable, Optional

from .qseries import TruncationPolicy, qpoch_infinite
from .formal.identities import FORMAL_IDENTITIES
from .qtrig import QParameter, cos_q, pi_ratio, sin_q
from .theta import theta1_prime0_series, theta1_series

PI = math.pi
SQRT3 = math.sqrt(3.0)


class EvalContext:
    """Memoized base-function values at one ``(z, q)`` point."""

    def __init__(self, z: Optional[complex], Q: QParameter, policy: TruncationPolicy, constants: dict):
        self.z = z
        self.Q = Q
        self.policy = policy
        self.c = constants
        self._memo: dict = {}

    def _get(self, key, fn):
        try:
            return self._memo[key]
        except KeyError:
            value = self._memo[key] = fn()
            return value

    def sin(self, x, k: int = 1) -> complex:
        return self._get(("sin", x, k), lambda: sin_q(x, self.Q.power(k), self.policy))

    def cos(self, x, k: int = 1) -> complex:
        return self._get(("cos", x, k), lambda: cos_q(x, self.Q.power(k), self.policy))

    def pr(self, k: int) -> complex:
        return self._get(("pr", k), lambda: pi_ratio(self.Q, k, self.policy))

    def T(self, x, k: int = 1) -> complex:
        return self._get(("T", x, k), lambda: theta1_series(x, self.Q.tau_dual / k, self.policy))

    def S(self, k: int = 1) -> complex:
        return self.T(PI / 2, k)

    def Tp(self, k: int = 1) -> complex:
        return self._get(("Tp", k), lambda: theta1_prime0_series(self.Q.tau_dual / k, self.policy))

    def qp(self, a, b) -> complex:
        """``(q**a; q**b)_inf``."""
        return self._get(("qp", a, b), lambda: qpoch_infinite(self.Q.pow(a), self.Q.pow(b), self.policy))


Side = Callable[[EvalContext], complex]


@dataclass(frozen=True)
class IdentityDescriptor:
    """One catalogued identity.

    ``has_z`` is False for nome-only identities. ``nome`` says which nome
    the statement is naturally written in (``"q"`` or ``"tau'"``).
    ``squared_form`` identities compare the squares of both sides.
    """

    id: str
    statement_ref: str
    has_z: bool
    nome: str
    lhs: Side
    rhs: Side
    squared_form: bool = False
    modes: frozenset = frozenset({"numeric"})
    divides_trig: bool = False
    scale: Optional[Side] = None
    constants: dict = field(default_factory=dict)
    formal_root: Optional[int] = None
    formal_order: Optional[int] = None

    @property
    def variables(self) -> str:
        return "z+nome" if self.has_z else "nome-only"


# -- evaluators --------------------------------------------------------------

def _qdouble_rhs(x: EvalContext) -> complex:
    c = x.c["half"] * x.pr(x.c["k4"])
    return c * (x.sin(x.z, 4) ** 2 - x.sin(x.z, 2) ** 4) ** 0.5


def _qdouble4_rhs(x: EvalContext) -> complex:
    c = x.c["half"] * x.pr(x.c["k4"])
    return c * (x.cos(x.z, 4) ** 2 - x.cos(x.z, 2) ** 4) ** 0.5


def _qtriple_rhs(x: EvalContext) -> complex:
    A = x.c["third"] * x.pr(x.c["k9"])
    return A * x.sin(x.z, 9) - (1 + A) * x.sin(x.z, 3) ** 3


def _qtriple2_rhs(x: EvalContext) -> complex:
    return x.pr(3) * x.cos(x.z, 3) ** 2 * x.sin(x.z, 3) - x.c["sign"] * x.sin(x.z, 3) ** 3


def _thm21_rhs(x: EvalContext) -> complex:
    c2 = (x.c["half"] * x.pr(x.c["k4"])) ** 2
    z = x.z
    return c2 * x.T(z, 4) ** 2 * x.S(2) ** 4 * x.S(1) ** 2 - c2 * x.T(z, 2) ** 4 * x.S(4) ** 2 * x.S(1) ** 2


def _thm22_rhs(x: EvalContext) -> complex:
    A = x.c["third"] * x.pr(x.c["k9"])
    z = x.z
    return A * x.T(z, 9) * x.S(1) * x.S(3) ** 3 - (A + 1) * x.T(z, 3) ** 3 * x.S(1) * x.S(9)


def _help11_rhs(x: EvalContext) -> complex:
    r = (x.Tp(2) / x.Tp(4)) ** 2
    y = x.z
    return r * x.S(2) ** 2 * x.T(y, 4) ** 2 - r * (x.S(4) / x.S(2)) ** 2 * x.T(y, 2) ** 4


def _help22_lhs(x: EvalContext) -> complex:
    A = x.c["third"] * x.pr(x.c["k9"])
    z = x.z
    return x.T(z, 9) * x.S(3) ** 3 * A - x.T(z, 3) ** 3 * x.S(9) * A


def _help22_rhs(x: EvalContext) -> complex:
    A = x.c["third"] * x.pr(x.c["k9"])
    z = x.z
    return (x.Tp(9) / x.Tp(3)) * x.T(z, 3) * x.T(z + PI / 2, 3) ** 2 * x.S(3) * A


def _abs(*fs: Side) -> Side:
    def scale(x: EvalContext) -> float:
        out = 1.0
        for f in fs:
            out *= abs(f(x))
        return out

    return scale


def _S(k: int, power: int = 1) -> Side:
    return lambda x: x.S(k) ** power


_HALF = {"half": Fraction(1, 2), "k4": 4}
_THIRD = {"third": Fraction(1, 3), "k9": 9}
_NUM = frozenset({"numeric"})
_BOTH = frozenset({"numeric", "formal"})


def _build_catalog() -> list[IdentityDescriptor]:
    h = PI / 2
    q4 = PI / 4
    D = IdentityDescriptor
    return [
        D("sine-theta", "sin_q as a dual-nome theta quotient", True, "q",
          lambda x: x.sin(x.z), lambda x: x.T(x.z) / x.S(1)),
        D("cosine-theta", "cos_q as a dual-nome theta quotient", True, "q",
          lambda x: x.cos(x.z), lambda x: x.T(x.z + h) / x.S(1)),
        D("cos-reflection", "cos_q(z) = sin_q(pi/2 - z)", True, "q",
          lambda x: x.cos(x.z), lambda x: x.sin(h - x.z)),
        D("q-Double", "sin_q(2z) against sin_{q^4} and sin_{q^2}, squared", True, "q",
          lambda x: x.sin(2 * x.z), _qdouble_rhs, squared_form=True, constants=dict(_HALF)),
        D("q-Double2", "sin_q(2z) = C(q) sin_{q^2}(z) cos_{q^2}(z)", True, "q",
          lambda x: x.sin(2 * x.z),
          lambda x: x.pr(x.c["k2"]) * x.sin(x.z, 2) * x.cos(x.z, 2), constants={"k2": 2}),
        D("q-Double3", "cos_q(2z) = cos_{q^2}^2(z) - sin_{q^2}^2(z)", True, "q",
          lambda x: x.cos(2 * x.z), lambda x: x.cos(x.z, 2) ** 2 - x.sin(x.z, 2) ** 2),
        D("q-Double4", "sin_q(2z) against cos_{q^4} and cos_{q^2}, squared", True, "q",
          lambda x: x.sin(2 * x.z), _qdouble4_rhs, squared_form=True, constants=dict(_HALF)),
        D("q-Double5", "cos_q(2z) = cos_q^4(z) - sin_q^4(z)", True, "q",
          lambda x: x.cos(2 * x.z), lambda x: x.cos(x.z) ** 4 - x.sin(x.z) ** 4),
        D("q-Triple", "sin_q(3z) against sin_{q^9} and sin_{q^3}", True, "q",
          lambda x: x.sin(3 * x.z), _qtriple_rhs, constants=dict(_THIRD)),
        D("q-Triple2", "sin_q(3z) against cos_{q^3} and sin_{q^3}", True, "q",
          lambda x: x.sin(3 * x.z), _qtriple2_rhs, constants={"sign": 1}),
        D("ratio", "constant ratio C(q) of sin_q(2z) to sin_{q^2} cos_{q^2}", True, "q",
          lambda x: x.sin(2 * x.z) / (x.sin(x.z, 2) * x.cos(x.z, 2)),
          lambda x: x.pr(x.c["k2"]), divides_trig=True, constants={"k2": 2}),
        D("help-0", "theta form of q-Double_3", True, "tau'",
          lambda x: x.T(2 * x.z + h) * x.S(2) ** 2,
          lambda x: x.S(1) * x.T(x.z + h, 2) ** 2 - x.S(1) * x.T(x.z, 2) ** 2,
          scale=_abs(_S(1), _S(2, 2))),
        D("help", "theta form of q-Double_2", True, "tau'",
          lambda x: x.T(x.z, 2) * x.T(x.z + h, 2) * x.S(1),
          lambda x: x.T(2 * x.z) * x.T(q4, 2) ** 2,
          scale=_abs(_S(1), _S(2, 2))),
        D("Cq", "closed form C(q) = theta1^2(pi/2|tau'/2) / theta1^2(pi/4|tau'/2)", False, "tau'",
          lambda x: x.S(2) ** 2 / x.T(q4, 2) ** 2, lambda x: x.pr(x.c["k2"]),
          constants={"k2": 2}),
        D("thm-2.1", "theta form of q-Double at tau'/1, tau'/2, tau'/4", True, "tau'",
          lambda x: x.T(2 * x.z) ** 2 * x.S(2) ** 4 * x.S(4) ** 2, _thm21_rhs,
          scale=_abs(_S(1, 2), _S(2, 4), _S(4, 2)), constants=dict(_HALF)),
        D("thm-2.2", "theta form of q-Triple at tau'/1, tau'/3, tau'/9", True, "tau'",
          lambda x: x.T(3 * x.z) * x.S(3) ** 3 * x.S(9), _thm22_rhs,
          scale=_abs(_S(1), _S(3, 3), _S(9)), constants=dict(_THIRD)),
        D("thm-2.3", "theta form of q-Triple2 (last factor theta1(pi/2|tau'))", True, "tau'",
          lambda x: x.T(3 * x.z) * x.S(3) ** 3 + x.c["sign"] * x.T(x.z, 3) ** 3 * x.S(1),
          lambda x: x.pr(3) * x.T(x.z, 3) * x.T(x.z + h, 3) ** 2 * x.S(1),
          scale=_abs(_S(1), _S(3, 3)), constants={"sign": 1}),
        D("help-1-1", "x = pi/2 specialization used for thm-2.1", True, "tau'",
          lambda x: x.T(x.z, 2) ** 2 * x.T(x.z + h, 2) ** 2, _help11_rhs,
          scale=_S(2, 4)),
        D("help-2-0", "x = pi/2 specialization used for thm-2.2", True, "tau'",
          lambda x: 4 * x.S(3) ** 3 * x.T(3 * x.z) - 4 * x.T(x.z, 3) ** 3 * x.T(3 * h),
          lambda x: 12 * x.Tp(1) / x.Tp(3) * x.T(x.z, 3) * x.T(h + x.z, 3) * x.T(h - x.z, 3) * x.S(3),
          scale=_abs(_S(1), _S(3, 3))),
        D("help-2-1", "help-2-0 rearranged", True, "tau'",
          lambda x: x.T(3 * x.z) * x.S(3) ** 3 * x.S(9) + x.T(x.z, 3) ** 3 * x.S(1) * x.S(9),
          lambda x: 3 * x.Tp(1) / x.Tp(3) * x.T(x.z, 3) * x.T(x.z + h, 3) ** 2 * x.S(3) * x.S(9),
          scale=_abs(_S(1), _S(3, 3), _S(9))),
        D("help-2-2", "second instance used for thm-2.2, times A_q", True, "tau'",
          _help22_lhs, _help22_rhs,
          scale=_abs(_S(9), _S(3, 3), lambda x: x.c["third"] * x.pr(x.c["k9"])),
          constants=dict(_THIRD)),
        D("help-1-3", "eta-quotient lemma used for thm-2.1", False, "tau'",
          lambda x: (x.Tp(2) / x.Tp(4)) ** 2 * x.S(2) ** 2 * x.S(4) ** 2 / x.T(q4, 2) ** 4,
          lambda x: (x.c["half"] * x.pr(x.c["k4"])) ** 2,
          constants=dict(_HALF)),
        D("help-2-3", "eta-quotient lemma used for thm-2.2", False, "tau'",
          lambda x: 9 * x.Tp(1) / x.Tp(9) * x.S(9) / x.S(1), lambda x: x.pr(x.c["k9"]),
          constants={"k9": 9}),
        D("help-3-1", "eta-quotient lemma used for thm-2.3", False, "tau'",
          lambda x: 3 * x.Tp(1) / x.Tp(3) * x.S(3) / x.S(1), lambda x: x.pr(3)),
        D("help-1-3-r1", "theta1^2(pi/2|tau'/2) / theta1^2(pi/4|tau'/2) as a q-product", False, "q",
          lambda x: x.S(2) ** 2 / x.T(q4, 2) ** 2,
          lambda x: x.Q.pow(-0.25) * x.qp(2, 4) ** 4 / x.qp(1, 2) ** 2),
        D("help-1-3-r2", "theta1^2(pi/2|tau'/4) / theta1^2(pi/4|tau'/2) as a q-product", False, "q",
          lambda x: x.S(4) ** 2 / x.T(q4, 2) ** 2,
          lambda x: 2 * x.Q.pow(-0.25) * x.qp(4, 8) ** 4 * x.qp(8, 8) ** 2 / (x.qp(1, 2) ** 2 * x.qp(4, 4) ** 2)),
        D("help-1-3-r3", "(theta1'(0|tau'/2) / theta1'(0|tau'/4))^2 as a q-product", False, "q",
          lambda x: (x.Tp(2) / x.Tp(4)) ** 2,
          lambda x: x.Q.pow(-1) / 8 * x.qp(4, 4) ** 6 / x.qp(8, 8) ** 6),
        D("help-2-3-r1", "theta1(pi/2|tau'/9) / theta1(pi/2|tau') as a q-product", False, "q",
          lambda x: x.S(9) / x.S(1),
          lambda x: 3 * x.qp(9, 18) ** 2 * x.qp(18, 18) / (x.qp(1, 2) ** 2 * x.qp(2, 2))),
        D("help-2-3-r2", "theta1'(0|tau') / theta1'(0|tau'/9) as a q-product", False, "q",
          lambda x: x.Tp(1) / x.Tp(9),
          lambda x: x.Q.pow(-2) / 27 * x.qp(2, 2) ** 3 / x.qp(18, 18) ** 3),
        D("help-3-1-r1", "theta1(pi/2|tau'/3) / theta1(pi/2|tau') as a q-product", False, "q",
          lambda x: x.S(3) / x.S(1),
          lambda x: SQRT3 * x.qp(3, 6) ** 2 * x.qp(6, 6) / (x.qp(1, 2) ** 2 * x.qp(2, 2))),
        D("help-3-1-r2", "theta1'(0|tau') / theta1'(0|tau'/3) as a q-product", False, "q",
          lambda x: x.Tp(1) / x.Tp(3),
          lambda x: x.Q.pow(-0.5) / (3 * SQRT3) * x.qp(2, 2) ** 3 / x.qp(6, 6) ** 3),
    ]


def _bind_formal(d: IdentityDescriptor) -> IdentityDescriptor:
    fi = FORMAL_IDENTITIES.get(d.id)
    if fi is None:
        return d
    return replace(d, modes=_BOTH, formal_root=fi.root, formal_order=fi.default_order)


_CATALOG = [_bind_formal(d) for d in _build_catalog()]
_BY_ID = {d.id: d for d in _CATALOG}

#: Corollary (q-trig form) paired with the theorem (theta form) it restates.
COROLLARY_PAIRS = (("q-Double", "thm-2.1"), ("q-Triple", "thm-2.2"), ("q-Triple2", "thm-2.3"))

#: Nome-only lemmas accepted by :func:`gosperq.verify.eta_quotient_check`.
ETA_QUOTIENTS = {"help-1-3": "help-1-3", "help-2-3": "help-2-3", "help-3-1": "help-3-1", "Cq-closed-form": "Cq"}


def catalog() -> list[IdentityDescriptor]:
    """All descriptors in a stable order."""
    return list(_CATALOG)


def get(identity_id: str) -> IdentityDescriptor:
    try:
        return _BY_ID[identity_id]
    except KeyError:
        raise KeyError(f"unknown identity {identity_id!r}") from None


def ids() -> list[str]:
    return [d.id for d in _CATALOG]


__all__ = [
    "COROLLARY_PAIRS",
    "ETA_QUOTIENTS",
    "EvalContext",
    "IdentityDescriptor",
    "catalog",
    "get",
    "ids",
]
