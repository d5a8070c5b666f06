"""Exact-series forms of the theta identities.

Each identity is a list of parts. A ``dual`` part lives in ``t**m = p`` (the
nome of ``tau'``) with Laurent coefficients in ``u = e^{iz}``; the constants
``Pi_q / Pi_{q**k}`` enter through their dual theta-quotient form
``k theta1'(0|tau') theta1(pi/2|tau'/k) / (theta1(pi/2|tau') theta1'(0|tau'/k))``.
A ``nome`` part lives in ``t**m = q`` and checks the q-product algebra that
remains after the modular transformation has been applied.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .builders import pi_ratio_formal, pochhammer_formal, theta1_formal, theta1_prime0_formal
from .series import NomeSeries


class DualContext:
    """Memoized theta expansions at root ``m`` through ``t**W``."""

    def __init__(self, m: int, W: int):
        self.m = m
        self.W = W
        self._cache: dict = {}

    def _memo(self, key, fn):
        try:
            return self._cache[key]
        except KeyError:
            value = self._cache[key] = fn()
            return value

    def T(self, a: int, s: int, k: int) -> NomeSeries:
        """``theta1(a z + s pi/2 | tau'/k)``."""
        return self._memo(("T", a, s % 4, k), lambda: theta1_formal(a, s % 4, k, self.m, self.W))

    def S(self, k: int) -> NomeSeries:
        """``theta1(pi/2 | tau'/k)``."""
        return self.T(0, 1, k)

    def Tp(self, k: int) -> NomeSeries:
        """``theta1'(0 | tau'/k)``."""
        return self._memo(("Tp", k), lambda: theta1_prime0_formal(k, self.m, self.W))

    def quarter_sq(self, k: int) -> NomeSeries:
        """``theta1(pi/4 | tau'/k)**2``; only the square is a Gaussian-rational series."""
        return self._memo(("Q4", k), lambda: (self.T(1, 0, k) ** 2).specialize_u(1, 4))

    def pi_ratio(self, k: int) -> NomeSeries:
        """``Pi_q / Pi_{q**k}`` in the dual variable."""
        return self._memo(("PR", k), lambda: pi_ratio_formal(k, self.m, self.W, "dual"))


class NomeContext:
    """q-products ``(q**a; q**b)_inf`` at root ``m`` of ``q`` through ``t**W``."""

    def __init__(self, m: int, W: int):
        self.m = m
        self.W = W
        self._cache: dict = {}

    def P(self, a: int, b: int) -> NomeSeries:
        key = (a, b)
        if key not in self._cache:
            self._cache[key] = pochhammer_formal(a * self.m, b * self.m, self.m, self.W)
        return self._cache[key]

    def qpow(self, s: Fraction) -> int:
        e = Fraction(s) * self.m
        if e.denominator != 1:
            raise ValueError(f"q^{s} is not an integer power of t at root {self.m}")
        return int(e)

    def pi_ratio(self, k: int) -> NomeSeries:
        return pi_ratio_formal(k, self.m, self.W, "nome")


Builder = Callable[[object, dict], tuple[NomeSeries, NomeSeries]]


@dataclass(frozen=True)
class FormalPart:
    variable: str  # "dual" or "nome"
    root: int
    build: Builder
    nomes: Callable[[dict], tuple[int, ...]] = lambda c: ()


@dataclass(frozen=True)
class FormalIdentity:
    id: str
    parts: tuple[FormalPart, ...]
    default_order: int
    constants: dict = field(default_factory=dict)

    @property
    def root(self) -> int:
        return self.parts[0].root


# -- dual-variable builders ---------------------------------------------------

def _help0(x: DualContext, c):
    lhs = x.T(2, 1, 1) * x.S(2) ** 2
    rhs = x.S(1) * x.T(1, 1, 2) ** 2 - x.S(1) * x.T(1, 0, 2) ** 2
    return lhs, rhs


def _help(x: DualContext, c):
    lhs = x.T(1, 0, 2) * x.T(1, 1, 2) * x.S(1)
    rhs = x.T(2, 0, 1) * x.quarter_sq(2)
    return lhs, rhs


def _cq_dual(x: DualContext, c):
    return x.S(2) ** 2 / x.quarter_sq(2), x.pi_ratio(c["k2"])


def _thm21(x: DualContext, c):
    const = (x.pi_ratio(c["k4"]) * c["half"]) ** 2
    lhs = x.T(2, 0, 1) ** 2 * x.S(2) ** 4 * x.S(4) ** 2
    rhs = (
        const * x.T(1, 0, 4) ** 2 * x.S(2) ** 4 * x.S(1) ** 2
        - const * x.T(1, 0, 2) ** 4 * x.S(4) ** 2 * x.S(1) ** 2
    )
    return lhs, rhs


def _thm22(x: DualContext, c):
    A = x.pi_ratio(c["k9"]) * c["third"]
    lhs = x.T(3, 0, 1) * x.S(3) ** 3 * x.S(9)
    rhs = A * x.T(1, 0, 9) * x.S(1) * x.S(3) ** 3 - (A + NomeSeries.one(A.m, A.prec)) * (
        x.T(1, 0, 3) ** 3 * x.S(1) * x.S(9)
    )
    return lhs, rhs


def _thm23(x: DualContext, c):
    lhs = x.T(3, 0, 1) * x.S(3) ** 3 + (x.T(1, 0, 3) ** 3 * x.S(1)) * c["sign"]
    rhs = x.pi_ratio(3) * x.T(1, 0, 3) * x.T(1, 1, 3) ** 2 * x.S(1)
    return lhs, rhs


def _help11(x: DualContext, c):
    ratio = (x.Tp(2) / x.Tp(4)) ** 2
    lhs = x.T(1, 0, 2) ** 2 * x.T(1, 1, 2) ** 2
    rhs = ratio * x.S(2) ** 2 * x.T(1, 0, 4) ** 2 - ratio * (x.S(4) / x.S(2)) ** 2 * x.T(1, 0, 2) ** 4
    return lhs, rhs


def _help20(x: DualContext, c):
    lhs = (x.S(3) ** 3 * x.T(3, 0, 1)) * 4 - (x.T(1, 0, 3) ** 3 * x.T(0, 3, 1)) * 4
    rhs = (x.Tp(1) / x.Tp(3)) * x.T(1, 0, 3) * x.T(1, 1, 3) * x.T(-1, 1, 3) * x.S(3) * 12
    return lhs, rhs


def _help21(x: DualContext, c):
    lhs = x.T(3, 0, 1) * x.S(3) ** 3 * x.S(9) + x.T(1, 0, 3) ** 3 * x.S(1) * x.S(9)
    rhs = (x.Tp(1) / x.Tp(3)) * x.T(1, 0, 3) * x.T(1, 1, 3) ** 2 * x.S(3) * x.S(9) * 3
    return lhs, rhs


def _help22(x: DualContext, c):
    A = x.pi_ratio(c["k9"]) * c["third"]
    lhs = x.T(1, 0, 9) * x.S(3) ** 3 * A - x.T(1, 0, 3) ** 3 * x.S(9) * A
    rhs = (x.Tp(9) / x.Tp(3)) * x.T(1, 0, 3) * x.T(1, 1, 3) ** 2 * x.S(3) * A
    return lhs, rhs


def _help13_dual(x: DualContext, c):
    lhs = (x.Tp(2) / x.Tp(4)) ** 2 * x.S(2) ** 2 * x.S(4) ** 2 / x.quarter_sq(2) ** 2
    rhs = (x.pi_ratio(c["k4"]) * c["half"]) ** 2
    return lhs, rhs


# -- nome-variable builders (q-product algebra) -------------------------------

def _cq_nome(x: NomeContext, c):
    lhs = (x.P(2, 4) ** 4 / x.P(1, 2) ** 2).scale(1, x.qpow(Fraction(-1, 4)))
    return lhs, x.pi_ratio(c["k2"])


def _help13_nome(x: NomeContext, c):
    r3 = (x.P(4, 4) ** 6 / x.P(8, 8) ** 6).scale(Fraction(1, 8), x.qpow(-1))
    r1 = (x.P(2, 4) ** 4 / x.P(1, 2) ** 2).scale(1, x.qpow(Fraction(-1, 4)))
    r2 = (x.P(4, 8) ** 4 * x.P(8, 8) ** 2 / (x.P(1, 2) ** 2 * x.P(4, 4) ** 2)).scale(
        2, x.qpow(Fraction(-1, 4))
    )
    rhs = (x.pi_ratio(c["k4"]) * c["half"]) ** 2
    return r3 * r1 * r2, rhs


def _help23_nome(x: NomeContext, c):
    # 9 * [q^-2/(9 sqrt 9) (q^2;q^2)^3/(q^18;q^18)^3] * [sqrt 9 (q^9;q^18)^2 (q^18;q^18)/((q;q^2)^2 (q^2;q^2))]
    prime_ratio = (x.P(2, 2) ** 3 / x.P(18, 18) ** 3).scale(Fraction(1, 27), x.qpow(-2))
    half_ratio = (x.P(9, 18) ** 2 * x.P(18, 18) / (x.P(1, 2) ** 2 * x.P(2, 2))).scale(3)
    return (prime_ratio * half_ratio).scale(9), x.pi_ratio(c["k9"])


def _help31_nome(x: NomeContext, c):
    # The sqrt(3) factors of the two ratios cancel: 3 * 1/(3 sqrt 3) * sqrt 3 = 1/3 * 3.
    prime_ratio = (x.P(2, 2) ** 3 / x.P(6, 6) ** 3).scale(Fraction(1, 3), x.qpow(Fraction(-1, 2)))
    half_ratio = x.P(3, 6) ** 2 * x.P(6, 6) / (x.P(1, 2) ** 2 * x.P(2, 2))
    return (prime_ratio * half_ratio).scale(3), x.pi_ratio(3)


def _ks(*fixed: int, extra: tuple[str, ...] = ()):
    return lambda c: fixed + tuple(c[name] for name in extra)


_D = "dual"
_N = "nome"
_HALF = {"half": Fraction(1, 2), "k4": 4}
_THIRD = {"third": Fraction(1, 3), "k9": 9}

FORMAL_IDENTITIES: dict[str, FormalIdentity] = {
    fi.id: fi
    for fi in [
        FormalIdentity("help-0", (FormalPart(_D, 8, _help0, _ks(1, 2)),), 160),
        FormalIdentity("help", (FormalPart(_D, 8, _help, _ks(1, 2)),), 160),
        FormalIdentity(
            "Cq",
            (FormalPart(_D, 8, _cq_dual, _ks(1, 2, extra=("k2",))), FormalPart(_N, 4, _cq_nome)),
            160,
            {"k2": 2},
        ),
        FormalIdentity("thm-2.1", (FormalPart(_D, 16, _thm21, _ks(1, 2, 4, extra=("k4",))),), 200, dict(_HALF)),
        FormalIdentity("thm-2.2", (FormalPart(_D, 36, _thm22, _ks(1, 3, 9, extra=("k9",))),), 360, dict(_THIRD)),
        FormalIdentity("thm-2.3", (FormalPart(_D, 12, _thm23, _ks(1, 3)),), 200, {"sign": 1}),
        FormalIdentity("help-1-1", (FormalPart(_D, 16, _help11, _ks(2, 4)),), 200),
        FormalIdentity("help-2-0", (FormalPart(_D, 12, _help20, _ks(1, 3)),), 200),
        FormalIdentity("help-2-1", (FormalPart(_D, 36, _help21, _ks(1, 3, 9)),), 360),
        FormalIdentity("help-2-2", (FormalPart(_D, 36, _help22, _ks(3, 9, extra=("k9",))),), 360, dict(_THIRD)),
        FormalIdentity(
            "help-1-3",
            (
                FormalPart(_D, 16, _help13_dual, _ks(1, 2, 4, extra=("k4",))),
                FormalPart(_N, 4, _help13_nome),
            ),
            200,
            dict(_HALF),
        ),
        FormalIdentity("help-2-3", (FormalPart(_N, 4, _help23_nome),), 200, {"k9": 9}),
        FormalIdentity("help-3-1", (FormalPart(_N, 4, _help31_nome),), 200),
    ]
}
