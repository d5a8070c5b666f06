"""Exact truncated expansions of theta values, q-products and Gosper's constants."""
from __future__ import annotations

from fractions import Fraction
from typing import Literal

from ..errors import ContractError
from .gaussian import ONE, GaussianRational, i_power
from .laurent import LaurentPoly
from .series import NomeSeries

_MINUS_I = GaussianRational(0, -1)


def theta1_formal(a: int, s: int, k: int, m: int, N: int) -> NomeSeries:
    """``theta1(a z + s pi/2 | tau'/k)`` with ``t**m`` the nome of ``tau'``.

    Term ``n`` is ``(-1)**n t**(m (2n+1)**2 / (4k)) (-i) (i**(js) u**(aj) - i**(-js) u**(-aj))``
    with ``j = 2n + 1``. ``a = 0`` gives the constant ``theta1(s pi/2)``.
    """
    if m % (4 * k):
        raise ContractError(f"root m={m} must be divisible by 4k={4 * k}")
    step = m // (4 * k)
    coeffs = {}
    n = 0
    while True:
        j = 2 * n + 1
        e = step * j * j
        if e > N:
            break
        sign = ONE if n % 2 == 0 else -ONE
        poly = LaurentPoly([(a * j, i_power(j * s)), (-a * j, -i_power(-j * s))])
        coeffs[e] = poly.scale(sign * _MINUS_I)
        n += 1
    return NomeSeries(m, N, coeffs)


def theta1_prime0_formal(k: int, m: int, N: int) -> NomeSeries:
    """``theta1'(0 | tau'/k) = 2 sum (-1)**n (2n+1) t**(m (2n+1)**2 / (4k))``."""
    if m % (4 * k):
        raise ContractError(f"root m={m} must be divisible by 4k={4 * k}")
    step = m // (4 * k)
    coeffs = {}
    n = 0
    while step * (2 * n + 1) ** 2 <= N:
        j = 2 * n + 1
        coeffs[step * j * j] = 2 * j * (-1) ** n
        n += 1
    return NomeSeries(m, N, coeffs)


def pochhammer_formal(a_exp: int, step: int, m: int, N: int) -> NomeSeries:
    """``prod_{j>=0} (1 - t**(a_exp + j step))`` exact through ``t**N``."""
    if a_exp <= 0:
        raise ContractError(f"a_exp must be positive for a formal product, got {a_exp}")
    if step <= 0:
        raise ContractError(f"step must be positive, got {step}")
    # Dense integer coefficients; the product never leaves Z.
    coeffs = [0] * (N + 1) if N >= 0 else []
    if N >= 0:
        coeffs[0] = 1
    e = a_exp
    while e <= N:
        for i in range(N, e - 1, -1):
            if coeffs[i - e]:
                coeffs[i] -= coeffs[i - e]
        e += step
    return NomeSeries(m, N, {i: c for i, c in enumerate(coeffs) if c})


def _qprod(a: int, step: int, m: int, N: int) -> NomeSeries:
    """``(q**a; q**step)_inf`` with ``t**m = q``."""
    return pochhammer_formal(a * m, step * m, m, N)


def pi_ratio_formal(
    k: int,
    m: int,
    N: int,
    variable: Literal["nome", "dual"] = "nome",
) -> NomeSeries:
    """``Pi_q / Pi_{q**k}`` as an exact series.

    ``variable="nome"``: in ``t**m = q`` through the product definition
    ``q**((1-k)/4) (q^2;q^2)**2 (q^k;q^2k)**2 / ((q;q^2)**2 (q^2k;q^2k)**2)``.

    ``variable="dual"``: in ``t**m = p`` through
    ``k theta1'(0|tau') theta1(pi/2|tau'/k) / (theta1(pi/2|tau') theta1'(0|tau'/k))``.
    """
    if k < 1:
        raise ContractError(f"k must be positive, got {k}")
    if k == 1:
        return NomeSeries.one(m, N)
    if variable == "nome":
        shift = Fraction(m * (1 - k), 4)
        if shift.denominator != 1:
            raise ContractError(f"root m={m} leaves q^((1-k)/4) fractional for k={k}")
        # Work one valuation deeper so the shift cannot cost precision.
        W = N - int(shift)
        num = _qprod(2, 2, m, W) ** 2 * _qprod(k, 2 * k, m, W) ** 2
        den = _qprod(1, 2, m, W) ** 2 * _qprod(2 * k, 2 * k, m, W) ** 2
        return (num / den).scale(1, int(shift)).truncate(N)
    if variable == "dual":
        if m % (4 * k):
            raise ContractError(f"root m={m} must be divisible by 4k={4 * k}")
        W = N + 2 * m
        num = theta1_prime0_formal(1, m, W) * theta1_formal(0, 1, k, m, W)
        den = theta1_formal(0, 1, 1, m, W) * theta1_prime0_formal(k, m, W)
        return (num / den).scale(k).truncate(N)
    raise ContractError(f"unknown variable {variable!r}")


CONSTANTS = {
    "PiQ-over-PiQ": (Fraction(1), 1),
    "half-PiQ-over-PiQ4": (Fraction(1, 2), 4),
    "third-PiQ-over-PiQ9": (Fraction(1, 3), 9),
    "PiQ-over-PiQ3": (Fraction(1), 3),
    "Cq": (Fraction(1), 2),
}


def constant_formal(
    name: str, m: int, N: int, variable: Literal["nome", "dual"] = "nome"
) -> NomeSeries:
    """One of the named multiplier constants as an exact series."""
    try:
        factor, k = CONSTANTS[name]
    except KeyError:
        raise ContractError(f"unknown constant {name!r}; choose from {sorted(CONSTANTS)}") from None
    return pi_ratio_formal(k, m, N, variable).scale(factor)
