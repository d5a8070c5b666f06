"""Laurent polynomials in ``u = e^{iz}`` with exact Gaussian-rational coefficients."""
from __future__ import annotations

import cmath
from typing import Iterable, Mapping

from ..errors import ContractError
from .gaussian import ONE, GaussianRational, i_power


class LaurentPoly:
    """Finite sum ``sum_e c_e u**e``; zero coefficients are never stored."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, object] | Iterable[tuple[int, object]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        c: dict[int, GaussianRational] = {}
        for e, v in items:
            v = GaussianRational.coerce(v)
            if v:
                acc = c.get(e)
                v = v if acc is None else acc + v
                if v:
                    c[e] = v
                else:
                    c.pop(e, None)
        self._c = c

    @classmethod
    def _wrap(cls, c: dict) -> "LaurentPoly":
        p = object.__new__(cls)
        p._c = c
        return p

    @classmethod
    def constant(cls, value) -> "LaurentPoly":
        return cls({0: value})

    @classmethod
    def monomial(cls, exponent: int, value=ONE) -> "LaurentPoly":
        return cls({exponent: value})

    # -- inspection -------------------------------------------------------
    def items(self):
        return self._c.items()

    def exponents(self) -> list[int]:
        return sorted(self._c)

    def coefficient(self, e: int) -> GaussianRational:
        return self._c.get(e, GaussianRational(0))

    def is_zero(self) -> bool:
        return not self._c

    def is_constant(self) -> bool:
        return not self._c or (len(self._c) == 1 and 0 in self._c)

    def is_monomial(self) -> bool:
        return len(self._c) == 1

    def __len__(self):
        return len(self._c)

    def __bool__(self):
        return bool(self._c)

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self._c == other._c
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __repr__(self):
        if not self._c:
            return "LaurentPoly(0)"
        terms = " + ".join(f"({self._c[e]})u^{e}" for e in sorted(self._c))
        return f"LaurentPoly({terms})"

    # -- arithmetic -------------------------------------------------------
    def __neg__(self):
        return LaurentPoly._wrap({e: -v for e, v in self._c.items()})

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        c = dict(self._c)
        for e, v in other._c.items():
            acc = c.get(e)
            if acc is None:
                c[e] = v
            else:
                s = acc + v
                if s:
                    c[e] = s
                else:
                    del c[e]
        return LaurentPoly._wrap(c)

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        a, b = self._c, other._c
        if len(a) < len(b):
            a, b = b, a
        c: dict[int, GaussianRational] = {}
        get = c.get
        for eb, vb in b.items():
            for ea, va in a.items():
                e = ea + eb
                acc = get(e)
                prod = va * vb
                c[e] = prod if acc is None else acc + prod
        return LaurentPoly._wrap({e: v for e, v in c.items() if v})

    def scale(self, value) -> "LaurentPoly":
        value = GaussianRational.coerce(value)
        if not value:
            return LaurentPoly._wrap({})
        return LaurentPoly._wrap({e: v * value for e, v in self._c.items()})

    def inverse(self) -> "LaurentPoly":
        """Inverse of a monomial; other Laurent polynomials are not units."""
        if len(self._c) != 1:
            raise ContractError("only monomials are invertible among Laurent polynomials")
        (e, v), = self._c.items()
        return LaurentPoly._wrap({-e: v.inverse()})

    # -- substitutions ----------------------------------------------------
    def substitute_power(self, a: int) -> "LaurentPoly":
        """``u -> u**a``."""
        if a == 0:
            total = GaussianRational(0)
            for v in self._c.values():
                total = total + v
            return LaurentPoly.constant(total)
        return LaurentPoly._wrap({a * e: v for e, v in self._c.items()})

    def specialize(self, num: int, den: int) -> GaussianRational:
        """Exact value at ``u = exp(i pi num/den)``.

        Allowed only when every ``u**e`` lands on a power of ``i``.
        """
        total = GaussianRational(0)
        for e, v in self._c.items():
            twice = 2 * e * num
            if twice % den:
                raise ContractError(
                    f"u^{e} at u = exp(i pi {num}/{den}) is not a Gaussian rational"
                )
            total = total + v * i_power(twice // den)
        return total

    def evaluate(self, u: complex) -> complex:
        return sum((complex(v) * u**e for e, v in self._c.items()), 0j)

    def evaluate_z(self, z: complex) -> complex:
        return sum((complex(v) * cmath.exp(1j * e * z) for e, v in self._c.items()), 0j)


ZERO_POLY = LaurentPoly()
ONE_POLY = LaurentPoly.constant(1)
