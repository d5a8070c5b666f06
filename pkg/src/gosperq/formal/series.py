"""Truncated series in a root of the nome with Laurent-polynomial coefficients.

A :class:`NomeSeries` with root ``m`` and precision ``prec`` stands for

    sum_{e <= prec} c_e t**e + O(t**(prec + 1)),    t**m = nome,

where each ``c_e`` is a :class:`LaurentPoly` in ``u = e^{iz}``. All
coefficients at exponents ``<= prec`` are exact; arithmetic tracks how the
precision moves so that no result claims more than its inputs support.
"""
from __future__ import annotations

from math import lcm
from typing import Iterator, Mapping

from ..errors import ContractError
from .gaussian import GaussianRational
from .laurent import LaurentPoly


class NomeSeries:
    __slots__ = ("m", "prec", "_c")

    def __init__(self, m: int, prec: int, coeffs: Mapping[int, object] = ()):
        if not isinstance(m, int) or m < 1:
            raise ContractError(f"root m must be a positive integer, got {m!r}")
        self.m = m
        self.prec = prec
        c: dict[int, LaurentPoly] = {}
        for e, v in dict(coeffs).items():
            if e > prec:
                continue
            if not isinstance(v, LaurentPoly):
                v = LaurentPoly.constant(v)
            if v:
                c[e] = v
        self._c = c

    @classmethod
    def _wrap(cls, m: int, prec: int, c: dict) -> "NomeSeries":
        s = object.__new__(cls)
        s.m = m
        s.prec = prec
        s._c = c
        return s

    @classmethod
    def one(cls, m: int, prec: int) -> "NomeSeries":
        return cls(m, prec, {0: 1} if prec >= 0 else {})

    # -- inspection -------------------------------------------------------
    def items(self) -> Iterator[tuple[int, LaurentPoly]]:
        for e in sorted(self._c):
            yield e, self._c[e]

    def coefficient(self, e: int) -> LaurentPoly:
        if e > self.prec:
            raise ContractError(f"coefficient t^{e} is beyond the precision t^{self.prec}")
        return self._c.get(e, LaurentPoly())

    def valuation(self) -> int:
        """Lowest exponent with a nonzero coefficient (``prec + 1`` for zero)."""
        return min(self._c) if self._c else self.prec + 1

    def is_zero(self) -> bool:
        return not self._c

    def is_u_free(self) -> bool:
        return all(v.is_constant() for v in self._c.values())

    def __len__(self):
        return len(self._c)

    def __repr__(self):
        shown = ", ".join(f"t^{e}: {v!r}" for e, v in list(self.items())[:4])
        more = " ..." if len(self._c) > 4 else ""
        return f"NomeSeries(m={self.m}, {shown}{more} + O(t^{self.prec + 1}))"

    # -- structure --------------------------------------------------------
    def rebase(self, m: int) -> "NomeSeries":
        """Re-express in the finer root ``t' = t**(1/r)`` with ``m = r * self.m``."""
        if m == self.m:
            return self
        if m % self.m:
            raise ContractError(f"cannot rebase root {self.m} to {m}: not a multiple")
        r = m // self.m
        return NomeSeries._wrap(m, r * (self.prec + 1) - 1, {r * e: v for e, v in self._c.items()})

    def truncate(self, prec: int) -> "NomeSeries":
        if prec >= self.prec:
            return self
        return NomeSeries._wrap(self.m, prec, {e: v for e, v in self._c.items() if e <= prec})

    def _aligned(self, other: "NomeSeries") -> tuple["NomeSeries", "NomeSeries"]:
        if self.m == other.m:
            return self, other
        m = lcm(self.m, other.m)
        return self.rebase(m), other.rebase(m)

    # -- arithmetic -------------------------------------------------------
    def __neg__(self):
        return NomeSeries._wrap(self.m, self.prec, {e: -v for e, v in self._c.items()})

    def __add__(self, other: "NomeSeries") -> "NomeSeries":
        a, b = self._aligned(other)
        prec = min(a.prec, b.prec)
        c = {e: v for e, v in a._c.items() if e <= prec}
        for e, v in b._c.items():
            if e > prec:
                continue
            acc = c.get(e)
            if acc is None:
                c[e] = v
            else:
                s = acc + v
                if s:
                    c[e] = s
                else:
                    del c[e]
        return NomeSeries._wrap(a.m, prec, c)

    def __sub__(self, other: "NomeSeries") -> "NomeSeries":
        return self + (-other)

    def __mul__(self, other) -> "NomeSeries":
        if not isinstance(other, NomeSeries):
            return self.scale(other)
        a, b = self._aligned(other)
        prec = min(a.prec + b.valuation(), b.prec + a.valuation())
        c: dict[int, LaurentPoly] = {}
        b_items = sorted(b._c.items())
        for ea, va in a._c.items():
            for eb, vb in b_items:
                e = ea + eb
                if e > prec:
                    break
                prod = va * vb
                acc = c.get(e)
                c[e] = prod if acc is None else acc + prod
        return NomeSeries._wrap(a.m, prec, {e: v for e, v in c.items() if v})

    __rmul__ = __mul__

    def scale(self, value, shift: int = 0) -> "NomeSeries":
        """Multiply by ``value * t**shift``; ``value`` is a scalar or a LaurentPoly."""
        if isinstance(value, LaurentPoly):
            poly = value
        else:
            poly = LaurentPoly.constant(GaussianRational.coerce(value))
        if poly.is_zero():
            return NomeSeries._wrap(self.m, self.prec + shift + self.valuation(), {})
        c = {e + shift: v * poly for e, v in self._c.items()}
        return NomeSeries._wrap(self.m, self.prec + shift, {e: v for e, v in c.items() if v})

    def __pow__(self, n: int) -> "NomeSeries":
        if not isinstance(n, int) or n < 0:
            raise ContractError(f"series power must be a nonnegative integer, got {n!r}")
        result = NomeSeries.one(self.m, self.prec + (n - 1) * self.valuation() if n else self.prec)
        base = self
        first = True
        while n:
            if n & 1:
                result = base if first else result * base
                first = False
            n >>= 1
            if n:
                base = base * base
        return result

    def reciprocal(self) -> "NomeSeries":
        """``1 / self``; the leading coefficient must be a monomial in u."""
        if not self._c:
            raise ContractError("reciprocal of a series that vanishes to its precision")
        v = self.valuation()
        lead = self._c[v]
        if not lead.is_monomial():
            raise ContractError("leading coefficient is not a unit (not a monomial in u)")
        inv_lead = lead.inverse()
        rel = self.prec - v
        tail = [(e - v, p) for e, p in sorted(self._c.items()) if e != v]
        r: list[LaurentPoly] = [inv_lead]
        for n in range(1, rel + 1):
            acc = None
            for j, bj in tail:
                if j > n:
                    break
                term = bj * r[n - j]
                acc = term if acc is None else acc + term
            r.append(LaurentPoly() if acc is None else -(acc * inv_lead))
        return NomeSeries._wrap(
            self.m, self.prec - 2 * v, {n - v: p for n, p in enumerate(r) if p}
        )

    def __truediv__(self, other) -> "NomeSeries":
        if isinstance(other, NomeSeries):
            return self * other.reciprocal()
        return self.scale(GaussianRational.coerce(other).inverse())

    # -- substitutions and evaluation ------------------------------------
    def map_u(self, a: int) -> "NomeSeries":
        """``u -> u**a`` in every coefficient."""
        return NomeSeries(self.m, self.prec, {e: v.substitute_power(a) for e, v in self._c.items()})

    def specialize_u(self, num: int, den: int) -> "NomeSeries":
        """Set ``u = exp(i pi num/den)``; exact values only."""
        return NomeSeries(self.m, self.prec, {e: v.specialize(num, den) for e, v in self._c.items()})

    def evaluate(self, t: complex, u: complex) -> complex:
        """Numeric partial sum at given ``t`` and ``u``."""
        return sum((t**e * v.evaluate(u) for e, v in self._c.items()), 0j)

    def first_difference(self, other: "NomeSeries", upto: int):
        """First ``(t_exp, u_exp, self_coeff, other_coeff)`` where the two differ up to ``upto``."""
        a, b = self._aligned(other)
        for e in sorted(set(a._c) | set(b._c)):
            if e > upto:
                break
            pa, pb = a._c.get(e, LaurentPoly()), b._c.get(e, LaurentPoly())
            if pa != pb:
                for ue in sorted(set(pa.exponents()) | set(pb.exponents())):
                    ca, cb = pa.coefficient(ue), pb.coefficient(ue)
                    if ca != cb:
                        return e, ue, ca, cb
        return None
