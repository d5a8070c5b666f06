"""Exact Gaussian rationals ``(re + im i) / den`` with integer parts."""
from __future__ import annotations

from fractions import Fraction
from math import gcd


class GaussianRational:
    """An element of Q(i), kept in lowest terms with ``den > 0``."""

    __slots__ = ("re", "im", "den")

    def __init__(self, re=0, im=0, den: int = 1):
        if isinstance(re, Fraction) or isinstance(im, Fraction):
            re, im = Fraction(re), Fraction(im)
            d = re.denominator * im.denominator // gcd(re.denominator, im.denominator)
            re, im, den = int(re * d), int(im * d), d * den
        if den == 0:
            raise ZeroDivisionError("GaussianRational with zero denominator")
        if den < 0:
            re, im, den = -re, -im, -den
        if den != 1:
            g = gcd(gcd(re, im), den)
            if g > 1:
                re, im, den = re // g, im // g, den // g
        self.re = re
        self.im = im
        self.den = den

    @classmethod
    def coerce(cls, x) -> "GaussianRational":
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, int):
            return cls(x)
        if isinstance(x, Fraction):
            return cls(x.numerator, 0, x.denominator)
        if isinstance(x, complex):
            re, im = Fraction(x.real), Fraction(x.imag)
            return cls(re, im)
        if isinstance(x, tuple) and len(x) == 2:
            return cls(Fraction(x[0]), Fraction(x[1]))
        raise TypeError(f"cannot convert {x!r} to a Gaussian rational")

    def __bool__(self):
        return self.re != 0 or self.im != 0

    def __eq__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self.re == o.re and self.im == o.im and self.den == o.den

    def __hash__(self):
        return hash((self.re, self.im, self.den))

    def __neg__(self):
        return _raw(-self.re, -self.im, self.den)

    def __add__(self, other):
        o = other if isinstance(other, GaussianRational) else GaussianRational.coerce(other)
        if self.den == o.den:
            if self.den == 1:
                return _raw(self.re + o.re, self.im + o.im, 1)
            return GaussianRational(self.re + o.re, self.im + o.im, self.den)
        return GaussianRational(self.re * o.den + o.re * self.den, self.im * o.den + o.im * self.den, self.den * o.den)

    __radd__ = __add__

    def __sub__(self, other):
        o = other if isinstance(other, GaussianRational) else GaussianRational.coerce(other)
        return self + (-o)

    def __rsub__(self, other):
        return GaussianRational.coerce(other) - self

    def __mul__(self, other):
        o = other if isinstance(other, GaussianRational) else GaussianRational.coerce(other)
        re = self.re * o.re - self.im * o.im
        im = self.re * o.im + self.im * o.re
        if self.den == 1 and o.den == 1:
            return _raw(re, im, 1)
        return GaussianRational(re, im, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self) -> "GaussianRational":
        norm = self.re * self.re + self.im * self.im
        if norm == 0:
            raise ZeroDivisionError("inverse of zero")
        # (re - im i) den / norm
        return GaussianRational(self.re * self.den, -self.im * self.den, norm)

    def __truediv__(self, other):
        return self * GaussianRational.coerce(other).inverse()

    def __rtruediv__(self, other):
        return GaussianRational.coerce(other) * self.inverse()

    def __complex__(self):
        return complex(self.re / self.den, self.im / self.den)

    @property
    def real(self) -> Fraction:
        return Fraction(self.re, self.den)

    @property
    def imag(self) -> Fraction:
        return Fraction(self.im, self.den)

    def __repr__(self):
        return f"GaussianRational({self})"

    def __str__(self):
        re, im = self.real, self.imag
        if im == 0:
            return str(re)
        if re == 0:
            return f"{im}i"
        sign = "+" if im > 0 else "-"
        return f"{re}{sign}{abs(im)}i"


def _raw(re: int, im: int, den: int) -> GaussianRational:
    g = object.__new__(GaussianRational)
    g.re = re
    g.im = im
    g.den = den
    return g


ZERO = _raw(0, 0, 1)
ONE = _raw(1, 0, 1)
I = _raw(0, 1, 1)


def i_power(n: int) -> GaussianRational:
    """``i**n`` for any integer ``n``."""
    return (ONE, I, _raw(-1, 0, 1), _raw(0, -1, 1))[n % 4]
