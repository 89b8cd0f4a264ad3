"""Exact Gaussian-rational scalars and coefficient parsing helpers."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Union


@dataclass(frozen=True, slots=True)
class GaussianRational:
    """A complex number with rational real and imaginary parts."""

    re: Fraction
    im: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        object.__setattr__(self, "re", Fraction(self.re))
        object.__setattr__(self, "im", Fraction(self.im))

    @staticmethod
    def coerce(x: "ExactScalar") -> "GaussianRational":
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, (int, Rational)):
            return GaussianRational(Fraction(x))
        raise TypeError(f"not an exact scalar: {x!r}")

    def __add__(self, other):
        if not is_exact(other):
            return NotImplemented
        o = GaussianRational.coerce(other)
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        if not is_exact(other):
            return NotImplemented
        return self + (-GaussianRational.coerce(other))

    def __rsub__(self, other):
        if not is_exact(other):
            return NotImplemented
        return GaussianRational.coerce(other) - self

    def __mul__(self, other):
        if not is_exact(other):
            return NotImplemented
        o = GaussianRational.coerce(other)
        return GaussianRational(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not is_exact(other):
            return NotImplemented
        o = GaussianRational.coerce(other)
        d = o.abs2()
        if d == 0:
            raise ZeroDivisionError("division by zero")
        num = self * o.conjugate()
        return GaussianRational(num.re / d, num.im / d)

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        out = GaussianRational(Fraction(1))
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def abs2(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __eq__(self, other) -> bool:
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Rational)):
            return self.im == 0 and self.re == other
        if isinstance(other, complex):
            return complex(self) == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.re, self.im)) if self.im else hash(self.re)

    def __repr__(self) -> str:
        if not self.im:
            return f"GaussianRational({self.re})"
        return f"GaussianRational({self.re}, {self.im})"


ExactScalar = Union[int, Fraction, GaussianRational]
Scalar = Union[int, Fraction, GaussianRational, float, complex]


def is_exact(x) -> bool:
    """True for ints, Fractions and GaussianRationals (the exact scalar types)."""
    return isinstance(x, (GaussianRational, int, Rational))


def to_complex(x: Scalar) -> complex:
    return complex(x)


def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_scalar_part(text: str) -> Fraction | float:
    """Parse "p/q" or an integer exactly; anything with a decimal point or exponent as float."""
    s = str(text).strip()
    if any(c in s for c in ".eEn"):  # 'n' catches nan/inf
        return float(s)
    return Fraction(s)


def abs2(x: Scalar):
    """|x|^2, exact for exact inputs."""
    if isinstance(x, GaussianRational):
        return x.abs2()
    if isinstance(x, (int, Rational)):
        return Fraction(x) * Fraction(x)
    return abs(complex(x)) ** 2
