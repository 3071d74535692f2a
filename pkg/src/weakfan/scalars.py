"""Exact scalars: arbitrary-precision rationals and Gaussian rationals.

Rational arithmetic is `fractions.Fraction` from the standard library, which
already keeps every value in lowest terms with a positive denominator.  This
module adds the Gaussian rationals QQ(i) on top of it, plus the string
serialization used by the CLI ("p/q", never a float).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

RationalLike = Union[int, Fraction]


def parse_rational(text: object) -> Fraction:
    """Parse "p/q" or "p" (or a plain int) into an exact Fraction."""
    if isinstance(text, bool):
        raise ValueError(f"not a rational: {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    if isinstance(text, str):
        return Fraction(text.strip())
    raise ValueError(f"not a rational: {text!r}")


def format_rational(x: Fraction) -> str:
    """Render a Fraction as "p/q", or "p" when the denominator is 1."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class GaussianRational:
    """A complex number re + im*i with exact rational parts."""

    re: Fraction
    im: Fraction

    @staticmethod
    def of(value, im: RationalLike = 0) -> "GaussianRational":
        """Coerce an int, Fraction or GaussianRational (plus optional imaginary part)."""
        if isinstance(value, GaussianRational):
            if im:
                raise ValueError("cannot add an imaginary part to a GaussianRational")
            return value
        return GaussianRational(Fraction(value), Fraction(im))

    # -- field operations ------------------------------------------------

    def __add__(self, other):
        other = _lift(other)
        if other is None:
            return NotImplemented
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _lift(other)
        if other is None:
            return NotImplemented
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = _lift(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = _lift(other)
        if other is None:
            return NotImplemented
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _lift(other)
        if other is None:
            return NotImplemented
        n = other.re * other.re + other.im * other.im
        if n == 0:
            raise ZeroDivisionError("division by zero GaussianRational")
        return GaussianRational(
            (self.re * other.re + self.im * other.im) / n,
            (self.im * other.re - self.re * other.im) / n,
        )

    def __rtruediv__(self, other):
        other = _lift(other)
        if other is None:
            return NotImplemented
        return other / self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        other = _lift(other)
        if other is None:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        # Real values must hash like the Fraction they equal.
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    # -- structure --------------------------------------------------------

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm(self) -> Fraction:
        """The exact squared modulus re^2 + im^2."""
        return self.re * self.re + self.im * self.im

    @property
    def is_real(self) -> bool:
        return self.im == 0

    def __repr__(self):
        return f"GaussianRational({self.re!r}, {self.im!r})"

    def __str__(self):
        if self.im == 0:
            return format_rational(self.re)
        if self.re == 0:
            return f"{format_rational(self.im)}i"
        sign = "+" if self.im > 0 else "-"
        return f"{format_rational(self.re)}{sign}{format_rational(abs(self.im))}i"


def _lift(value) -> GaussianRational | None:
    if isinstance(value, GaussianRational):
        return value
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return GaussianRational(Fraction(value), Fraction(0))
    return None


GAUSSIAN_ZERO = GaussianRational(Fraction(0), Fraction(0))
GAUSSIAN_ONE = GaussianRational(Fraction(1), Fraction(0))
GAUSSIAN_I = GaussianRational(Fraction(0), Fraction(1))

Scalar = Union[Fraction, GaussianRational]


def conjugate_scalar(x: Scalar) -> Scalar:
    """Complex conjugation; the identity on rationals."""
    if isinstance(x, GaussianRational):
        return x.conjugate()
    return x


def parse_gaussian(pair) -> GaussianRational:
    """Parse {"re": "p/q", "im": "r/s"} into a GaussianRational."""
    if not isinstance(pair, dict) or set(pair) != {"re", "im"}:
        raise ValueError(f"not a Gaussian rational: {pair!r}")
    return GaussianRational(parse_rational(pair["re"]), parse_rational(pair["im"]))


def format_gaussian(x: GaussianRational) -> dict:
    return {"re": format_rational(x.re), "im": format_rational(x.im)}
