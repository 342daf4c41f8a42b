"""Gaussian rationals: the field Q(i) with exact Fraction components."""

from __future__ import annotations

from fractions import Fraction
from typing import Any


class GaussianRational:
    """re + im*I with Fraction parts; a plain exact field element."""

    __slots__ = ("re", "im")

    def __init__(self, re: Any = 0, im: Any = 0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    @classmethod
    def i(cls) -> "GaussianRational":
        return cls(0, 1)

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def is_rational(self) -> bool:
        return self.im == 0

    def rational_value(self) -> Fraction:
        if self.im != 0:
            raise ValueError(f"{self} has a nonzero imaginary part")
        return self.re

    def _coerce(self, other: Any) -> "GaussianRational | None":
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, (int, Fraction)):
            return GaussianRational(other)
        return None

    def __add__(self, other: Any) -> "GaussianRational":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other: Any) -> "GaussianRational":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other: Any) -> "GaussianRational":
        return (-self) + other

    def __mul__(self, other: Any) -> "GaussianRational":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return GaussianRational(self.re * other.re - self.im * other.im,
                                self.re * other.im + self.im * other.re)

    __rmul__ = __mul__

    def __truediv__(self, other: Any) -> "GaussianRational":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        n = other.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(i)")
        return self * other.conjugate() * GaussianRational(Fraction(1, 1) / n)

    def __rtruediv__(self, other: Any) -> "GaussianRational":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __eq__(self, other: Any) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __bool__(self) -> bool:
        return bool(self.re or self.im)

    def __hash__(self) -> int:
        return hash((self.re, self.im))

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        im = "I" if self.im == 1 else ("-I" if self.im == -1 else f"{self.im}*I")
        if self.re == 0:
            return im
        sign = "+" if self.im > 0 else "-"
        imag = im.lstrip("-")
        return f"{self.re} {sign} {imag}"

    def __repr__(self) -> str:
        return f"GaussianRational({self.re!r}, {self.im!r})"
