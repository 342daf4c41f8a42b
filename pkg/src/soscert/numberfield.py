"""Algebraic number fields Q(alpha) with exact power-basis arithmetic.

A NumberField is defined by a univariate rational polynomial, stored as
its monic associate m.  Elements are coordinate vectors in the power
basis 1, alpha, ..., alpha^(d-1); products reduce mod m.  Traces come
from Newton power sums, real embeddings from Sturm isolation, and exact
sign queries from interval refinement (univariate.sign_at_root).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Iterable

from . import univariate as uv
from .univariate import Poly


class NumberField:
    def __init__(self, minpoly: Iterable[Fraction | int], name: str = "a",
                 *, real_root_index: int | None = None, check_irreducible: bool = False):
        m = uv.normalize(minpoly)
        if uv.degree(m) < 1:
            raise ValueError("minimal polynomial must have degree >= 1")
        self.minpoly: Poly = uv.scale(m, 1 / m[-1])
        self.minpoly_primitive: Poly = uv.primitive_int(m)
        self.name = name
        self.degree = uv.degree(m)
        if check_irreducible:
            self._screen_reducible()
        self._real_intervals = uv.isolate_real_roots(self.minpoly)
        if real_root_index is not None and not (
                -len(self._real_intervals) <= real_root_index < len(self._real_intervals)):
            raise ValueError(f"no real root with index {real_root_index}")
        self.real_root_index = real_root_index
        self._power_traces = self._newton_power_sums()

    def _screen_reducible(self) -> None:
        """Reject obviously reducible inputs; conclusive only up to degree 3.

        Checks squarefreeness and rational roots (complete for degree <= 3).
        Higher-degree inputs passing the screen may still be reducible.
        """
        m = self.minpoly
        if uv.degree(uv.gcd_poly(m, uv.derivative(m))) > 0:
            raise ValueError("minimal polynomial is not squarefree")
        if self.degree == 1:
            return
        mi = self.minpoly_primitive
        lead = int(mi[-1])
        tail = int(mi[0])
        if tail == 0:
            raise ValueError("minimal polynomial has the rational root 0")
        for p in _divisors(abs(tail)):
            for q in _divisors(abs(lead)):
                for cand in (Fraction(p, q), Fraction(-p, q)):
                    if uv.eval_at(m, cand) == 0:
                        raise ValueError(f"minimal polynomial has rational root {cand}")

    def _newton_power_sums(self) -> list[Fraction]:
        """Traces of alpha^k for k = 0..degree-1 via Newton's identities."""
        d = self.degree
        c = self.minpoly
        sums = [Fraction(d)]
        for k in range(1, d):
            acc = -k * c[d - k]
            for i in range(1, k):
                acc -= c[d - i] * sums[k - i]
            sums.append(acc)
        return sums

    # -- element constructors -------------------------------------------

    def element(self, coords: Iterable[Fraction | int]) -> "AlgebraicNumber":
        poly = uv.normalize(coords)
        if uv.degree(poly) >= self.degree:
            poly = uv.rem(poly, self.minpoly)
        vec = tuple(poly[i] if i < len(poly) else Fraction(0) for i in range(self.degree))
        return AlgebraicNumber(self, vec)

    def gen(self) -> "AlgebraicNumber":
        return self.element([0, 1])

    def zero(self) -> "AlgebraicNumber":
        return self.element([])

    def one(self) -> "AlgebraicNumber":
        return self.element([1])

    def rational(self, q: Fraction | int) -> "AlgebraicNumber":
        return self.element([q])

    # -- field data -------------------------------------------------------

    def trace(self, a: "AlgebraicNumber | Fraction | int") -> Fraction:
        """Field trace Tr(a) = sum of a over all embeddings; always rational."""
        if isinstance(a, (int, Fraction)):
            return Fraction(a) * self.degree
        if a.field is not self and a.field != self:
            raise ValueError("element of a different field")
        return sum((c * t for c, t in zip(a.coords, self._power_traces)), Fraction(0))

    def n_real_roots(self) -> int:
        return len(self._real_intervals)

    def real_root_intervals(self) -> list[tuple[Fraction, Fraction]]:
        return list(self._real_intervals)

    def _embedding(self, index: int | None) -> tuple[Fraction, Fraction]:
        if not self._real_intervals:
            raise ValueError("field has no real embedding")
        if index is None:
            index = self.real_root_index if self.real_root_index is not None else 0
        return self._real_intervals[index]

    def sign(self, a: "AlgebraicNumber", root_index: int | None = None) -> int:
        """Exact sign of a under the chosen real embedding."""
        if not any(a.coords):
            return 0
        return uv.sign_at_root(uv.normalize(a.coords), self.minpoly,
                               self._embedding(root_index))

    def approx(self, a: "AlgebraicNumber", root_index: int | None = None,
               width: Fraction = Fraction(1, 10**12)) -> Fraction:
        root = uv.approx_root(self.minpoly, self._embedding(root_index), width)
        return uv.eval_at(uv.normalize(a.coords), root)

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, NumberField):
            return NotImplemented
        return self.minpoly == other.minpoly and self.name == other.name

    def __hash__(self) -> int:
        return hash((tuple(self.minpoly), self.name))

    def __repr__(self) -> str:
        terms = []
        for i in range(len(self.minpoly_primitive) - 1, -1, -1):
            c = self.minpoly_primitive[i]
            if c:
                terms.append(f"{c}*Z^{i}" if i else f"{c}")
        return f"NumberField({' + '.join(terms)}, {self.name!r})"


def _divisors(n: int) -> list[int]:
    out = [d for d in range(1, int(n ** 0.5) + 1) if n % d == 0]
    return out + [n // d for d in reversed(out) if d * d != n]


class AlgebraicNumber:
    """Element of a NumberField in power-basis coordinates."""

    __slots__ = ("field", "coords")

    def __init__(self, field: NumberField, coords: tuple[Fraction, ...]):
        self.field = field
        self.coords = coords

    def _coerce(self, other: Any) -> "AlgebraicNumber | None":
        if isinstance(other, AlgebraicNumber):
            if other.field is self.field or other.field == self.field:
                return other
            raise ValueError("elements of different number fields")
        if isinstance(other, (int, Fraction)):
            return self.field.rational(other)
        return None

    def _poly(self) -> Poly:
        return uv.normalize(self.coords)

    def __add__(self, other: Any) -> "AlgebraicNumber":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return AlgebraicNumber(self.field,
                               tuple(a + b for a, b in zip(self.coords, other.coords)))

    __radd__ = __add__

    def __neg__(self) -> "AlgebraicNumber":
        return AlgebraicNumber(self.field, tuple(-c for c in self.coords))

    def __sub__(self, other: Any) -> "AlgebraicNumber":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Any) -> "AlgebraicNumber":
        return (-self) + other

    def __mul__(self, other: Any) -> "AlgebraicNumber":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.field.element(uv.mul(self._poly(), other._poly()))

    __rmul__ = __mul__

    def inverse(self) -> "AlgebraicNumber":
        """Inverse via the extended Euclidean algorithm in Q[Z]."""
        a = self._poly()
        if not a:
            raise ZeroDivisionError("inverse of zero")
        m = self.field.minpoly
        r0, r1 = m, a
        s0, s1 = [], [Fraction(1)]
        while uv.degree(r1) > 0:
            q, r = uv.divmod_poly(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, uv.sub(s0, uv.mul(q, s1))
        if not r1:
            raise ZeroDivisionError("element shares a factor with the minimal polynomial")
        return self.field.element(uv.scale(s1, 1 / r1[0]))

    def __truediv__(self, other: Any) -> "AlgebraicNumber":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other: Any) -> "AlgebraicNumber":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, n: int) -> "AlgebraicNumber":
        if n < 0:
            return self.inverse() ** (-n)
        out = self.field.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    def __eq__(self, other: Any) -> bool:
        try:
            other = self._coerce(other)
        except ValueError:
            return False
        if other is None:
            return NotImplemented
        return self.coords == other.coords

    def __bool__(self) -> bool:
        return any(self.coords)

    def __hash__(self) -> int:
        if self.is_rational():
            return hash(self.coords[0])
        return hash((tuple(self.field.minpoly), self.coords))

    def is_rational(self) -> bool:
        return not any(self.coords[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coords[0]

    def trace(self) -> Fraction:
        return self.field.trace(self)

    def sign(self, root_index: int | None = None) -> int:
        return self.field.sign(self, root_index)

    def __float__(self) -> float:
        return float(self.field.approx(self))

    def __str__(self) -> str:
        name = self.field.name
        pieces = []
        for i in range(self.field.degree - 1, -1, -1):
            c = self.coords[i]
            if not c:
                continue
            if i == 0:
                body = str(abs(c))
            else:
                var = name if i == 1 else f"{name}^{i}"
                body = var if abs(c) == 1 else f"{abs(c)}*{var}"
            if not pieces:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(pieces) if pieces else "0"

    def __repr__(self) -> str:
        return f"<{self} in Q({self.field.name})>"
