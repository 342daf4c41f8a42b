"""Two-square descent over Gaussian rationals and a three-square generator.

An odd-degree real field K = Q[Z]/(m) keeps -1 a non-square, so a
polynomial that is a sum of two squares over K and happens to have
rational coefficients is a sum of two squares of rational *functions*.
``conjugate_product`` realizes the norm step: it multiplies p1 + I*p2
over all conjugates of the generator and returns rational P1, P2 with
P1^2 + P2^2 = f^d, never constructing a splitting field (the product
is the determinant of the companion-matrix evaluation, i.e. a
resultant, so it is symmetric in the roots by construction).
``two_square_descent`` then removes the denominator f^((d-1)/2), by
exact division when possible and otherwise by gcd extraction in
Q(I)[x], to reach polynomials q1, q2 with q1^2 + q2^2 = f.

``gen_three_squares`` is the reverse direction for the concrete cubic
field Q(2^(1/3)): it manufactures rational forms that are sums of three
squares over the field by solving the two linear side conditions that
kill the alpha and alpha^2 components.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt
from typing import Any, Iterable, Sequence

from . import univariate as uv
from .gaussian import GaussianRational
from .multipoly import MultiPoly, mv_gcd
from .numberfield import AlgebraicNumber, NumberField

_ZERO = Fraction(0)
_ONE = Fraction(1)


class GaussianPoly:
    """Polynomial re + I*im with rational components."""

    __slots__ = ("re", "im")

    def __init__(self, re: MultiPoly, im: MultiPoly):
        if re.vars != im.vars:
            raise ValueError("components must share one variable tuple")
        self.re = re
        self.im = im

    @classmethod
    def lift(cls, p: MultiPoly) -> "GaussianPoly":
        return cls(p, MultiPoly.zero(p.vars))

    @property
    def vars(self) -> tuple[str, ...]:
        return self.re.vars

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, GaussianPoly):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    __hash__ = None

    def __add__(self, other: "GaussianPoly") -> "GaussianPoly":
        return GaussianPoly(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "GaussianPoly") -> "GaussianPoly":
        return GaussianPoly(self.re - other.re, self.im - other.im)

    def __neg__(self) -> "GaussianPoly":
        return GaussianPoly(-self.re, -self.im)

    def __mul__(self, other: Any) -> "GaussianPoly":
        if isinstance(other, GaussianPoly):
            return GaussianPoly(self.re * other.re - self.im * other.im,
                                self.re * other.im + self.im * other.re)
        if isinstance(other, GaussianRational):
            return GaussianPoly(self.re * other.re - self.im * other.im,
                                self.re * other.im + self.im * other.re)
        return GaussianPoly(self.re * other, self.im * other)

    __rmul__ = __mul__

    def conjugate(self) -> "GaussianPoly":
        return GaussianPoly(self.re, -self.im)

    def norm(self) -> MultiPoly:
        return self.re * self.re + self.im * self.im

    def is_constant(self) -> bool:
        return self.re.is_constant() and self.im.is_constant()

    def constant_value(self) -> GaussianRational:
        return GaussianRational(self.re.constant_value(), self.im.constant_value())

    def exact_div(self, other: "GaussianPoly") -> "GaussianPoly":
        """Exact quotient; divides through the rational norm of the divisor."""
        num = self * other.conjugate()
        den = other.norm()
        return GaussianPoly(num.re.exact_div(den), num.im.exact_div(den))

    def __str__(self) -> str:
        if not self.im:
            return str(self.re)
        return f"({self.re}) + I*({self.im})"

    def __repr__(self) -> str:
        return f"GaussianPoly({self.re!r}, {self.im!r})"


def _to_scalar(g: GaussianPoly) -> MultiPoly:
    """Repack components into one MultiPoly with GaussianRational coefficients."""
    terms: dict[tuple[int, ...], GaussianRational] = {}
    for mono, q in g.re.terms.items():
        terms[mono] = GaussianRational(q)
    for mono, q in g.im.terms.items():
        prev = terms.get(mono)
        terms[mono] = GaussianRational(prev.re if prev else _ZERO, q)
    return MultiPoly(g.vars, terms)


def _from_scalar(p: MultiPoly) -> GaussianPoly:
    re: dict[tuple[int, ...], Fraction] = {}
    im: dict[tuple[int, ...], Fraction] = {}
    for mono, coef in p.terms.items():
        if not isinstance(coef, GaussianRational):
            coef = GaussianRational(coef)
        if coef.re:
            re[mono] = coef.re
        if coef.im:
            im[mono] = coef.im
    return GaussianPoly(MultiPoly(p.vars, re), MultiPoly(p.vars, im))


# -- conjugate product ----------------------------------------------------


def _minpoly_coeffs(m: Any) -> list[Fraction]:
    """Monic ascending coefficient list from a NumberField or raw coefficients."""
    if isinstance(m, NumberField):
        return list(m.minpoly)
    coeffs = uv.normalize(m)
    if uv.degree(coeffs) < 1:
        raise ValueError("minimal polynomial must have degree >= 1")
    return uv.scale(coeffs, 1 / coeffs[-1])


def _components(p: MultiPoly, minpoly: list[Fraction]) -> list[MultiPoly]:
    """Split a field-coefficient polynomial into rational power-basis layers."""
    d = len(minpoly) - 1
    layers: list[dict[tuple[int, ...], Fraction]] = [{} for _ in range(d)]
    for mono, coef in p.terms.items():
        if isinstance(coef, AlgebraicNumber):
            if list(coef.field.minpoly) != minpoly:
                raise ValueError("coefficient field does not match the minimal polynomial")
            coords: Sequence[Fraction] = coef.coords
        else:
            coords = (Fraction(coef),)
        for j, q in enumerate(coords):
            if q:
                layers[j][mono] = q
    return [MultiPoly(p.vars, layer) for layer in layers]


def _companion_powers(minpoly: list[Fraction]) -> list[list[list[Fraction]]]:
    """I, C, C^2, ..., C^(d-1) for the companion matrix C of the monic minpoly."""
    d = len(minpoly) - 1
    comp = [[_ZERO] * d for _ in range(d)]
    for r in range(1, d):
        comp[r][r - 1] = _ONE
    for r in range(d):
        comp[r][d - 1] = -minpoly[r]
    powers = [[[_ONE if r == c else _ZERO for c in range(d)] for r in range(d)]]
    for _ in range(d - 1):
        prev = powers[-1]
        powers.append([[sum((prev[r][k] * comp[k][c] for k in range(d)
                             if prev[r][k] and comp[k][c]), _ZERO)
                        for c in range(d)] for r in range(d)])
    return powers


def _gaussian_det(mat: list[list[GaussianPoly]]) -> GaussianPoly:
    """Fraction-free determinant; all divisions are exact by Bareiss's identity."""
    n = len(mat)
    work = [row[:] for row in mat]
    zero = GaussianPoly.lift(MultiPoly.zero(mat[0][0].vars))
    sign = 1
    prev: GaussianPoly | None = None
    for k in range(n - 1):
        if not work[k][k]:
            swap = next((r for r in range(k + 1, n) if work[r][k]), None)
            if swap is None:
                return zero
            work[k], work[swap] = work[swap], work[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = work[i][j] * work[k][k] - work[i][k] * work[k][j]
                work[i][j] = num.exact_div(prev) if prev is not None else num
        prev = work[k][k]
    det = work[n - 1][n - 1]
    return -det if sign < 0 else det


def conjugate_product(p1: MultiPoly, p2: MultiPoly,
                      minpoly: Any) -> tuple[MultiPoly, MultiPoly]:
    """Product of p1 + I*p2 over all conjugates of the field generator.

    minpoly is the generator's minimal polynomial (a NumberField or an
    ascending coefficient sequence) of odd degree d.  Requires that
    f = p1^2 + p2^2 has rational coefficients; returns rational (P1, P2)
    with P1^2 + P2^2 = f^d, verified exactly before returning.

    The product is computed as det(g(C)) for the companion matrix C of
    the minimal polynomial, where g collects the power-basis layers of
    p1 + I*p2; a determinant in the rational entries of C is symmetric
    in the roots, so no splitting field and no root choice is involved.
    """
    if p1.vars != p2.vars:
        raise ValueError("p1 and p2 must share one variable tuple")
    m = _minpoly_coeffs(minpoly)
    d = len(m) - 1
    if d % 2 == 0:
        raise ValueError("minimal polynomial degree must be odd")
    layers1 = _components(p1, m)
    layers2 = _components(p2, m)

    # f = p1^2 + p2^2 must be rational: square in the quotient ring and
    # reject any residue in the alpha..alpha^(d-1) layers.
    f_layers = _add_layers(_mul_mod(layers1, layers1, m),
                           _mul_mod(layers2, layers2, m))
    if any(f_layers[j] for j in range(1, d)):
        raise ValueError("p1^2 + p2^2 is not rational")
    f = f_layers[0]

    if d == 1:
        return layers1[0], layers2[0]

    powers = _companion_powers(m)
    glayers = [GaussianPoly(layers1[j], layers2[j]) for j in range(d)]
    zero = GaussianPoly.lift(MultiPoly.zero(p1.vars))
    entries = [[zero for _ in range(d)] for _ in range(d)]
    for r in range(d):
        for c in range(d):
            acc = zero
            for j in range(d):
                scale = powers[j][r][c]
                if scale:
                    acc = acc + glayers[j] * scale
            entries[r][c] = acc
    product = _gaussian_det(entries)
    if product.re * product.re + product.im * product.im != f ** d:
        raise ArithmeticError("conjugate product failed the norm identity")
    return product.re, product.im


def _mul_mod(a: list[MultiPoly], b: list[MultiPoly],
             minpoly: list[Fraction]) -> list[MultiPoly]:
    """Layer product reduced by the monic minimal polynomial."""
    d = len(minpoly) - 1
    zero = MultiPoly.zero(a[0].vars)
    prod = [zero] * (2 * d - 1)
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j, bj in enumerate(b):
            if bj:
                prod[i + j] = prod[i + j] + ai * bj
    for k in range(2 * d - 2, d - 1, -1):
        top = prod[k]
        if not top:
            continue
        prod[k] = zero
        for j in range(d):
            if minpoly[j]:
                prod[k - d + j] = prod[k - d + j] - top * minpoly[j]
    return prod[:d]


def _add_layers(a: list[MultiPoly], b: list[MultiPoly]) -> list[MultiPoly]:
    return [x + y for x, y in zip(a, b)]


# -- two-square descent ---------------------------------------------------


class DescentIncomplete(Exception):
    """Gcd extraction hit its depth bound before isolating a square root.

    The rational-function representation always exists and is carried
    along: f = (p1 / f**power)**2 + (p2 / f**power)**2.
    """

    def __init__(self, f: MultiPoly, p1: MultiPoly, p2: MultiPoly, power: int):
        super().__init__(
            f"descent incomplete: f = (P1/f^{power})^2 + (P2/f^{power})^2 "
            "is the best representation found")
        self.f = f
        self.p1 = p1
        self.p2 = p2
        self.power = power


def _sqrt_fraction(q: Fraction) -> Fraction | None:
    if q < 0:
        return None
    rn = isqrt(q.numerator)
    rd = isqrt(q.denominator)
    if rn * rn == q.numerator and rd * rd == q.denominator:
        return Fraction(rn, rd)
    return None


def _two_square_rational(q: Fraction) -> tuple[Fraction, Fraction] | None:
    """Write q = a^2 + b^2 with rational a, b, by bounded integer search."""
    if q < 0:
        return None
    if not q:
        return _ZERO, _ZERO
    root = _sqrt_fraction(q)
    if root is not None:
        return root, _ZERO
    n = q.numerator * q.denominator
    if n > 10**12:
        return None
    a = isqrt(n)
    while 2 * a * a >= n:
        rest = n - a * a
        b = isqrt(rest)
        if b * b == rest:
            return Fraction(a, q.denominator), Fraction(b, q.denominator)
        a -= 1
    return None


def two_square_descent(f: MultiPoly, p1: MultiPoly, p2: MultiPoly, d: int,
                       depth: int = 32) -> tuple[MultiPoly, MultiPoly]:
    """Rational q1, q2 with q1^2 + q2^2 = f, given f^d = p1^2 + p2^2, d odd.

    Fast path: when f^((d-1)/2) divides both inputs the quotients answer
    directly.  General path: repeatedly split p1 + I*p2 by its gcd with
    the remaining rational factor in Q(I)[x]; each extracted factor H
    contributes its norm H*conj(H) to f.  Raises DescentIncomplete when
    the depth bound is exhausted.
    """
    if d < 1 or d % 2 == 0:
        raise ValueError("d must be a positive odd integer")
    if p1.vars != p2.vars or f.vars != p1.vars:
        raise ValueError("f, p1, p2 must share one variable tuple")
    if p1 * p1 + p2 * p2 != f ** d:
        raise ValueError("inputs do not satisfy f^d = p1^2 + p2^2")
    if d == 1:
        return p1, p2
    e = (d - 1) // 2
    fe = f ** e
    if fe.divides(p1) and fe.divides(p2):
        q1 = p1.exact_div(fe)
        q2 = p2.exact_div(fe)
        if q1 * q1 + q2 * q2 != f:
            raise ArithmeticError("fast-path quotients failed verification")
        return q1, q2

    work = _to_scalar(GaussianPoly(p1, p2))
    acc = GaussianPoly(MultiPoly.constant(f.vars, _ONE), MultiPoly.zero(f.vars))
    rest = f
    for _ in range(depth):
        if rest.is_constant():
            pair = _two_square_rational(Fraction(rest.constant_value()))
            if pair is None:
                break
            a, b = pair
            scale = GaussianRational(a, b)
            result = acc * scale
            q1, q2 = result.re, result.im
            if q1 * q1 + q2 * q2 != f:
                raise ArithmeticError("descent result failed verification")
            return q1, q2
        factor_s = mv_gcd(work, rest.map_coeffs(lambda c: GaussianRational(c)))
        if factor_s.is_constant():
            break
        factor = _from_scalar(factor_s)
        norm = factor.norm()
        if not norm.divides(rest):
            # Over-extracted: the gcd packs more multiplicity than rest
            # holds; narrow the working polynomial and retry.
            work = factor_s
            continue
        rest = rest.exact_div(norm)
        acc = acc * factor
        work = work.exact_div(factor_s)
    raise DescentIncomplete(f, p1, p2, e)


# -- three-square generator over Q(cbrt 2) --------------------------------


def _as_poly(value: Any, variables: tuple[str, ...]) -> MultiPoly:
    if isinstance(value, MultiPoly):
        if value.vars != variables:
            raise ValueError("inputs must share one variable tuple")
        return value
    return MultiPoly.constant(variables, Fraction(value))


def gen_three_squares(a3: Any, b1: Any, b2: Any, b3: Any,
                      c1: Any, c2: Any, c3: Any,
                      ) -> tuple[MultiPoly, MultiPoly, MultiPoly, MultiPoly]:
    """Rational f that is a sum of three squares over Q(alpha), alpha^3 = 2.

    With p_i = a_i + b_i*alpha + c_i*alpha^2, the alpha and alpha^2
    components of p1^2 + p2^2 + p3^2 are linear in a1, a2; solving them
    to zero by Cramer's rule and clearing the common denominator
    Delta = b1*c2 - b2*c1 yields polynomials p_i with rational
    f = p1^2 + p2^2 + p3^2.  Returns (f, p1, p2, p3); the vanishing of
    the alpha and alpha^2 components is verified exactly.
    """
    variables = next((v.vars for v in (a3, b1, b2, b3, c1, c2, c3)
                      if isinstance(v, MultiPoly)), ())
    a3 = _as_poly(a3, variables)
    bs = [_as_poly(v, variables) for v in (b1, b2, b3)]
    cs = [_as_poly(v, variables) for v in (c1, c2, c3)]

    delta = bs[0] * cs[1] - bs[1] * cs[0]
    if not delta:
        raise ValueError("b1*c2 - b2*c1 must be nonzero")

    # alpha component of the square sum is 2(a1 b1 + a2 b2) + B0,
    # alpha^2 component is 2(a1 c1 + a2 c2) + C0.
    b0 = (a3 * bs[2] + cs[0] * cs[0] + cs[1] * cs[1] + cs[2] * cs[2]) * 2
    c0 = bs[0] * bs[0] + bs[1] * bs[1] + bs[2] * bs[2] + (a3 * cs[2]) * 2
    # Cramer: a1 = (b2*C0 - c2*B0) / (2 Delta), a2 = (c1*B0 - b1*C0) / (2 Delta);
    # clearing Delta leaves the rational halves below.
    half = Fraction(1, 2)
    rational_parts = [(bs[1] * c0 - cs[1] * b0) * half,
                      (cs[0] * b0 - bs[0] * c0) * half,
                      delta * a3]
    alpha_parts = [delta * b for b in bs]
    alpha2_parts = [delta * c for c in cs]

    # p_i^2 = (u^2 + 4vw) + (2uv + 2w^2) alpha + (v^2 + 2uw) alpha^2
    # after reducing alpha^3 = 2, alpha^4 = 2 alpha.
    f = MultiPoly.zero(variables)
    comp_alpha = MultiPoly.zero(variables)
    comp_alpha2 = MultiPoly.zero(variables)
    for u, v, w in zip(rational_parts, alpha_parts, alpha2_parts):
        f = f + u * u + v * w * 4
        comp_alpha = comp_alpha + (u * v + w * w) * 2
        comp_alpha2 = comp_alpha2 + v * v + u * w * 2
    if comp_alpha or comp_alpha2:
        raise ArithmeticError("side conditions failed: output is not rational")

    field = NumberField([-2, 0, 0, 1], "a")
    polys = []
    for u, v, w in zip(rational_parts, alpha_parts, alpha2_parts):
        terms: dict[tuple[int, ...], list[Fraction]] = {}
        for layer, part in enumerate((u, v, w)):
            for mono, coef in part.terms.items():
                terms.setdefault(mono, [_ZERO, _ZERO, _ZERO])[layer] = coef
        polys.append(MultiPoly(variables, {
            mono: field.element(coords) for mono, coords in terms.items()}))
    return (f, *polys)
