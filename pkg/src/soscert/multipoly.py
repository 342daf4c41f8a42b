"""Sparse multivariate polynomials over an exact coefficient field.

Coefficients can be anything that behaves like a field element under
+, -, *, / and truth-testing: Fraction, GaussianRational, AlgebraicNumber.
Monomials are exponent tuples keyed to a fixed variable tuple; the term
order used for leading terms and printing is graded lexicographic,
descending (total degree first, then lex on the exponent vector).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Iterable, Iterator

Monomial = tuple[int, ...]


def grlex_key(mono: Monomial) -> tuple[int, Monomial]:
    """Sort key for graded lex; sort descending to get the term order."""
    return (sum(mono), mono)


def monomials_descending(monos: Iterable[Monomial]) -> list[Monomial]:
    return sorted(monos, key=grlex_key, reverse=True)


class MultiPoly:
    """Immutable-by-convention sparse polynomial.

    terms maps exponent tuples to nonzero coefficients.  Zero coefficients
    are dropped on construction so equality is plain dict equality.
    """

    __slots__ = ("vars", "terms")

    def __init__(self, variables: tuple[str, ...], terms: dict[Monomial, Any] | None = None):
        self.vars = tuple(variables)
        clean: dict[Monomial, Any] = {}
        if terms:
            for mono, coef in terms.items():
                if len(mono) != len(self.vars):
                    raise ValueError(f"exponent tuple {mono} does not match variables {self.vars}")
                if coef:
                    clean[tuple(mono)] = coef
        self.terms = clean

    # -- construction helpers -------------------------------------------

    @classmethod
    def zero(cls, variables: tuple[str, ...]) -> "MultiPoly":
        return cls(variables, {})

    @classmethod
    def constant(cls, variables: tuple[str, ...], value: Any) -> "MultiPoly":
        value = _as_coeff(value)
        return cls(variables, {(0,) * len(variables): value})

    @classmethod
    def variable(cls, variables: tuple[str, ...], name: str) -> "MultiPoly":
        i = variables.index(name)
        mono = tuple(1 if j == i else 0 for j in range(len(variables)))
        return cls(variables, {mono: Fraction(1)})

    @classmethod
    def generators(cls, variables: Iterable[str]) -> list["MultiPoly"]:
        variables = tuple(variables)
        return [cls.variable(variables, v) for v in variables]

    # -- basic queries ---------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_constant(self) -> bool:
        return all(sum(m) == 0 for m in self.terms)

    def constant_value(self) -> Any:
        """The coefficient of the constant term (the whole value if constant)."""
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        zero_mono = (0,) * len(self.vars)
        return self.terms.get(zero_mono, Fraction(0))

    def total_degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def degree_in(self, var: str) -> int:
        if not self.terms:
            return -1
        i = self.vars.index(var)
        return max(m[i] for m in self.terms)

    def is_homogeneous(self, degree: int | None = None) -> bool:
        if not self.terms:
            return True
        degs = {sum(m) for m in self.terms}
        if len(degs) != 1:
            return False
        return degree is None or degs == {degree}

    def leading_monomial(self) -> Monomial:
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self.terms, key=grlex_key)

    def leading_coeff(self) -> Any:
        return self.terms[self.leading_monomial()]

    def sorted_terms(self) -> list[tuple[Monomial, Any]]:
        return [(m, self.terms[m]) for m in monomials_descending(self.terms)]

    def variables_present(self) -> tuple[str, ...]:
        used = [False] * len(self.vars)
        for m in self.terms:
            for i, e in enumerate(m):
                if e:
                    used[i] = True
        return tuple(v for v, u in zip(self.vars, used) if u)

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other: Any) -> "MultiPoly | None":
        if isinstance(other, MultiPoly):
            if other.vars != self.vars:
                raise ValueError(f"variable mismatch: {self.vars} vs {other.vars}")
            return other
        try:
            return MultiPoly.constant(self.vars, other)
        except TypeError:
            return None

    def __add__(self, other: Any) -> "MultiPoly":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self.terms)
        for mono, coef in other.terms.items():
            cur = terms.get(mono)
            terms[mono] = coef if cur is None else cur + coef
        return MultiPoly(self.vars, terms)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.vars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: Any) -> "MultiPoly":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Any) -> "MultiPoly":
        return (-self) + other

    def __mul__(self, other: Any) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            if other.vars != self.vars:
                raise ValueError(f"variable mismatch: {self.vars} vs {other.vars}")
            terms: dict[Monomial, Any] = {}
            for m1, c1 in self.terms.items():
                for m2, c2 in other.terms.items():
                    mono = tuple(a + b for a, b in zip(m1, m2))
                    prod = c1 * c2
                    cur = terms.get(mono)
                    terms[mono] = prod if cur is None else cur + prod
            return MultiPoly(self.vars, terms)
        coef = _as_coeff(other, allow_fail=True)
        if coef is None:
            return NotImplemented
        return MultiPoly(self.vars, {m: c * coef for m, c in self.terms.items()})

    __rmul__ = __mul__

    def __truediv__(self, other: Any) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            if not other.is_constant():
                raise ValueError("use exact_div for nonconstant divisors")
            other = other.constant_value()
        return MultiPoly(self.vars, {m: c / other for m, c in self.terms.items()})

    def __pow__(self, n: int) -> "MultiPoly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = MultiPoly.constant(self.vars, Fraction(1))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, MultiPoly):
            return self.vars == other.vars and self.terms == other.terms
        coerced = self._coerce(other)
        if coerced is None:
            return NotImplemented
        return self.terms == coerced.terms

    __hash__ = None  # mutable dict inside

    # -- division / gcd support ------------------------------------------

    def exact_div(self, divisor: "MultiPoly") -> "MultiPoly":
        """Exact polynomial division; raises ValueError when not exact."""
        if not isinstance(divisor, MultiPoly):
            return self / divisor
        if divisor.vars != self.vars:
            raise ValueError("variable mismatch")
        if not divisor:
            raise ZeroDivisionError("division by zero polynomial")
        if divisor.is_constant():
            return self / divisor.constant_value()
        quot_terms: dict[Monomial, Any] = {}
        rem = self
        dlm = divisor.leading_monomial()
        dlc = divisor.leading_coeff()
        while rem:
            rlm = rem.leading_monomial()
            if any(r < d for r, d in zip(rlm, dlm)):
                raise ValueError("division is not exact")
            mono = tuple(r - d for r, d in zip(rlm, dlm))
            coef = rem.leading_coeff() / dlc
            quot_terms[mono] = coef
            rem = rem - divisor * MultiPoly(self.vars, {mono: coef})
        return MultiPoly(self.vars, quot_terms)

    def divides(self, other: "MultiPoly") -> bool:
        try:
            other.exact_div(self)
            return True
        except (ValueError, ZeroDivisionError):
            return False

    # -- calculus / evaluation --------------------------------------------

    def derivative(self, var: str) -> "MultiPoly":
        i = self.vars.index(var)
        terms: dict[Monomial, Any] = {}
        for mono, coef in self.terms.items():
            if mono[i] == 0:
                continue
            new = list(mono)
            new[i] -= 1
            terms[tuple(new)] = coef * mono[i]
        return MultiPoly(self.vars, terms)

    def eval(self, values: dict[str, Any] | Iterable[Any]) -> Any:
        """Exact evaluation at a point; every variable must get a value.

        Values may live in a bigger field than the coefficients (evaluating
        a rational polynomial at algebraic coordinates is the typical case).
        """
        if isinstance(values, dict):
            point = [values[v] for v in self.vars]
        else:
            point = list(values)
            if len(point) != len(self.vars):
                raise ValueError("wrong number of values")
        powers: list[dict[int, Any]] = [{0: Fraction(1), 1: v} for v in point]

        def power(i: int, e: int) -> Any:
            cache = powers[i]
            if e not in cache:
                cache[e] = power(i, e - 1) * point[i]
            return cache[e]

        total: Any = Fraction(0)
        for mono, coef in self.terms.items():
            term: Any = coef
            for i, e in enumerate(mono):
                if e:
                    term = term * power(i, e)
            total = total + term
        return total

    def subs_vars(self, mapping: dict[str, "MultiPoly"]) -> "MultiPoly":
        """Substitute polynomials for variables (all in the same ring)."""
        gens = {v: MultiPoly.variable(self.vars, v) for v in self.vars}
        gens.update(mapping)
        result = MultiPoly.zero(self.vars)
        for mono, coef in self.terms.items():
            term = MultiPoly.constant(self.vars, coef)
            for i, e in enumerate(mono):
                if e:
                    term = term * gens[self.vars[i]] ** e
            result = result + term
        return result

    def map_coeffs(self, fn) -> "MultiPoly":
        return MultiPoly(self.vars, {m: fn(c) for m, c in self.terms.items()})

    # -- univariate views ---------------------------------------------------

    def coeffs_in(self, var: str) -> list["MultiPoly"]:
        """Dense coefficient list in var (index = power), entries free of var."""
        i = self.vars.index(var)
        deg = self.degree_in(var)
        if deg < 0:
            return []
        buckets: list[dict[Monomial, Any]] = [dict() for _ in range(deg + 1)]
        for mono, coef in self.terms.items():
            stripped = list(mono)
            e = stripped[i]
            stripped[i] = 0
            buckets[e][tuple(stripped)] = coef
        return [MultiPoly(self.vars, b) for b in buckets]

    @classmethod
    def from_coeffs_in(cls, coeffs: list["MultiPoly"], var: str,
                       variables: tuple[str, ...]) -> "MultiPoly":
        i = variables.index(var)
        terms: dict[Monomial, Any] = {}
        for e, c in enumerate(coeffs):
            for mono, coef in c.terms.items():
                new = list(mono)
                new[i] += e
                terms[tuple(new)] = coef
        return cls(variables, terms)

    # -- printing -----------------------------------------------------------

    def __repr__(self) -> str:
        return f"MultiPoly({self.vars!r}, {format_terms(self)})"

    def __str__(self) -> str:
        return format_terms(self)

    def __iter__(self) -> Iterator[tuple[Monomial, Any]]:
        return iter(self.sorted_terms())


def _as_coeff(value: Any, allow_fail: bool = False) -> Any:
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, (Fraction,)) or hasattr(value, "coords") or hasattr(value, "re"):
        return value
    if allow_fail:
        return None
    raise TypeError(f"cannot use {type(value).__name__} as a coefficient")


def format_coeff(coef: Any) -> str:
    s = str(coef)
    if isinstance(coef, Fraction):
        return s
    if any(op in s[1:] for op in "+-") or " " in s:
        return f"({s})"
    return s


def format_terms(poly: MultiPoly) -> str:
    if not poly.terms:
        return "0"
    pieces: list[str] = []
    for mono, coef in poly.sorted_terms():
        factors = []
        for v, e in zip(poly.vars, mono):
            if e == 1:
                factors.append(v)
            elif e > 1:
                factors.append(f"{v}^{e}")
        body = "*".join(factors)
        cs = format_coeff(coef)
        if body:
            if cs == "1":
                text = body
            elif cs == "-1":
                text = f"-{body}"
            else:
                text = f"{cs}*{body}"
        else:
            text = cs
        if pieces and not text.startswith("-"):
            pieces.append(f"+ {text}")
        elif pieces:
            pieces.append(f"- {text[1:]}")
        else:
            pieces.append(text)
    return " ".join(pieces)


# -- gcd and resultants -----------------------------------------------------


def _content(coeffs: list[MultiPoly]) -> MultiPoly:
    """gcd of a coefficient list; the unit polynomial if all are constants."""
    nonzero = [c for c in coeffs if c]
    if not nonzero:
        raise ValueError("content of zero")
    g = nonzero[0]
    for c in nonzero[1:]:
        g = mv_gcd(g, c)
        if g.is_constant():
            break
    if g.is_constant():
        return MultiPoly.constant(g.vars, Fraction(1))
    return g


def _primitive(coeffs: list[MultiPoly]) -> tuple[MultiPoly, list[MultiPoly]]:
    cont = _content(coeffs)
    if cont.is_constant():
        return cont, coeffs
    return cont, [c.exact_div(cont) if c else c for c in coeffs]


def _pseudo_rem(a: list[MultiPoly], b: list[MultiPoly]) -> list[MultiPoly]:
    """Pseudo-remainder of dense coefficient lists, deg(a) >= deg(b) >= 0."""
    a = list(a)
    lb = b[-1]
    while len(a) >= len(b):
        shift = len(a) - len(b)
        la = a[-1]
        a = [c * lb for c in a]
        for j, bc in enumerate(b):
            a[shift + j] = a[shift + j] - la * bc
        while a and not a[-1]:
            a.pop()
        if not a:
            break
    return a


def _monic(p: MultiPoly) -> MultiPoly:
    return p / p.leading_coeff()


def mv_gcd(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    """gcd with leading coefficient normalized to 1.

    Primitive pseudo-remainder sequences on the first variable present;
    content recursion handles the rest.  Coefficients only need field ops.
    """
    if not p and not q:
        raise ValueError("gcd(0, 0) is undefined")
    if not p:
        return _monic(q)
    if not q:
        return _monic(p)
    if p.is_constant() or q.is_constant():
        return MultiPoly.constant(p.vars, Fraction(1))
    main = None
    for v in p.vars:
        if p.degree_in(v) > 0 or q.degree_in(v) > 0:
            main = v
            break
    assert main is not None
    a = p.coeffs_in(main)
    b = q.coeffs_in(main)
    if len(a) < len(b):
        a, b = b, a
    cont_a, a = _primitive(a)
    cont_b, b = _primitive(b)
    cont = mv_gcd(cont_a, cont_b) if not (cont_a.is_constant() and cont_b.is_constant()) \
        else MultiPoly.constant(p.vars, Fraction(1))
    while True:
        r = _pseudo_rem(a, b)
        if not r:
            break
        if len(r) == 1:
            return _monic(cont)
        _, b2 = _primitive(r)
        a, b = b, b2
    _, b = _primitive(b)
    g = MultiPoly.from_coeffs_in([c * cont for c in b], main, p.vars)
    return _monic(g)


def resultant_in(p: MultiPoly, q: MultiPoly, var: str) -> MultiPoly:
    """Resultant with respect to var via the Sylvester matrix.

    Fraction-free Bareiss elimination keeps every division exact, so the
    entries stay polynomials throughout.  Raises on two var-free inputs.
    """
    dp = p.degree_in(var)
    dq = q.degree_in(var)
    if dp <= 0 and dq <= 0:
        raise ValueError(f"neither input involves {var}")
    if dp < 0 or dq < 0:
        raise ValueError("resultant with the zero polynomial")
    if dp == 0:
        return p ** dq
    if dq == 0:
        return q ** dp
    a = p.coeffs_in(var)
    b = q.coeffs_in(var)
    n = dp + dq
    zero = MultiPoly.zero(p.vars)
    rows: list[list[MultiPoly]] = []
    for i in range(dq):
        row = [zero] * n
        for j, c in enumerate(reversed(a)):
            row[i + j] = c
        rows.append(row)
    for i in range(dp):
        row = [zero] * n
        for j, c in enumerate(reversed(b)):
            row[i + j] = c
        rows.append(row)
    sign = 1
    prev = MultiPoly.constant(p.vars, Fraction(1))
    for k in range(n - 1):
        if not rows[k][k]:
            pivot_row = next((i for i in range(k + 1, n) if rows[i][k]), None)
            if pivot_row is None:
                return zero
            rows[k], rows[pivot_row] = rows[pivot_row], rows[k]
            sign = -sign
        pivot = rows[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = pivot * rows[i][j] - rows[i][k] * rows[k][j]
                rows[i][j] = num.exact_div(prev) if num else zero
            rows[i][k] = zero
        prev = pivot
    det = rows[n - 1][n - 1]
    return det if sign == 1 else -det
