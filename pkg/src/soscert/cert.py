"""Exact PSD verification and sum-of-squares certificate extraction.

The decomposition step is symmetric Gaussian elimination over Q or Q(alpha)
with the PSD pivot rule: pivots are taken down the diagonal in order, a zero
pivot forces its whole remaining row to vanish, and any violation yields an
explicit witness vector w with w^T M w < 0.  Success gives M = U^T D U with
unit upper-triangular U, which is read off directly as a weighted sum of
squares against the monomial basis.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Sequence

from .gram import MonomialBasis, monomial_basis
from .linalg import charpoly
from .multipoly import MultiPoly
from .numberfield import AlgebraicNumber, NumberField

Matrix = Sequence[Sequence[Any]]


@dataclass
class LdlResult:
    """M = P . U^T D U with P the identity permutation on PSD input."""

    perm: tuple[int, ...]
    upper: list[list[Any]]
    diag: list[Any]

    def rank(self) -> int:
        return sum(1 for d in self.diag if d)


@dataclass
class NotPsd:
    """Disproof of positive semidefiniteness: witness^T M witness < 0."""

    witness: list[Any]
    pivot_index: int


@dataclass
class Certificate:
    coefficients: list[Any]
    polynomials: list[MultiPoly]
    gram: list[list[Any]]
    basis: MonomialBasis
    field: NumberField | None = None
    ldl: LdlResult | None = None

    def terms(self) -> int:
        return len(self.coefficients)


def _field_of(m: Matrix) -> NumberField | None:
    for row in m:
        for v in row:
            if isinstance(v, AlgebraicNumber):
                return v.field
    return None


def _sign_of(v: Any, field: NumberField | None = None) -> int:
    if isinstance(v, AlgebraicNumber):
        return v.sign()
    q = Fraction(v)
    return (q > 0) - (q < 0)


def round_params(t: Sequence[Any], denom_bound: int = 10 ** 6) -> list[Fraction]:
    """Componentwise best rational approximation with denominator <= bound.

    Rounding happens in parameter space, so the rounded point stays exactly
    inside the affine family it came from.
    """
    if denom_bound < 1:
        raise ValueError("denominator bound must be at least 1")
    return [Fraction(x).limit_denominator(denom_bound) for x in t]


def ldl_decompose(m: Matrix) -> LdlResult | NotPsd:
    """Exact M = U^T D U for a symmetric PSD matrix, or a NotPsd witness.

    A negative pivot, or a zero pivot whose remaining row is not identically
    zero, disproves PSD; the returned witness satisfies w^T M w < 0 exactly.
    """
    n = len(m)
    s = [list(row) for row in m]
    upper = [[Fraction(1) if i == j else Fraction(0) for j in range(n)]
             for i in range(n)]
    diag: list[Any] = [Fraction(0)] * n
    processed: list[int] = []
    for k in range(n):
        pivot = s[k][k]
        sg = _sign_of(pivot)
        if sg < 0:
            return NotPsd(_lift_witness(upper, processed, {k: Fraction(1)}, n), k)
        if sg == 0:
            bad = next((j for j in range(k + 1, n) if s[k][j]), None)
            if bad is None:
                continue
            # the 2x2 block [[0, b], [b, d]] is indefinite; pick x with
            # 2bx + d = -1 so the lifted witness value is exactly -1
            x = -(s[bad][bad] + 1) / (s[k][bad] * 2)
            return NotPsd(
                _lift_witness(upper, processed, {k: x, bad: Fraction(1)}, n), k)
        diag[k] = pivot
        for j in range(k + 1, n):
            upper[k][j] = s[k][j] / pivot
        for i in range(k + 1, n):
            if not s[i][k]:
                continue
            factor = s[i][k] / pivot
            for j in range(k + 1, n):
                s[i][j] = s[i][j] - factor * s[k][j]
        processed.append(k)
    return LdlResult(tuple(range(n)), upper, diag)


def _lift_witness(upper: list[list[Any]], processed: list[int],
                  support: dict[int, Any], n: int) -> list[Any]:
    """Back-substitute so each eliminated pivot row is orthogonal to w.

    Then w^T M w equals the Schur-complement value of the support vector.
    """
    w: list[Any] = [Fraction(0)] * n
    for idx, val in support.items():
        w[idx] = val
    for i in reversed(processed):
        acc: Any = Fraction(0)
        for j in range(i + 1, n):
            if w[j] and upper[i][j]:
                acc = acc + upper[i][j] * w[j]
        w[i] = -acc
    return w


def extract_certificate(m: Matrix, basis: MonomialBasis,
                        field: NumberField | None = None,
                        ) -> "Certificate | NotPsd":
    """Certificate terms from the LDL factors: c_i = D_ii > 0, p_i = U row i."""
    if len(m) != len(basis):
        raise ValueError("matrix size does not match the monomial basis")
    res = ldl_decompose(m)
    if isinstance(res, NotPsd):
        return res
    if field is None:
        field = _field_of(m)
    coefficients: list[Any] = []
    polynomials: list[MultiPoly] = []
    for i, d in enumerate(res.diag):
        if not d:
            continue
        coefficients.append(d)
        terms = {basis.entries[j]: res.upper[i][j]
                 for j in range(len(basis)) if res.upper[i][j]}
        polynomials.append(MultiPoly(basis.variables, terms))
    gram = [list(row) for row in m]
    return Certificate(coefficients, polynomials, gram, basis,
                       field=field, ldl=res)


def _aligned(p: MultiPoly, variables: tuple[str, ...]) -> MultiPoly | None:
    """Re-key p onto the given variable tuple; None if a used name is missing."""
    if p.vars == variables:
        return p
    pos = {v: i for i, v in enumerate(variables)}
    terms: dict[tuple[int, ...], Any] = {}
    for mono, coef in p:
        exps = [0] * len(variables)
        for name, e in zip(p.vars, mono):
            if not e:
                continue
            if name not in pos:
                return None
            exps[pos[name]] = e
        terms[tuple(exps)] = coef
    return MultiPoly(variables, terms)


def verify_certificate(cert: Certificate, f: MultiPoly) -> bool:
    """Exact check that the certificate proves f is a sum of squares.

    All coefficients must be positive (in the designated real embedding when
    algebraic), sum c_i p_i^2 must expand to f term by term, and the stored
    Gram matrix must reproduce f as v^T G v.
    """
    for c in cert.coefficients:
        if _sign_of(c) <= 0:
            return False
    target = _aligned(f, cert.basis.variables)
    if target is None:
        return False
    expansion = MultiPoly.zero(cert.basis.variables)
    for c, p in zip(cert.coefficients, cert.polynomials):
        q = _aligned(p, cert.basis.variables)
        if q is None:
            return False
        expansion = expansion + q * q * c
    if expansion != target:
        return False
    entries = cert.basis.entries
    n = len(entries)
    if len(cert.gram) != n or any(len(row) != n for row in cert.gram):
        return False
    acc: dict[tuple[int, ...], Any] = {}
    for i in range(n):
        for j in range(n):
            g = cert.gram[i][j]
            if not g:
                continue
            mono = tuple(a + b for a, b in zip(entries[i], entries[j]))
            cur = acc.get(mono)
            acc[mono] = g if cur is None else cur + g
    quad = MultiPoly(cert.basis.variables,
                     {mono: v for mono, v in acc.items() if v})
    return quad == target


def charpoly_sign_check(m: Matrix) -> bool:
    """Independent PSD confirmation from the characteristic polynomial.

    For symmetric M the eigenvalues are real, so by Descartes' rule M is PSD
    of rank s exactly when chi(x) = x^(m-s) * (x^s - a_{s-1} x^{s-1} + ...)
    with strictly alternating signs down to a positive constant term.
    """
    coeffs = charpoly(m)
    n = len(coeffs) - 1
    first = next(i for i, v in enumerate(coeffs) if v)
    s = n - first
    for k in range(s + 1):
        if _sign_of(coeffs[n - k]) != (-1) ** k:
            return False
    return True


def certificate_from_squares(coefficients: Sequence[Any],
                             polynomials: Sequence[MultiPoly],
                             basis: MonomialBasis | None = None,
                             field: NumberField | None = None) -> Certificate:
    """Package explicit squares as a Certificate, rebuilding the Gram matrix.

    The polynomials must be homogeneous of one degree when no basis is given.
    """
    if not polynomials:
        raise ValueError("need at least one square")
    if basis is None:
        degree = polynomials[0].total_degree()
        if any(not p.is_homogeneous(degree) for p in polynomials):
            raise ValueError("polynomials must share one homogeneous degree")
        basis = monomial_basis(polynomials[0].vars, degree)
    index = {mono: i for i, mono in enumerate(basis.entries)}
    n = len(basis)
    gram: list[list[Any]] = [[Fraction(0)] * n for _ in range(n)]
    for c, p in zip(coefficients, polynomials):
        q = _aligned(p, basis.variables)
        if q is None:
            raise ValueError("polynomial variables do not match the basis")
        vec: list[Any] = [Fraction(0)] * n
        for mono, coef in q:
            if mono not in index:
                raise ValueError(f"monomial {mono} outside the basis")
            vec[index[mono]] = coef
        for i in range(n):
            if not vec[i]:
                continue
            ci = c * vec[i]
            for j in range(n):
                if vec[j]:
                    gram[i][j] = gram[i][j] + ci * vec[j]
    ldl = ldl_decompose(gram)
    if isinstance(ldl, NotPsd):
        raise ValueError("squares with these coefficients are not PSD")
    return Certificate(list(coefficients), list(polynomials), gram, basis,
                       field=field, ldl=ldl)
