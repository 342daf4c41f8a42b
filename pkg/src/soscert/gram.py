"""Gram pencils: the affine family of symmetric matrices representing a form.

For a form f of degree 2d over variables x, the pencil is the set
{Q symmetric : v(x)^t Q v(x) = f} over the monomial basis v of degree d.
It is stored as a constant matrix plus one symmetric direction matrix per
free parameter.  The parametrization is deterministic: for each degree-2d
monomial, the unknown at the diagonal position (if the monomial is a
square) or at the first upper-triangular position in row-major order is
expressed in terms of the remaining positions, which stay free.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterable, Sequence, TextIO

from .linalg import mat_rank
from .multipoly import Monomial, MultiPoly, monomials_descending
from .numberfield import NumberField


@dataclass(frozen=True)
class MonomialBasis:
    variables: tuple[str, ...]
    entries: tuple[Monomial, ...]

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def monomial_poly(self, i: int) -> MultiPoly:
        return MultiPoly(self.variables, {self.entries[i]: Fraction(1)})

    def vector_at(self, point: Sequence[Any]) -> list[Any]:
        """v(point): each basis monomial evaluated exactly at the point."""
        return [MultiPoly(self.variables, {mono: Fraction(1)}).eval(point)
                for mono in self.entries]


def _exponents(nvars: int, degree: int) -> list[Monomial]:
    if nvars == 1:
        return [(degree,)]
    out = []
    for first in range(degree, -1, -1):
        out.extend((first,) + rest for rest in _exponents(nvars - 1, degree - first))
    return out


def monomial_basis(variables: int | tuple[str, ...], d: int) -> MonomialBasis:
    """All degree-d monomials in the given variables, in the global order."""
    if isinstance(variables, int):
        variables = tuple(f"x{i + 1}" for i in range(variables))
    if len(variables) < 1:
        raise ValueError("need at least one variable")
    if d < 0:
        raise ValueError("degree must be non-negative")
    entries = tuple(monomials_descending(_exponents(len(variables), d)))
    return MonomialBasis(tuple(variables), entries)


class GramPencil:
    """constant + sum t_l * directions[l]; all matrices symmetric."""

    def __init__(self, basis: MonomialBasis, constant: list[list[Any]],
                 directions: list[list[list[Any]]], field: NumberField | None = None):
        self.basis = basis
        self.constant = constant
        self.directions = directions
        self.field = field

    @property
    def size(self) -> int:
        return len(self.basis)

    @property
    def dim(self) -> int:
        return len(self.directions)

    def eval(self, t: Sequence[Any]) -> list[list[Any]]:
        if len(t) != self.dim:
            raise ValueError(f"expected {self.dim} parameter values, got {len(t)}")
        m = [row[:] for row in self.constant]
        for tv, d in zip(t, self.directions):
            if not tv:
                continue
            for i in range(self.size):
                for j in range(self.size):
                    if d[i][j]:
                        m[i][j] = m[i][j] + tv * d[i][j]
        return m

    def entry_const(self, i: int, j: int) -> Any:
        return self.constant[i][j]

    def entry_coeffs(self, i: int, j: int) -> list[Any]:
        return [d[i][j] for d in self.directions]

    def is_rational(self) -> bool:
        return self.field is None

    def __repr__(self) -> str:
        tag = "Q" if self.field is None else f"Q({self.field.name})"
        return f"GramPencil(size={self.size}, dim={self.dim}, field={tag})"


def pencil_eval(p: GramPencil, t: Sequence[Any]) -> list[list[Any]]:
    return p.eval(t)


def build_pencil(f: MultiPoly, basis: MonomialBasis | None = None) -> GramPencil:
    """The full Gram pencil of a homogeneous form of even degree.

    With a user basis, every monomial of f must be a sum of two basis
    exponents (checked); the default basis is all monomials of degree d.
    """
    if not f:
        raise ValueError("zero polynomial has no Gram pencil")
    deg = f.total_degree()
    if deg % 2 != 0 or not f.is_homogeneous():
        raise ValueError("form must be homogeneous of even degree")
    if basis is None:
        basis = monomial_basis(f.vars, deg // 2)
    elif basis.variables != f.vars:
        raise ValueError("basis variables do not match the form")
    m = len(basis)
    pairs_by_product: dict[Monomial, list[tuple[int, int]]] = {}
    for i in range(m):
        for j in range(i, m):
            prod = tuple(a + b for a, b in zip(basis.entries[i], basis.entries[j]))
            pairs_by_product.setdefault(prod, []).append((i, j))
    missing = [mono for mono in f.terms if mono not in pairs_by_product]
    if missing:
        raise ValueError(f"basis cannot represent monomials {missing}")

    # free parameters: every pair except the designated one per product
    designated: dict[Monomial, tuple[int, int]] = {}
    param_of_pair: dict[tuple[int, int], int] = {}
    for i in range(m):
        for j in range(i, m):
            prod = tuple(a + b for a, b in zip(basis.entries[i], basis.entries[j]))
            pairs = pairs_by_product[prod]
            if prod not in designated:
                diag = next((p for p in pairs if p[0] == p[1]), None)
                designated[prod] = diag if diag is not None else pairs[0]
            if (i, j) != designated[prod]:
                param_of_pair[(i, j)] = len(param_of_pair)

    zero = Fraction(0)
    constant = [[zero] * m for _ in range(m)]
    directions = [[[zero] * m for _ in range(m)] for _ in param_of_pair]

    def set_sym(mat: list[list[Any]], i: int, j: int, v: Any) -> None:
        mat[i][j] = v
        mat[j][i] = v

    for prod, pairs in pairs_by_product.items():
        coeff = f.terms.get(prod, zero)
        di, dj = designated[prod]
        if di == dj:
            set_sym(constant, di, dj, coeff)
            slope = Fraction(-2)
        else:
            set_sym(constant, di, dj, coeff / 2)
            slope = Fraction(-1)
        for pair in pairs:
            if pair == (di, dj):
                continue
            l = param_of_pair[pair]
            set_sym(directions[l], pair[0], pair[1], Fraction(1))
            set_sym(directions[l], di, dj, slope)
    return GramPencil(basis, constant, directions)


def generic_rank(p: GramPencil, draws: int = 3, bound: int = 10 ** 4,
                 rng: random.Random | None = None) -> int:
    """Max exact rank over random integer specializations of the parameters."""
    if p.dim == 0:
        return mat_rank(p.constant)
    if rng is None:
        rng = random.Random(1789)
    best = 0
    for _ in range(draws):
        t = [Fraction(rng.randint(-bound, bound)) for _ in range(p.dim)]
        best = max(best, mat_rank(p.eval(t)))
        if best == p.size:
            break
    return best


def expand_quadratic(p: GramPencil, matrix: list[list[Any]]) -> MultiPoly:
    """v^t M v as a polynomial; the defining identity check of the pencil."""
    basis = p.basis
    out = MultiPoly.zero(basis.variables)
    m = len(basis)
    for i in range(m):
        for j in range(i, m):
            c = matrix[i][j] if i == j else 2 * matrix[i][j]
            if not c:
                continue
            prod = tuple(a + b for a, b in zip(basis.entries[i], basis.entries[j]))
            out = out + MultiPoly(basis.variables, {prod: c})
    return out


def dump_pencil(p: GramPencil, fh: TextIO) -> None:
    """size/params header, then constant and direction matrices as CSV."""
    if p.field is not None:
        raise ValueError("dump format covers rational pencils only")
    fh.write(f"size: {p.size}\n")
    fh.write(f"params: {p.dim}\n")
    fh.write("constant:\n")
    _write_csv(p.constant, fh)
    for l, d in enumerate(p.directions):
        fh.write(f"direction {l + 1}:\n")
        _write_csv(d, fh)


def _write_csv(matrix: Iterable[Iterable[Any]], fh: TextIO) -> None:
    for row in matrix:
        fh.write(",".join(str(v) for v in row) + "\n")
