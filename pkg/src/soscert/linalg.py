"""Exact linear algebra over field-like coefficients.

Works for Fraction, GaussianRational and AlgebraicNumber entries alike:
anything with +, -, *, / and truth-testing.  Matrices are lists of lists;
nothing here mutates its inputs.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Sequence

Matrix = Sequence[Sequence[Any]]


def _zero_like(x: Any) -> Any:
    return x * 0


def mat_rank(rows: Matrix) -> int:
    """Rank by exact elimination.

    Bareiss keeps integer-valued entries small over Q; over number-field
    entries plain Gauss with normalized pivot rows grows far less, so we
    pick per matrix.
    """
    m = [list(r) for r in rows]
    if not m or not m[0]:
        return 0
    if any(not isinstance(v, (int, Fraction)) for row in m for v in row):
        return _rank_gauss(m)
    nrows, ncols = len(m), len(m[0])
    rank = 0
    prev: Any = Fraction(1)
    row = 0
    for col in range(ncols):
        pivot_row = next((i for i in range(row, nrows) if m[i][col]), None)
        if pivot_row is None:
            continue
        m[row], m[pivot_row] = m[pivot_row], m[row]
        pivot = m[row][col]
        for i in range(row + 1, nrows):
            for j in range(col + 1, ncols):
                m[i][j] = (pivot * m[i][j] - m[i][col] * m[row][j]) / prev
            m[i][col] = _zero_like(pivot)
        prev = pivot
        rank += 1
        row += 1
        if row == nrows:
            break
    return rank


def _rank_gauss(m: list[list[Any]]) -> int:
    nrows, ncols = len(m), len(m[0])
    rank = 0
    for col in range(ncols):
        pivot_row = next((i for i in range(rank, nrows) if m[i][col]), None)
        if pivot_row is None:
            continue
        m[rank], m[pivot_row] = m[pivot_row], m[rank]
        inv = m[rank][col]
        m[rank] = [v / inv for v in m[rank]]
        for i in range(rank + 1, nrows):
            if m[i][col]:
                factor = m[i][col]
                m[i] = [a - factor * b for a, b in zip(m[i], m[rank])]
        rank += 1
        if rank == nrows:
            break
    return rank


def rref(rows: Matrix) -> tuple[list[list[Any]], list[int]]:
    """Reduced row echelon form and pivot column indices."""
    m = [list(r) for r in rows]
    if not m:
        return m, []
    nrows, ncols = len(m), len(m[0])
    pivots: list[int] = []
    row = 0
    for col in range(ncols):
        pivot_row = next((i for i in range(row, nrows) if m[i][col]), None)
        if pivot_row is None:
            continue
        m[row], m[pivot_row] = m[pivot_row], m[row]
        inv = m[row][col]
        m[row] = [v / inv for v in m[row]]
        for i in range(nrows):
            if i != row and m[i][col]:
                factor = m[i][col]
                m[i] = [a - factor * b for a, b in zip(m[i], m[row])]
        pivots.append(col)
        row += 1
        if row == nrows:
            break
    return m, pivots


def solve_affine(a: Matrix, b: Sequence[Any]) -> tuple[list[Any], list[list[Any]]] | None:
    """General solution of A·t = b as (particular, nullspace basis).

    Returns None when the system is inconsistent.  With no unknowns the
    particular solution is the empty vector (valid iff b = 0).
    """
    nrows = len(a)
    ncols = len(a[0]) if nrows else 0
    if ncols == 0:
        if any(v for v in b):
            return None
        return [], []
    aug = [list(r) + [rhs] for r, rhs in zip(a, b)]
    red, pivots = rref(aug)
    if ncols in pivots:
        return None
    zero = _zero_like(red[0][0]) if red else Fraction(0)
    particular = [zero] * ncols
    for r, col in enumerate(pivots):
        particular[col] = red[r][ncols]
    basis: list[list[Any]] = []
    free = [c for c in range(ncols) if c not in pivots]
    one = Fraction(1)
    for fc in free:
        vec = [zero] * ncols
        vec[fc] = one
        for r, col in enumerate(pivots):
            vec[col] = -red[r][fc]
        basis.append(vec)
    return particular, basis


def mat_vec(m: Matrix, v: Sequence[Any]) -> list[Any]:
    return [sum((a * b for a, b in zip(row, v) if a and b), Fraction(0)) for row in m]


def _dot(u: Sequence[Any], v: Sequence[Any]) -> Any:
    return sum((a * b for a, b in zip(u, v) if a and b), Fraction(0))


def charpoly(m: Matrix) -> list[Any]:
    """Characteristic polynomial det(xI - M), ascending coefficients.

    Berkowitz recursion: division-free, so it is exact over Q and over
    number-field entries alike.  c[n] = 1 for an n x n input.
    """
    n = len(m)
    one = Fraction(1)
    coeffs: list[Any] = [one]
    for k in range(1, n + 1):
        a = m[k - 1][k - 1]
        row = m[k - 1][:k - 1]
        t: list[Any] = [one, -a]
        vec: Sequence[Any] = [m[i][k - 1] for i in range(k - 1)]
        for step in range(k - 1):
            t.append(-_dot(row, vec))
            if step < k - 2:
                vec = [_dot(m[i][:k - 1], vec) for i in range(k - 1)]
        out: list[Any] = [Fraction(0)] * (k + 1)
        for i, ti in enumerate(t):
            if not ti:
                continue
            for j, cj in enumerate(coeffs):
                if i + j <= k and cj:
                    out[i + j] = out[i + j] + ti * cj
        coeffs = out
    coeffs.reverse()
    return coeffs
