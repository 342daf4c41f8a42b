"""Exact linear algebra over rationals and field elements."""

import random
from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from soscert.linalg import charpoly, mat_rank, mat_vec, rref, solve_affine
from soscert.numberfield import NumberField

F = Fraction


def test_mat_rank():
    assert mat_rank([[F(1), F(2)], [F(2), F(4)]]) == 1
    assert mat_rank([[F(1), F(0)], [F(0), F(1)]]) == 2
    assert mat_rank([[F(0), F(0)], [F(0), F(0)]]) == 0
    assert mat_rank([]) == 0


def test_mat_rank_field_entries():
    K = NumberField([-2, 0, 0, 1], "a")
    a = K.gen()
    rows = [[a, K.rational(1)], [a * a, a]]  # second row = a * first
    assert mat_rank(rows) == 1
    rows2 = [[a, K.rational(1)], [K.rational(1), a]]
    assert mat_rank(rows2) == 2


def test_rref():
    rows, pivots = rref([[F(2), F(4), F(6)], [F(1), F(2), F(4)]])
    assert pivots == [0, 2]
    assert rows[0][:2] == [F(1), F(2)]
    assert rows[1][2] == F(1)


def test_solve_affine_unique():
    a = [[F(2), F(0)], [F(0), F(4)]]
    sol = solve_affine(a, [F(6), F(8)])
    assert sol is not None
    particular, nullspace = sol
    assert particular == [F(3), F(2)]
    assert nullspace == []


def test_solve_affine_underdetermined():
    a = [[F(1), F(1)]]
    sol = solve_affine(a, [F(2)])
    assert sol is not None
    particular, nullspace = sol
    assert len(nullspace) == 1
    assert sum(particular) == 2
    v = nullspace[0]
    assert v[0] + v[1] == 0 and any(v)


def test_solve_affine_inconsistent():
    a = [[F(1), F(1)], [F(2), F(2)]]
    assert solve_affine(a, [F(1), F(3)]) is None


def test_charpoly_known():
    # ascending coefficients, monic in the highest power
    assert charpoly([[F(2), F(0)], [F(0), F(3)]]) == [F(6), F(-5), F(1)]
    assert charpoly([[F(1), F(0)], [F(0), F(1)]]) == [F(1), F(-2), F(1)]
    assert charpoly([[F(0), F(1)], [F(1), F(0)]]) == [F(-1), F(0), F(1)]
    assert charpoly([[F(5)]]) == [F(-5), F(1)]


def test_charpoly_constant_term_is_signed_determinant():
    rng = random.Random(3)
    for _ in range(10):
        n = rng.randint(1, 4)
        m = [[F(rng.randint(-5, 5)) for _ in range(n)] for _ in range(n)]
        chi = charpoly(m)
        assert len(chi) == n + 1 and chi[-1] == 1
        if mat_rank(m) < n:
            assert chi[0] == 0


def test_charpoly_field_entries():
    K = NumberField([-2, 0, 1], "r", real_root_index=1)
    r = K.gen()
    chi = charpoly([[r, K.rational(1)], [K.rational(1), r]])
    # eigenvalues r - 1 and r + 1: chi = Z^2 - 2 r Z + (r^2 - 1)
    assert chi == [r * r - 1, -2 * r, K.one()]


entries = st.fractions(min_value=-5, max_value=5, max_denominator=3)


@given(st.lists(st.lists(entries, min_size=3, max_size=3), min_size=3, max_size=3),
       st.lists(entries, min_size=3, max_size=3))
def test_solve_affine_solutions_check_out(rows, x0):
    b = mat_vec(rows, x0)
    sol = solve_affine(rows, b)
    assert sol is not None
    particular, nullspace = sol
    assert mat_vec(rows, particular) == b
    for v in nullspace:
        assert mat_vec(rows, v) == [F(0)] * 3


@given(st.lists(entries, min_size=2, max_size=4),
       st.lists(entries, min_size=2, max_size=4))
def test_rank_of_outer_product(u, v):
    if len(u) != len(v):
        return
    m = [[ui * vj for vj in v] for ui in u]
    expected = 1 if any(u) and any(v) else 0
    assert mat_rank(m) == expected
