"""Gram pencil construction and the quadratic-form identity."""

from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from forms import BINARY_QUARTIC, QUARTIC
from soscert.fileio import parse_polynomial
from soscert.gram import (
    MonomialBasis,
    build_pencil,
    dump_pencil,
    expand_quadratic,
    generic_rank,
    monomial_basis,
    pencil_eval,
)
from soscert.multipoly import MultiPoly


def test_monomial_basis():
    b = monomial_basis(("x", "y"), 2)
    assert b.entries == ((2, 0), (1, 1), (0, 2))
    assert len(b) == 3
    assert b.variables == ("x", "y")
    b3 = monomial_basis(("x", "y", "z"), 2)
    assert b3.entries == (
        (2, 0, 0), (1, 1, 0), (1, 0, 1), (0, 2, 0), (0, 1, 1), (0, 0, 2))
    assert len(monomial_basis(("x",), 0)) == 1
    with pytest.raises(ValueError):
        monomial_basis((), 2)
    with pytest.raises(ValueError):
        monomial_basis(("x",), -1)


def test_vector_at():
    b = monomial_basis(("x", "y"), 2)
    assert b.vector_at((F(2), F(3))) == [F(4), F(6), F(9)]
    assert str(b.monomial_poly(1)) == "x*y"


def test_binary_quartic_pencil():
    f = parse_polynomial(BINARY_QUARTIC, ("x", "y"))
    p = build_pencil(f)
    assert p.size == 3 and p.dim == 1
    assert p.eval([F(0)]) == [
        [F(10), F(1), F(0)],
        [F(1), F(27), F(-12)],
        [F(0), F(-12), F(5)],
    ]
    assert p.eval([F(5)]) == [
        [F(10), F(1), F(5)],
        [F(1), F(17), F(-12)],
        [F(5), F(-12), F(5)],
    ]
    assert generic_rank(p) == 3
    assert expand_quadratic(p, p.eval([F(7)])) == f
    assert pencil_eval(p, [F(7)]) == p.eval([F(7)])
    with pytest.raises(ValueError):
        p.eval([F(1), F(2)])


def test_affine_entries():
    # the parameter rides on the off-diagonal pair; the designated
    # diagonal entry compensates with slope -2
    f = parse_polynomial(BINARY_QUARTIC, ("x", "y"))
    p = build_pencil(f)
    assert p.entry_const(0, 0) == 10 and p.entry_coeffs(0, 0) == [F(0)]
    assert p.entry_const(0, 2) == 0 and p.entry_coeffs(0, 2) == [F(1)]
    assert p.entry_const(1, 1) == 27 and p.entry_coeffs(1, 1) == [F(-2)]
    assert p.entry_const(2, 2) == 5 and p.entry_coeffs(2, 2) == [F(0)]
    assert p.is_rational()


def test_ternary_quartic_pencil():
    f = parse_polynomial(QUARTIC, ("x", "y", "z"))
    p = build_pencil(f)
    assert p.size == 6 and p.dim == 6
    assert p.basis.entries == (
        (2, 0, 0), (1, 1, 0), (1, 0, 1), (0, 2, 0), (0, 1, 1), (0, 0, 2))
    assert generic_rank(p) == 6
    t = [F(k, 3) for k in range(1, 7)]
    w = p.eval(t)
    assert all(w[i][j] == w[j][i] for i in range(6) for j in range(6))
    assert expand_quadratic(p, w) == f


def test_rejects_non_forms():
    with pytest.raises(ValueError):
        build_pencil(parse_polynomial("x^2+y", ("x", "y")))
    with pytest.raises(ValueError):
        build_pencil(parse_polynomial("x^3+y^3", ("x", "y")))
    with pytest.raises(ValueError):
        build_pencil(MultiPoly.zero(("x",)))
    f = parse_polynomial(BINARY_QUARTIC, ("x", "y"))
    with pytest.raises(ValueError):
        build_pencil(f, basis=monomial_basis(("x", "z"), 2))
    with pytest.raises(ValueError):
        # x^4 is not a product of two entries of this basis
        build_pencil(f, basis=MonomialBasis(("x", "y"), ((1, 1), (0, 2))))


def test_dump_pencil(tmp_path):
    f = parse_polynomial(BINARY_QUARTIC, ("x", "y"))
    p = build_pencil(f)
    out = tmp_path / "pencil.txt"
    with open(out, "w") as fh:
        dump_pencil(p, fh)
    lines = out.read_text().splitlines()
    assert lines[0] == "size: 3" and lines[1] == "params: 1"
    assert lines[2] == "constant:" and lines[3] == "10,1,0"
    assert lines[6] == "direction 1:"


coeffs = st.fractions(min_value=-9, max_value=9, max_denominator=6)
quartic_monos = st.sampled_from([(4, 0), (3, 1), (2, 2), (1, 3), (0, 4)])


@settings(max_examples=60)
@given(st.dictionaries(quartic_monos, coeffs, min_size=1, max_size=5),
       st.lists(coeffs, min_size=8, max_size=8))
def test_pencil_members_expand_to_the_form(terms, params):
    f = MultiPoly(("x", "y"), terms)
    if not f:
        return
    p = build_pencil(f)
    assert expand_quadratic(p, p.eval(params[:p.dim])) == f
