"""Number field elements in power-basis coordinates."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from soscert.numberfield import AlgebraicNumber, NumberField

F = Fraction


@pytest.fixture(scope="module")
def cubic():
    return NumberField([-2, 0, 0, 1], "a")


def test_construction_normalizes_to_monic():
    K = NumberField([-4, 0, 2], "r")
    assert K.minpoly == [F(-2), F(0), F(1)]
    assert K.degree == 2
    with pytest.raises(ValueError):
        NumberField([5])


def test_irreducibility_screen():
    with pytest.raises(ValueError):
        NumberField([-1, 0, 1], check_irreducible=True)  # rational roots
    with pytest.raises(ValueError):
        NumberField([0, 0, 1], check_irreducible=True)  # not squarefree
    NumberField([-2, 0, 1], check_irreducible=True)


def test_generator_satisfies_minpoly(cubic):
    a = cubic.gen()
    assert a**3 == cubic.rational(2)
    assert a * a * a - 2 == cubic.zero()


def test_arithmetic(cubic):
    a = cubic.gen()
    e = (1 + a) * (1 - a)
    assert e == 1 - a**2
    assert e - 1 == -(a**2)
    assert (a + 2) - (a + 1) == cubic.one()
    assert 2 * a == a + a


def test_inverse_and_division(cubic):
    a = cubic.gen()
    v = 1 + a
    assert v.inverse() * v == cubic.one()
    assert (3 + 5 * a * a) / (2 - a) * (2 - a) == 3 + 5 * a * a
    with pytest.raises(ZeroDivisionError):
        cubic.zero().inverse()


def test_rationality(cubic):
    assert cubic.rational(F(7, 3)).is_rational()
    assert cubic.rational(F(7, 3)).rational_value() == F(7, 3)
    assert not cubic.gen().is_rational()
    with pytest.raises(ValueError):
        cubic.gen().rational_value()


def test_trace(cubic):
    # over Z^3 - 2 the generator and its square have trace zero
    assert cubic.trace(cubic.rational(1)) == 3
    assert cubic.trace(cubic.gen()) == 0
    assert cubic.trace(cubic.gen() ** 2) == 0
    K4 = NumberField([F(c, 50) for c in (-8, 23, -1, 28)] + [F(1)], "a")
    assert K4.trace(K4.gen()) == F(-14, 25)
    assert K4.trace(K4.rational(F(1, 2))) == 2
    # trace is linear
    a = K4.gen()
    assert K4.trace(a * a + 3 * a) == K4.trace(a * a) + 3 * K4.trace(a)


def test_real_roots_and_sign():
    K = NumberField([-2, 0, 1], "r", real_root_index=1)
    assert K.n_real_roots() == 2
    r = K.gen()
    assert K.sign(r) == 1
    assert abs(K.approx(r) - 2 ** 0.5) < 1e-9
    Kn = NumberField([-2, 0, 1], "r", real_root_index=0)
    assert Kn.sign(Kn.gen()) == -1
    assert Kn.sign(Kn.gen() ** 2) == 1
    assert Kn.sign(Kn.zero()) == 0
    with pytest.raises(ValueError):
        NumberField([-2, 0, 1], real_root_index=5)


def test_sign_with_explicit_root_index(cubic):
    assert cubic.n_real_roots() == 1
    a = cubic.gen()
    assert cubic.sign(a - 1, root_index=0) == 1   # cbrt(2) > 1
    assert cubic.sign(a - 2, root_index=0) == -1


def test_field_mixing_raises(cubic):
    other = NumberField([-3, 0, 0, 1], "b")
    with pytest.raises(ValueError):
        cubic.gen() + other.gen()


def test_element_reduction(cubic):
    # coordinates past the degree reduce through the minimal polynomial
    e = cubic.element([0, 0, 0, 1])
    assert e == cubic.rational(2)


coords = st.tuples(*[st.fractions(min_value=-6, max_value=6, max_denominator=4)
                     for _ in range(3)])


@given(coords.filter(lambda c: any(c)))
def test_inverse_roundtrip(c):
    K = NumberField([-2, 0, 0, 1], "a")
    v = K.element(list(c))
    assert v.inverse() * v == K.one()


@given(coords, coords)
def test_trace_linearity(c1, c2):
    K = NumberField([-2, 0, 0, 1], "a")
    u, v = K.element(list(c1)), K.element(list(c2))
    assert K.trace(u + v) == K.trace(u) + K.trace(v)
