"""Gaussian rational scalar field."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from soscert.gaussian import GaussianRational

F = Fraction

rationals = st.fractions(min_value=-9, max_value=9, max_denominator=7)
gaussians = st.builds(GaussianRational, rationals, rationals)


def test_basics():
    g = GaussianRational(1, 2)
    assert g * g == GaussianRational(-3, 4)
    assert g * g.conjugate() == GaussianRational(5, 0) == 5
    assert g.norm() == 5
    i = GaussianRational.i()
    assert i * i == -1
    assert g + 1 == GaussianRational(2, 2)
    assert 1 - g == GaussianRational(0, -2)
    assert not GaussianRational(0, 0)


def test_division():
    g = GaussianRational(1, 2)
    assert g / g == 1
    assert GaussianRational(2, 1) / GaussianRational(0, 1) == GaussianRational(1, -2)
    assert 2 / GaussianRational(1, 1) == GaussianRational(1, -1)
    with pytest.raises(ZeroDivisionError):
        g / GaussianRational(0, 0)


def test_rationality():
    assert GaussianRational(7, 0).is_rational()
    assert GaussianRational(7, 0).rational_value() == 7
    assert not GaussianRational(0, 1).is_rational()
    with pytest.raises(ValueError):
        GaussianRational(0, 1).rational_value()


def test_equality_and_hash():
    assert GaussianRational(2, 0) == 2 == GaussianRational(2, 0)
    assert GaussianRational(F(1, 2), 0) == F(1, 2)
    assert GaussianRational(1, 1) != 1
    d = {GaussianRational(1, 2): "a"}
    assert d[GaussianRational(1, 2)] == "a"


def test_str():
    assert str(GaussianRational(0, 1)) == "I"
    assert "I" in str(GaussianRational(1, -2))


@given(gaussians, gaussians, gaussians)
def test_field_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)


@given(gaussians, gaussians)
def test_norm_multiplicative(a, b):
    assert (a * b).norm() == a.norm() * b.norm()
    assert (a * b).conjugate() == a.conjugate() * b.conjugate()


@given(gaussians.filter(bool))
def test_multiplicative_inverse(a):
    assert a / a == 1
    assert (1 / a) * a == 1
