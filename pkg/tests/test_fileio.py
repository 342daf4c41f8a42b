"""Text formats: polynomial grammar, zero lists, certificate files."""

from fractions import Fraction as F

import pytest

from conftest import field_from
from forms import QUARTIC_MINPOLY, QUARTIC_ZEROS_FILE
from soscert.cert import certificate_from_squares
from soscert.fileio import (
    ParseError,
    names_in,
    parse_polynomial,
    parse_univariate,
    parse_zeros_file,
    read_certificate_text,
    write_certificate_text,
)
from soscert.multipoly import MultiPoly


def test_polynomial_basics():
    f = parse_polynomial("10*x^4+2*x^3*y+27*x^2*y^2-24*x*y^3+5*y^4", ("x", "y"))
    assert f.total_degree() == 4
    assert f.terms[(2, 2)] == 27
    assert f.terms[(1, 3)] == -24
    # adjacency is multiplication and ** is an alias for ^
    assert parse_polynomial("2x^2", ("x",)) == parse_polynomial("2*x**2", ("x",))
    x, y = MultiPoly.generators(("x", "y"))
    assert parse_polynomial("(x+y)^2", ("x", "y")) == x * x + 2 * x * y + y * y
    assert parse_polynomial("-x*y", ("x", "y")) == -(x * y)
    assert parse_polynomial("x - - y", ("x", "y")) == x + y


def test_rational_coefficients():
    f = parse_polynomial("x/2 + 3/4*y", ("x", "y"))
    assert f.terms[(1, 0)] == F(1, 2)
    assert f.terms[(0, 1)] == F(3, 4)
    g = parse_polynomial("(x+y)/2", ("x", "y"))
    assert g.terms[(1, 0)] == g.terms[(0, 1)] == F(1, 2)


def test_names_in_first_occurrence_order():
    assert names_in("y + x*q") == ["y", "x", "q"]
    assert names_in("z^2") == ["z"]
    assert names_in("3/4") == []


def test_parse_errors():
    with pytest.raises(ParseError):
        parse_polynomial("x/y", ("x", "y"))  # division only by constants
    with pytest.raises(ParseError):
        parse_polynomial("x $ y", ("x", "y"))
    with pytest.raises(ParseError):
        parse_polynomial("(x", ("x",))
    with pytest.raises(ParseError):
        parse_polynomial("", ("x",))
    with pytest.raises(ParseError):
        parse_polynomial("x*", ("x",))
    with pytest.raises(ParseError):
        parse_polynomial("x + z", ("x", "y"))  # z is not a declared variable


def test_field_constants():
    K = field_from((-2, 0, 0, 1))
    a = K.gen()
    f = parse_polynomial("(3+5*a^2)/(2-a)*x", ("x",), field=K)
    expected = (K.rational(3) + K.rational(5) * a * a) / (K.rational(2) - a)
    assert f.terms[(1,)] == expected
    # the generator name is a constant, not a variable
    g = parse_polynomial("a*x^2", ("x",), field=K)
    assert g.vars == ("x",)
    assert g.terms[(2,)] == a


def test_parse_univariate():
    assert parse_univariate("Z^2-2") == [F(-2), F(0), F(1)]
    assert parse_univariate("50*Z^4+28*Z^3-Z^2+23*Z-8") == [
        F(c) for c in QUARTIC_MINPOLY
    ]
    with pytest.raises(ParseError):
        parse_univariate("Z+w")


def test_zeros_file_algebraic_line():
    entries = parse_zeros_file(QUARTIC_ZEROS_FILE, ("x", "y", "z"))
    assert len(entries) == 1
    field, coords, label = entries[0]
    assert label == "gamma(1)"
    lead = F(QUARTIC_MINPOLY[-1])
    assert field.minpoly == [F(c) / lead for c in QUARTIC_MINPOLY]
    assert len(coords) == 3
    assert coords[0] == field.rational(1)
    assert coords[1] == field.gen()


def test_zeros_file_rational_lines_and_comments():
    text = "# corner points\ncoords: 1, 0, 0\n\ncoords: 0, -3, 1 ; label: edge\n"
    entries = parse_zeros_file(text, ("x", "y", "z"))
    assert len(entries) == 2
    assert entries[0][0] is None
    assert entries[0][1] == [F(1), F(0), F(0)]
    assert entries[0][2] == ''
    assert entries[1][1] == [F(0), F(-3), F(1)]
    assert entries[1][2] == "edge"


def test_zeros_file_errors():
    with pytest.raises(ParseError):
        parse_zeros_file("point: 1, 2\n", ("x", "y"))
    with pytest.raises(ParseError):
        parse_zeros_file("minpoly: Z^2-2\n", ("x", "y"))  # needs coords


def test_certificate_roundtrip_rational():
    x, y = MultiPoly.generators(("x", "y"))
    cert = certificate_from_squares([F(2), F(3, 4)], [x + y, x - y])
    text = write_certificate_text(cert)
    back = read_certificate_text(text)
    assert back.coefficients == cert.coefficients
    assert back.polynomials == cert.polynomials
    assert back.gram == cert.gram
    assert back.basis.entries == cert.basis.entries
    assert back.field is None


def test_certificate_roundtrip_field():
    K = field_from((-2, 0, 0, 1))
    a = K.gen()
    x, y = (g.map_coeffs(K.rational) for g in MultiPoly.generators(("x", "y")))
    cert = certificate_from_squares([K.rational(2)], [x + a * y], field=K)
    text = write_certificate_text(cert)
    back = read_certificate_text(text)
    assert back.field is not None
    assert back.field.minpoly == K.minpoly
    assert back.coefficients == cert.coefficients
    assert back.polynomials == cert.polynomials
    assert back.gram == cert.gram


def test_certificate_text_errors():
    with pytest.raises(ParseError):
        read_certificate_text("junk\n")
    x, _ = MultiPoly.generators(("x", "y"))
    good = write_certificate_text(certificate_from_squares([F(1)], [x]))
    assert good.startswith("certificate\n") and good.endswith("end\n")
    with pytest.raises(ParseError):
        read_certificate_text(good.replace("end\n", ""))
    with pytest.raises(ParseError):
        read_certificate_text(good.replace("vars:", "names:"))
