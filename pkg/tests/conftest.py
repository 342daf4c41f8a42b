"""Shared fixtures: the regression forms with their zero data, prepared once.

The octic pipeline run dominates the suite's runtime (the generic-rank
computations over the quintic field), so it is session-scoped and every
test that needs it shares one run.
"""

from fractions import Fraction
from types import SimpleNamespace

import pytest
from hypothesis import settings

import forms
from soscert.cert import verify_certificate
from soscert.facial import ZeroPoint
from soscert.fileio import parse_polynomial
from soscert.numberfield import NumberField
from soscert.pipeline import decompose

settings.register_profile("suite", deadline=None)
settings.load_profile("suite")

F = Fraction


def field_from(minpoly: tuple[int, ...], name: str = "a") -> NumberField:
    """Monic field from an ascending integer coefficient tuple."""
    lead = minpoly[-1]
    return NumberField([F(c, lead) for c in minpoly[:-1]] + [F(1)], name)


def record_certificate(log: list, cert, f) -> None:
    """Verify at the point of production, then remember for the final tally."""
    assert verify_certificate(cert, f)
    log.append((cert, f))


@pytest.fixture(scope="session")
def cert_log():
    return []


@pytest.fixture(scope="session")
def quartic():
    f = parse_polynomial(forms.QUARTIC, ("x", "y", "z"))
    K = field_from(forms.QUARTIC_MINPOLY)
    a = K.gen()
    zero = ZeroPoint.create(f, (K.rational(1), a, (3 + 5 * a * a) / (2 - a)),
                            field=K, label="gamma(1)")
    return SimpleNamespace(f=f, field=K, zero=zero)


@pytest.fixture(scope="session")
def octic():
    f = parse_polynomial(forms.OCTIC, ("x", "y", "z"))
    K = field_from(forms.OCTIC_MINPOLY)
    a = K.gen()
    y3 = (648 * a**4 - 327 * a**3 + 152 * a**2 - 777 * a - 36) / 60
    zeros = (ZeroPoint.create(f, (F(0), F(1), F(0)), label="s1"),
             ZeroPoint.create(f, (F(0), F(-3), F(1)), label="s2"),
             ZeroPoint.create(f, (K.rational(1), y3, a), field=K, label="s3"))
    return SimpleNamespace(f=f, field=K, zeros=zeros)


@pytest.fixture(scope="session")
def octic_report(octic):
    return decompose(octic.f, octic.zeros, force_rational=True)


@pytest.fixture(scope="session")
def motzkin():
    f = parse_polynomial(forms.MOTZKIN, ("x", "y", "z"))
    zeros = tuple(ZeroPoint.create(f, tuple(map(F, c)), label=str(c))
                  for c in forms.MOTZKIN_ZEROS)
    return SimpleNamespace(f=f, zeros=zeros)


@pytest.fixture(scope="session")
def nonsos():
    f = parse_polynomial(forms.NONSOS_QUARTIC, ("x", "y", "z"))
    K = field_from(forms.NONSOS_MINPOLY, "b")
    b = K.gen()
    zero = ZeroPoint.create(f, ((b**5 + b**2 - 4 * b) / 2, b, K.rational(1)),
                            field=K)
    return SimpleNamespace(f=f, field=K, zero=zero)
