"""Validate descent.py against the worked examples before freezing tests."""

import sys
import time
from fractions import Fraction

sys.path.insert(0, "/root/pkg/src")
sys.path.insert(0, "/root/pkg/dev")

from papersrc import F_C, F_S5, P1_C, P2_C, P1IN_C, P2IN_C, Q1_C, Q2_C
from soscert.descent import (
    DescentIncomplete, GaussianPoly, GaussianRational,
    conjugate_product, gen_three_squares, two_square_descent)
from soscert.fileio import parse_polynomial
from soscert.multipoly import MultiPoly
from soscert.numberfield import NumberField

t0 = time.time()
F = Fraction
XYZ = ("x", "y", "z")

# GaussianRational sanity
g = GaussianRational(1, 2)
assert g * g == GaussianRational(-3, 4)
assert g * g.conjugate() == GaussianRational(5, 0) == 5
assert (g / g) == 1 and bool(GaussianRational(0, 0)) is False
assert GaussianRational(2, 1) / GaussianRational(0, 1) == GaussianRational(1, -2)
print("gaussian scalar ok")

# d = 1 trivial conjugate product: alpha = -1 for m = Z + 1
x, y, z = MultiPoly.generators(XYZ)
P1, P2 = conjugate_product(x, y, [1, 1])
assert P1 == x and P2 == y

# derived example: p1 = x, p2 = y over Z^3 - 2
P1, P2 = conjugate_product(x, y, [-2, 0, 0, 1])
assert P1 == x**3 - 3 * x * y**2, str(P1)
assert P2 == 3 * x**2 * y - y**3, str(P2)
f = x * x + y * y
assert P1 * P1 + P2 * P2 == f**3
print("derived cube example ok")

# Worksheet C: inputs over Q(a), a^3 = 2
K = NumberField([-2, 0, 0, 1], "a")
p1c = parse_polynomial(P1IN_C, XYZ, field=K)
p2c = parse_polynomial(P2IN_C, XYZ, field=K)
fc = parse_polynomial(F_C, XYZ)
assert p1c * p1c + p2c * p2c == fc.map_coeffs(K.rational)
P1c, P2c = conjugate_product(p1c, p2c, K)
assert P1c == parse_polynomial(P1_C, XYZ), "P1 mismatch"
assert P2c == parse_polynomial(P2_C, XYZ), "P2 mismatch"
assert P1c * P1c + P2c * P2c == fc**3
print("worksheet C conjugate product matches printed P1, P2 exactly",
      round(time.time() - t0, 2))

# minpoly as NumberField vs raw coefficient list: identical (root-free)
P1c2, P2c2 = conjugate_product(p1c, p2c, [-2, 0, 0, 1])
assert P1c2 == P1c and P2c2 == P2c

# error paths
try:
    conjugate_product(x, y, [1, 0, 1])
    raise AssertionError("even degree accepted")
except ValueError as exc:
    assert "odd" in str(exc)
try:
    a = K.gen()
    conjugate_product(x + MultiPoly.constant(XYZ, a) * y, y, K)
    raise AssertionError("non-rational f accepted")
except ValueError as exc:
    assert "rational" in str(exc)
print("error paths ok")

# descent: d = 1 trivial
q1, q2 = two_square_descent(f, x, y, 1)
assert (q1, q2) == (x, y)

# descent: general gcd path on the cube example (f does not divide P1)
P1 = x**3 - 3 * x * y**2
P2 = 3 * x**2 * y - y**3
assert not f.divides(P1)
q1, q2 = two_square_descent(f, P1, P2, 3)
assert q1 * q1 + q2 * q2 == f
print("cube descent ->", q1, "|", q2)
assert q1 == x and q2 == y

# descent with a non-square constant remainder: f = 2(x^2 + y^2)
f2 = f * 2
g3 = GaussianPoly(P1, P2) * GaussianPoly(
    MultiPoly.constant(("x", "y", "z")[:3], F(2)),
    MultiPoly.constant(XYZ, F(2)))
assert g3.re * g3.re + g3.im * g3.im == f2**3
q1, q2 = two_square_descent(f2, g3.re, g3.im, 3)
assert q1 * q1 + q2 * q2 == f2
print("scaled descent ->", q1, "|", q2)

# descent: Worksheet C fast path
q1, q2 = two_square_descent(fc, P1c, P2c, 3)
assert q1 * q1 + q2 * q2 == fc
exp1 = parse_polynomial(Q1_C, XYZ)
exp2 = parse_polynomial(Q2_C, XYZ)
got = {str(p) for p in (q1, q2)}
allowed = {str(p) for p in (exp1, exp2, -exp1, -exp2)}
assert got <= allowed, got
print("worksheet C descent matches printed q1, q2 up to sign:", got)

# depth exhaustion carries the rational-function representation
try:
    two_square_descent(f, P1, P2, 3, depth=0)
    raise AssertionError("depth 0 should fail")
except DescentIncomplete as exc:
    assert exc.power == 1 and exc.f == f and exc.p1 == P1
print("descent-incomplete outcome ok")

# gen3: constant example
f0, g1, g2, g3p = gen_three_squares(0, 1, 0, 0, 0, 1, 0)
assert f0 == MultiPoly.constant((), F(5, 4)), str(f0)
alpha = K.gen()
assert g1 == MultiPoly.constant((), alpha - 1)
assert g2 == MultiPoly.constant((), alpha * alpha - F(1, 2))
assert not g3p
print("gen3 constant example: f =", f0)

# gen3: verify over the field on the section-5 substitutions
XYZW = ("x", "y", "z", "w")
x4, y4, z4, w4 = MultiPoly.generators(XYZW)
fs, s1, s2, s3 = gen_three_squares(
    z4 * 21, x4, x4 * 3, y4, z4, x4 + z4 * 7, w4)
KA = s1.terms[next(iter(s1.terms))].field
lift = fs.map_coeffs(KA.rational)
assert s1 * s1 + s2 * s2 + s3 * s3 == lift
fs5 = parse_polynomial(F_S5, XYZW)
print("4*f == theorem form:", fs * 4 == fs5)
print("f == theorem form:", fs == fs5)
assert fs * 4 == fs5

# gen3: delta = 0 rejected
try:
    gen_three_squares(0, 1, 1, 0, 1, 1, 0)
    raise AssertionError("delta 0 accepted")
except ValueError:
    pass

# gen3: rationality on random draws
import random

rng = random.Random(7)
for trial in range(25):
    vals = [F(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(7)]
    if vals[1] * vals[5] == vals[2] * vals[4]:
        continue
    ft, t1, t2, t3 = gen_three_squares(*vals)
    kf = None
    for p in (t1, t2, t3):
        for c in p.terms.values():
            kf = c.field
            break
        if kf:
            break
    if kf is None:
        assert not ft or ft.is_constant()
        continue
    assert t1 * t1 + t2 * t2 + t3 * t3 == ft.map_coeffs(kf.rational)
print("gen3 random rationality ok")

print("smoke6 all green", round(time.time() - t0, 2), "s")
