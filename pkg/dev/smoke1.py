"""Dev scratch: smoke-test exact arithmetic layers."""
from fractions import Fraction

from soscert import (AlgebraicNumber, GaussianRational, MultiPoly, NumberField,
                     count_real_roots, isolate_real_roots, mv_gcd, resultant_in)
from soscert import univariate as uv

# multipoly basics
x, y, z = MultiPoly.generators(("x", "y", "z"))
f = (x + 2 * y) ** 2 - x * x - 4 * x * y
assert f == 4 * y ** 2, str(f)
g = (x ** 2 - y ** 2).exact_div(x - y)
assert g == x + y
assert mv_gcd(x ** 2 - y ** 2, x - y) == x - y
assert mv_gcd(x ** 2 - y ** 2, x ** 2 + 2 * x * y + y ** 2) == x + y

# gcd over Q(i)
I = GaussianRational.i()
xi = x + I * y
assert mv_gcd(xi ** 3, xi * (x - I * y)) == xi, str(mv_gcd(xi ** 3, xi * (x - I * y)))

# resultant: res_x(x^2 - 2, x - y) should be y^2 - 2 up to sign
r = resultant_in(x * x - 2, x - y, "x")
print("res:", r)
assert r == y * y - 2 or r == -(y * y - 2)

# resultant degenerate
try:
    resultant_in(y + 1, y * y, "x")
    raise SystemExit("expected ValueError")
except ValueError:
    pass

# sturm
p = uv.normalize([-2, 0, 1])  # x^2 - 2
assert count_real_roots(p) == 2
assert count_real_roots(p, Fraction(0), Fraction(2)) == 1
ivs = isolate_real_roots(p)
assert len(ivs) == 2
m36 = uv.normalize([36, -36, -921, 152, -327, 648])
print("degree-5 real roots:", count_real_roots(m36), isolate_real_roots(m36))

# number field Q(2^(1/3))
K = NumberField([-2, 0, 0, 1], "c")
c = K.gen()
assert c ** 3 == K.rational(2)
assert (c ** 2 / c) == c
assert ((1 + c) * (1 + c).inverse()) == K.one()
assert K.trace(c) == 0 and K.trace(c * c) == 0 and K.trace(K.one()) == 3
assert K.n_real_roots() == 1
assert K.sign(c - 1) > 0 and K.sign(c - 2) < 0

# Example field: 50Z^4+28Z^3-Z^2+23Z-8, traces match the published vector
L = NumberField([-8, 23, -1, 28, 50], "a")
a = L.gen()
assert L.trace(a) == Fraction(-14, 25), L.trace(a)
assert L.trace(a * a) == Fraction(221, 625), L.trace(a * a)
print("quartic field real roots:", L.n_real_roots())

# the rederived zero branch: z = (3+5a^2)/(2-a); traces of coords
zc = (3 + 5 * a * a) / (2 - a)
print("Tr(z) =", L.trace(zc), " Tr(z^2) =", L.trace(zc * zc))
print("float a:", float(a), "float z:", float(zc))
print("OK")
