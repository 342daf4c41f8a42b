"""Dev scratch: validate gram pencils against the paper's numbers."""
import sys, time
from fractions import Fraction

sys.path.insert(0, "/root/pkg/dev")
from papersrc import F_A1, F_B, F_S5, F_MOTZKIN, F_A4

from soscert.fileio import parse_polynomial
from soscert.gram import build_pencil, generic_rank, expand_quadratic, monomial_basis

t0 = time.time()

# Example 2.3
f23 = parse_polynomial("10*x^4+2*x^3*y+27*x^2*y^2-24*x*y^3+5*y^4", ("x", "y"))
p23 = build_pencil(f23)
assert p23.size == 3 and p23.dim == 1, (p23.size, p23.dim)
W0 = p23.eval([Fraction(0)])
assert W0 == [[10, 1, 0], [1, 27, -12], [0, -12, 5]], W0
W5 = p23.eval([Fraction(5)])
assert W5 == [[10, 1, 5], [1, 17, -12], [5, -12, 5]], W5
assert generic_rank(p23) == 3
assert expand_quadratic(p23, p23.eval([Fraction(7)])) == f23

# Eq (2.2): A.1 f, 6 params, rank 6
fa1 = parse_polynomial(F_A1, ("x", "y", "z"))
pa1 = build_pencil(fa1)
assert pa1.size == 6 and pa1.dim == 6, (pa1.size, pa1.dim)
assert generic_rank(pa1) == 6
assert [m for m in pa1.basis.entries] == [(2,0,0),(1,1,0),(1,0,1),(0,2,0),(0,1,1),(0,0,2)]
# paper labels: a14 a16 a23 a34 a35 a46 <-> my t0..t5 at pairs:
import itertools
# entry formulas, checked against Eq (2.2)
def affine(i, j):
    return (pa1.constant[i][j], tuple(d[i][j] for d in pa1.directions))
assert affine(0,0) == (10, (0,)*6)
assert affine(0,1) == (3, (0,)*6)
assert affine(0,2) == (-11, (0,)*6)
assert affine(0,3) == (0, (1,0,0,0,0,0))          # a_{1,4}
assert affine(1,1) == (39, (-2,0,0,0,0,0))        # 39-2a_{1,4}
assert affine(0,5) == (0, (0,1,0,0,0,0))          # a_{1,6}
assert affine(2,2) == (33, (0,-2,0,0,0,0))        # 33-2a_{1,6}
assert affine(1,2) == (0, (0,0,1,0,0,0))          # a_{2,3}
assert affine(0,4) == (-12, (0,0,-1,0,0,0))       # -12-a_{2,3}
assert affine(2,3) == (0, (0,0,0,1,0,0))          # a_{3,4}
assert affine(1,4) == (-10, (0,0,0,-1,0,0))       # -10-a_{3,4}
assert affine(2,4) == (0, (0,0,0,0,1,0))          # a_{3,5}
assert affine(1,5) == (4, (0,0,0,0,-1,0))         # 4-a_{3,5}
assert affine(3,5) == (0, (0,0,0,0,0,1))          # a_{4,6}
assert affine(4,4) == (1, (0,0,0,0,0,-2))         # 1-2a_{4,6}
assert affine(1,3) == (0, (0,)*6)
assert affine(3,3) == (25, (0,)*6)
assert affine(3,4) == (5, (0,)*6)
assert affine(2,5) == (-10, (0,)*6)
assert affine(4,5) == (0, (0,)*6)
assert affine(5,5) == (4, (0,)*6)
print("2.3 and (2.2) pencils OK", time.time() - t0)

# exampleB: 15x15, dim 75, rank 15
fb = parse_polynomial(F_B, ("x", "y", "z"))
pb = build_pencil(fb)
assert pb.size == 15 and pb.dim == 75, (pb.size, pb.dim)
r = generic_rank(pb)
assert r == 15, r
print("exampleB pencil OK", time.time() - t0)

# section 5 f: 20x20, dim 126, rank 20
fs5 = parse_polynomial(F_S5, ("x", "y", "z", "w"))
ps5 = build_pencil(fs5)
assert ps5.size == 20 and ps5.dim == 126, (ps5.size, ps5.dim)
r5 = generic_rank(ps5)
assert r5 == 20, r5
print("section5 pencil OK", time.time() - t0)

# Motzkin: 10x10, 27 params, rank 10
fm = parse_polynomial(F_MOTZKIN, ("x", "y", "z"))
pm = build_pencil(fm)
assert pm.size == 10 and pm.dim == 27, (pm.size, pm.dim)
assert generic_rank(pm) == 10
print("motzkin pencil OK", time.time() - t0)

# A.4: 6 params rank 6
fa4 = parse_polynomial(F_A4, ("x", "y", "z"))
pa4 = build_pencil(fa4)
assert pa4.dim == 6 and generic_rank(pa4) == 6
print("A.4 pencil OK; all good", time.time() - t0)
