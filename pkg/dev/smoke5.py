"""Exact LDL / certificate validation on the worked examples."""
import sys, time
from fractions import Fraction

sys.path.insert(0, "/root/pkg/src")
sys.path.insert(0, "/root/pkg/dev")

from papersrc import F_A1, F_A4, F_B, F_C, Q1_C, Q2_C, M4, M5
from soscert.cert import (Certificate, LdlResult, NotPsd, certificate_from_squares,
                          charpoly_sign_check, extract_certificate, ldl_decompose,
                          round_params, verify_certificate)
from soscert.fileio import parse_polynomial
from soscert.gram import build_pencil, generic_rank, monomial_basis, pencil_eval
from soscert.linalg import charpoly
from soscert.numberfield import NumberField
from soscert.facial import (ZeroPoint, apply_constraints, apply_parameter_equations,
                            diag_ghosts, force_rational, kernel_from_zero,
                            trace_constraint, _identically_annihilated)
from soscert.sdp import SdpConfig, full_rank_principal_submatrix, max_min_eigenvalue

t0 = time.time()
F = Fraction


def tick(msg):
    print(f"[{time.time()-t0:7.2f}s] {msg}")


def diag_fixpoint(p):
    while p.dim > 0:
        dg = [c for c in diag_ghosts(p)
              if not _identically_annihilated(p, c.vector)]
        if not dg:
            break
        p = apply_constraints(p, dg)
    return p


def quad_form(m, w):
    return sum(w[i] * m[i][j] * w[j] for i in range(len(m)) for j in range(len(m)))


def reassemble(res):
    n = len(res.diag)
    out = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        if not res.diag[i]:
            continue
        for a in range(n):
            if not res.upper[i][a]:
                continue
            da = res.diag[i] * res.upper[i][a]
            for b in range(n):
                if res.upper[i][b]:
                    out[a][b] = out[a][b] + da * res.upper[i][b]
    return out


# ---- round_params ----
assert round_params([0.4999999991], 100) == [F(1, 2)]
assert round_params([0.3333333], 10) == [F(1, 3)]
assert round_params([7, -2.0], 10**6) == [F(7), F(-2)]
try:
    round_params([0.5], 0)
    raise AssertionError("bound 0 accepted")
except ValueError:
    pass
tick("round_params OK")

# ---- identity and trivial cases ----
ident = [[F(1), F(0)], [F(0), F(1)]]
res = ldl_decompose(ident)
assert isinstance(res, LdlResult)
assert res.perm == (0, 1) and res.diag == [1, 1]
assert res.upper == [[1, 0], [0, 1]]
assert charpoly(ident) == [F(1), F(-2), F(1)]
assert charpoly_sign_check(ident)
assert not charpoly_sign_check([[F(1), F(0)], [F(0), F(-1)]])
assert not charpoly_sign_check([[F(-1)]])
assert charpoly_sign_check([[F(0), F(0)], [F(0), F(0)]])

bx = monomial_basis(("x",), 1)
cert1 = extract_certificate([[F(1)]], bx)
assert isinstance(cert1, Certificate)
assert cert1.coefficients == [1]
assert str(cert1.polynomials[0]) == "x"
assert verify_certificate(cert1, parse_polynomial("x^2", ("x",)))
tick("trivial cases OK")

# ---- NotPsd witnesses ----
neg = [[F(3), F(1)], [F(1), F(-2)]]
bad = ldl_decompose(neg)
assert isinstance(bad, NotPsd)
assert quad_form(neg, bad.witness) < 0
# zero pivot with nonzero row
zp = [[F(0), F(2)], [F(2), F(5)]]
bad2 = ldl_decompose(zp)
assert isinstance(bad2, NotPsd)
assert quad_form(zp, bad2.witness) == -1
tick("witnesses OK")

# ---- A.1 certificate ----
fa = parse_polynomial(F_A1, variables=("x", "y", "z"))
pa = build_pencil(fa)
K1 = NumberField([F(c, 50) for c in M4[:-1]] + [F(1)], "a")
aa = K1.gen()
za = (3 + 5 * aa**2) / (2 - aa)
z1 = ZeroPoint.create(fa, (K1.rational(1), aa, za), field=K1)
LA = apply_constraints(pa, [trace_constraint(pa, z1)])
assert LA.dim == 0
mat_a = pencil_eval(LA, [])
res_a = ldl_decompose(mat_a)
assert isinstance(res_a, LdlResult)
nz = [(i, d) for i, d in enumerate(res_a.diag) if d]
tick(f"A.1 pivots: {nz}")
assert [d for _, d in nz] == [F(10), F(81, 10)]
assert reassemble(res_a) == mat_a

cert_a = extract_certificate(mat_a, pa.basis)
p1 = parse_polynomial("x^2+3/10*x*y-11/10*x*z+3/2*y^2+3/10*y*z+1/5*z^2",
                      ("x", "y", "z"))
p2 = parse_polynomial("x*y-13/9*x*z-5/9*y^2-1/9*y*z+2/3*z^2", ("x", "y", "z"))
assert cert_a.polynomials == [p1, p2], cert_a.polynomials
assert verify_certificate(cert_a, fa)
assert charpoly_sign_check(mat_a)
wrong = Certificate([F(11), cert_a.coefficients[1]], cert_a.polynomials,
                    cert_a.gram, cert_a.basis)
assert not verify_certificate(wrong, fa)
tick("A.1 certificate OK")

# ---- A.4: unique solution, not PSD ----
fa4 = parse_polynomial(F_A4, ("x", "y", "z"))
pa4 = build_pencil(fa4)
K4 = NumberField([-1, 0, -4, 0, 0, 0, 1], "b")
b = K4.gen()
x4 = (b**5 + b**2 - 4 * b) / 2
z4 = ZeroPoint.create(fa4, (x4, b, K4.rational(1)), field=K4)
LA4 = apply_constraints(pa4, [trace_constraint(pa4, z4)])
tick(f"A.4 trace pencil: ({LA4.dim},{generic_rank(LA4)})  expect (0,5)")
assert LA4.dim == 0
mat4 = pencil_eval(LA4, [])
res4 = ldl_decompose(mat4)
assert isinstance(res4, NotPsd)
val = quad_form(mat4, res4.witness)
tick(f"A.4 witness value: {val} (< 0)")
assert val < 0
assert not charpoly_sign_check(mat4)
assert isinstance(extract_certificate(mat4, pa4.basis), NotPsd)
tick("A.4 OK")

# ---- Worksheet C verification ----
fc = parse_polynomial(F_C, ("x", "y", "z"))
q1 = parse_polynomial(Q1_C, ("x", "y", "z"))
q2 = parse_polynomial(Q2_C, ("x", "y", "z"))
cert_c = certificate_from_squares([F(1), F(1)], [q1, q2])
assert verify_certificate(cert_c, fc)
assert not verify_certificate(cert_c, fc + parse_polynomial("x^6", ("x", "y", "z")))
tick("worksheet C certificate OK")

# ---- algebraic matrices ----
K2 = NumberField([-2, 0, 1], "r", real_root_index=1)
r = K2.gen()
alg = [[r, K2.rational(1)], [K2.rational(1), r]]
res_alg = ldl_decompose(alg)
assert isinstance(res_alg, LdlResult)
assert res_alg.diag[0] == r and res_alg.diag[1] == r - 1 / r
back = reassemble(res_alg)
assert all(back[i][j] == alg[i][j] for i in range(2) for j in range(2))
assert charpoly_sign_check(alg)
K2n = NumberField([-2, 0, 1], "r", real_root_index=0)
rn = K2n.gen()
algn = [[rn, K2n.rational(1)], [K2n.rational(1), rn]]
bad_alg = ldl_decompose(algn)
assert isinstance(bad_alg, NotPsd)
assert K2n.sign(quad_form(algn, bad_alg.witness)) < 0
assert not charpoly_sign_check(algn)
tick("algebraic LDL OK")

# ---- Example 3.6: rounded solution, reduced and full matrices ----
fb = parse_polynomial(F_B, variables=("x", "y", "z"))
pb = build_pencil(fb)
K5 = NumberField([F(c, 648) for c in M5[:-1]] + [F(1)], "a")
a5 = K5.gen()
y3 = (648 * a5**4 - 327 * a5**3 + 152 * a5**2 - 777 * a5 - 36) / 60
s1 = ZeroPoint.create(fb, (F(0), F(1), F(0)))
s2 = ZeroPoint.create(fb, (F(0), F(-3), F(1)))
s3 = ZeroPoint.create(fb, (K5.rational(1), y3, a5), field=K5)
cons = (kernel_from_zero(pb, s1, "plain") + kernel_from_zero(pb, s2, "plain")
        + [trace_constraint(pb, s3)])
L2 = diag_fixpoint(apply_constraints(pb, cons))
L3 = apply_constraints(L2, kernel_from_zero(L2, s3, "plain"))
L4 = diag_fixpoint(apply_parameter_equations(L3, force_rational(L3)))
tick(f"3.6 chain rebuilt: L4 ({L4.dim},{L4.size})")

omega = full_rank_principal_submatrix(L4, 6)
sol = max_min_eigenvalue(L4, omega, SdpConfig())
tick(f"3.6 solve: {sol.status} lam={sol.min_eigenvalue:.3e}")
assert sol.status == "positive-definite"
# the facial steps keep the 15-monomial basis; the face shows up as zero rows
assert L4.basis.entries == pb.basis.entries
t_hat = round_params(sol.params, 10**6)
W15 = pencil_eval(L4, t_hat)
res15 = ldl_decompose(W15)
assert isinstance(res15, LdlResult), res15
pivots15 = [d for d in res15.diag if d]
assert len(pivots15) == 6 and all(d > 0 for d in pivots15)
assert sum(1 for d in res15.diag if not d) == 9
assert reassemble(res15) == W15
cert15 = extract_certificate(W15, pb.basis)
assert len(cert15.coefficients) == 6
assert verify_certificate(cert15, fb)
chi = charpoly(W15)
assert all(chi[i] == 0 for i in range(9)) and chi[9] != 0
assert charpoly_sign_check(W15)
tick("3.6 final 15x15: 6 positive + 9 zero pivots, chi = x^9 * (alternating)")

tick("smoke5 all green")
