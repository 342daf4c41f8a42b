"""Numeric solver validation on the reduced pencils of the two worked runs."""
import sys, time
from fractions import Fraction

sys.path.insert(0, "/root/pkg/src")
sys.path.insert(0, "/root/pkg/dev")

from papersrc import F_A1, F_B, M5
from soscert.fileio import parse_polynomial
from soscert.gram import build_pencil, generic_rank, pencil_eval
from soscert.numberfield import NumberField
from soscert.facial import (ZeroPoint, kernel_from_zero, trace_constraint,
                            diag_ghosts, apply_constraints, force_rational,
                            apply_parameter_equations, _identically_annihilated)
from soscert.sdp import (SdpConfig, SdpResult, full_rank_principal_submatrix,
                         max_min_eigenvalue, sym_eigen, _float_subpencil,
                         _eval_sub)

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


# ---- Example 3.6 chain: L1 -> L2 (rank 10) -> L4 (rank 6) ----
fb = parse_polynomial(F_B, variables=("x", "y", "z"))
pb = build_pencil(fb)
K5 = NumberField([F(c, 648) for c in M5[:-1]] + [F(1)], "a")
a = K5.gen()
y3 = (648 * a**4 - 327 * a**3 + 152 * a**2 - 777 * a - 36) / 60
s1 = ZeroPoint.create(fb, (F(0), F(1), F(0)))
s2 = ZeroPoint.create(fb, (F(0), F(-3), F(1)))
s3 = ZeroPoint.create(fb, (K5.rational(1), y3, a), field=K5)

cons = (kernel_from_zero(pb, s1, "plain") + kernel_from_zero(pb, s2, "plain")
        + [trace_constraint(pb, s3)])
L1 = apply_constraints(pb, cons)
tick(f"L1: ({L1.dim},{generic_rank(L1)})  expect (39,12)")
L2 = diag_fixpoint(L1)
tick(f"L2: ({L2.dim},{generic_rank(L2)})  expect (23,10)")
L3 = apply_constraints(L2, kernel_from_zero(L2, s3, "plain"))
tick(f"L3: ({L3.dim},{generic_rank(L3)})  expect (16,9)")
L4 = apply_parameter_equations(L3, force_rational(L3))
L4 = diag_fixpoint(L4)
tick(f"L4: ({L4.dim},{generic_rank(L4)}) field={L4.field}  expect (4,6) None")

# full-rank principal submatrix on L4 (rank 6, size 15)
omega = full_rank_principal_submatrix(L4, 6)
tick(f"L4 omega: {omega} (|omega|={len(omega)})")

cfg = SdpConfig()
res4 = max_min_eigenvalue(L4, omega, cfg)
tick(f"L4 solve: status={res4.status} lam={res4.min_eigenvalue:.4e} "
     f"iters={res4.iterations}")
assert res4.status == "positive-definite", res4

# L2 full solve: 5 exact zeros + ~4 near-zeros + 6 positive
res2 = max_min_eigenvalue(L2, list(range(L2.size)), cfg)
const2, dirs2 = _float_subpencil(L2, list(range(L2.size)))
vals2, _ = sym_eigen(_eval_sub(const2, dirs2, res2.params))
scale2 = max(abs(vals2[0]), abs(vals2[-1]))
near = sum(1 for v in vals2 if abs(v) < 1e-5 * scale2)
tick(f"L2 solve: status={res2.status} lam={res2.min_eigenvalue:.4e} "
     f"near-zeros(<1e-5*scale)={near}")
print("  L2 spectrum:", ["%.4f" % v for v in vals2])
assert res2.status == "boundary", res2
assert near == 9, near  # 5 exact + 4 approximate

# ---- Example 3.3: trace constraint gives the unique matrix ----
fa = parse_polynomial(F_A1, variables=("x", "y", "z"))
pa = build_pencil(fa)
M4 = (-8, 23, -1, 28, 50)
K1 = NumberField([F(c, 50) for c in M4[:-1]] + [F(1)], "a")
aa = K1.gen()
za = (3 + 5 * aa**2) / (2 - aa)
z1 = ZeroPoint.create(fa, (K1.rational(1), aa, za), field=K1)
LA = apply_constraints(pa, [trace_constraint(pa, z1)])
tick(f"A.1 trace pencil: ({LA.dim},{generic_rank(LA)})  expect (0,2)")
omega_a = full_rank_principal_submatrix(LA, 2)
tick(f"A.1 omega: {omega_a}")
resa = max_min_eigenvalue(LA, omega_a, cfg)
tick(f"A.1 0-param solve: status={resa.status} lam={resa.min_eigenvalue:.4e}")
assert resa.status == "positive-definite", resa
mat = pencil_eval(LA, [])
vals_a, _ = sym_eigen([[float(x) for x in row] for row in mat])
pos = sum(1 for v in vals_a if v > 1e-9)
zero = sum(1 for v in vals_a if abs(v) <= 1e-9)
tick(f"A.1 full matrix: {pos} positive, {zero} zero  expect 2/4")
assert (pos, zero) == (2, 4)

tick("smoke4 all green")
