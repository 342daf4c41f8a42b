"""Validate pipeline.py and cli.py end to end on the appendix workflows."""

import io
import json
import sys
import time
from contextlib import redirect_stdout
from fractions import Fraction
from pathlib import Path

sys.path.insert(0, "/root/pkg/src")
sys.path.insert(0, "/root/pkg/dev")

from papersrc import (F_A1, F_A4, F_B, F_C, F_MOTZKIN, F_S5, P1IN_C, P2IN_C,
                      Q1_C, Q2_C)
from soscert.cli import main
from soscert.descent import gen_three_squares
from soscert.fileio import parse_polynomial, read_certificate_text
from soscert.pipeline import decompose, descend
from soscert.numberfield import NumberField

t0 = time.time()
F = Fraction
TMP = Path("/tmp/smoke7")
TMP.mkdir(exist_ok=True)


def run(*argv):
    buf = io.StringIO()
    with redirect_stdout(buf):
        code = main(list(argv))
    return code, buf.getvalue()


# pencil dims
code, out = run("pencil", F_B)
assert code == 0 and "size: 15" in out and "dimension: 75" in out and "generic rank: 15" in out, out
code, out = run("pencil", F_S5)
assert code == 0 and "size: 20" in out and "dimension: 126" in out and "generic rank: 20" in out, out
code, out = run("pencil", "x^2+y^2")
assert code == 0 and "size: 2" in out and "dimension: 0" in out and "generic rank: 2" in out, out
print("pencil dims ok", round(time.time() - t0, 2))

# trivial decompose: unique PSD constant pencil
code, out = run("decompose", "x^2+y^2")
assert code == 0 and "unique under the specified conditions" in out, out
assert "certificate" in out
print("trivial decompose ok")

# A.1: algebraic zero via file, trace equations -> unique PSD matrix
za1 = TMP / "a1.zeros"
za1.write_text("minpoly: 50*Z^4+28*Z^3-Z^2+23*Z-8 ; "
               "coords: 1, a, (3+5*a^2)/(2-a) ; label: gamma(1)\n")
code, out = run("decompose", F_A1, "--zeros", str(za1), "--json")
assert code == 0, out
rep = json.loads(out)
assert rep["exit_code"] == 0
assert any("unique under the specified conditions" in m for m in rep["messages"])
assert rep["warnings"] == ["Only valid when looking for rational decompositions"]
cert_text = rep["certificate"]
assert cert_text is not None
(TMP / "a1.cert").write_text(cert_text)
cert = read_certificate_text(cert_text)
assert cert.coefficients == [F(10), F(81, 10)], cert.coefficients
steps = [(s["dim"], s["rank"]) for s in rep["steps"]]
assert steps[0] == (6, 6) and steps[-1] == (0, 2), steps
print("A.1 decompose ok", round(time.time() - t0, 2))

# verify command: good and tampered
code, out = run("verify", str(TMP / "a1.cert"), F_A1)
assert code == 0 and "verifies" in out
code, out = run("verify", str(TMP / "a1.cert"), F_A1 + "+x^4")
assert code == 1 and "NOT" in out
print("verify command ok")

# A.3 Motzkin, plain zero constraints: proven not PSD, exit 1
zm = TMP / "motzkin.zeros"
zm.write_text("\n".join([
    "coords: 1, 1, 1", "coords: 1, 1, -1", "coords: 1, -1, 1",
    "coords: -1, 1, 1", "coords: 1, 0, 0", "coords: 0, 1, 0"]) + "\n")
code, out = run("decompose", F_MOTZKIN, "--zeros", str(zm),
                "--trace-equations", "no", "--json")
rep = json.loads(out)
assert code == 1 and rep["refusal"] == "not-psd-unique-solution", out
assert rep["witness"] is not None
last = rep["steps"][-1]
assert last["dim"] == 0 and last["rank"] == 4, rep["steps"]
assert not rep["warnings"]
print("A.3 Motzkin refusal ok", round(time.time() - t0, 2))

# A.4: algebraic zero, trace equations on by default, exit 1
za4 = TMP / "a4.zeros"
za4.write_text("minpoly: Z^6-4*Z^2-1 ; coords: (a^5+a^2-4*a)/2, a, 1\n")
code, out = run("decompose", F_A4, "--zeros", str(za4), "--json")
rep = json.loads(out)
assert code == 1 and rep["refusal"] == "not-psd-unique-solution", out
assert "Only valid when looking for rational decompositions" in rep["warnings"]
last = rep["steps"][-1]
assert last["dim"] == 0 and last["rank"] == 5, rep["steps"]
print("A.4 refusal ok", round(time.time() - t0, 2))

# Example 3.6 end to end through the CLI: zeros file, forcing, solver, rounding
zb = TMP / "b.zeros"
zb.write_text("\n".join([
    "coords: 0, 1, 0",
    "coords: 0, -3, 1",
    "minpoly: 648*Z^5-327*Z^4+152*Z^3-921*Z^2-36*Z+36 ; "
    "coords: 1, (648*a^4-327*a^3+152*a^2-777*a-36)/60, a"]) + "\n")
code, out = run("decompose", F_B, "--zeros", str(zb),
                "--force-rational", "yes", "--json",
                "--output", str(TMP / "b.cert"))
rep = json.loads(out)
assert code == 0, out[:2000]
assert rep["solver_status"] == "positive-definite"
cert_b = read_certificate_text(rep["certificate"])
assert len(cert_b.coefficients) == 6, len(cert_b.coefficients)
code, out = run("verify", str(TMP / "b.cert"), F_B)
assert code == 0
print("Example 3.6 CLI end-to-end ok", round(time.time() - t0, 2))

# descend2 via CLI on the Worksheet C inputs
code, out = run("descend2", P1IN_C, P2IN_C, "--minpoly", "Z^3-2",
                "--json", "--output", str(TMP / "c.cert"))
rep = json.loads(out)
assert code == 0, out[:1000]
cert_c = read_certificate_text(rep["certificate"])
got = {str(p) for p in cert_c.polynomials}
exp1 = parse_polynomial(Q1_C, ("x", "y", "z"))
exp2 = parse_polynomial(Q2_C, ("x", "y", "z"))
allowed = {str(q) for q in (exp1, exp2, -exp1, -exp2)}
assert got <= allowed, got
code, out = run("verify", str(TMP / "c.cert"), F_C)
assert code == 0
print("descend2 CLI ok", round(time.time() - t0, 2))

# descend2 exit 64 on bad input
code, out = run("descend2", "x", "y", "--minpoly", "Z^2-2")
assert code == 64
code, out = run("decompose", "x^2+y")
assert code == 64
print("usage errors ok")

# descent-incomplete refusal via the pipeline seam (general path, no budget)
K = NumberField([-2, 0, 0, 1], "a")
p1 = parse_polynomial("x", ("x", "y"), field=K)
p2 = parse_polynomial("y", ("x", "y"), field=K)
rep2 = descend(p1, p2, K, depth=0)
assert rep2.refusal == "descent-incomplete" and rep2.exit_code == 2
rep3 = descend(p1, p2, K)
assert rep3.certificate is not None and rep3.exit_code == 0
print("descent-incomplete refusal ok")

# gen3 via CLI: section-5 substitutions; certificate re-verifies
code, out = run("gen3", "21*z", "x", "3*x", "y", "z", "x+7*z", "w",
                "--vars", "x,y,z,w", "--json", "--output", str(TMP / "g.cert"))
rep = json.loads(out)
assert code == 0, out[:1000]
fs, _p1, _p2, _p3 = gen_three_squares(
    *(parse_polynomial(t, ("x", "y", "z", "w")) for t in
      ("21*z", "x", "3*x", "y", "z", "x+7*z", "w")))
code, out = run("verify", str(TMP / "g.cert"), str(fs))
assert code == 0, out
assert fs * 4 == parse_polynomial(F_S5, ("x", "y", "z", "w"))
print("gen3 CLI ok", round(time.time() - t0, 2))

# Motzkin without zeros: ghost equations alone cascade to the unique
# rank-4 matrix, so non-SOS is still proven
code, out = run("decompose", F_MOTZKIN, "--json")
rep = json.loads(out)
assert code == 1 and rep["refusal"] == "not-psd-unique-solution", out[:500]
print("Motzkin ghost-only proof ok", round(time.time() - t0, 2))

# quartic with a boundary optimum and no zeros supplied: either the
# rounding lands on a PSD member (certificate) or the run is inconclusive
code, out = run("decompose", F_A1, "--json")
rep = json.loads(out)
if code == 0:
    assert rep["certificate"] is not None
else:
    assert code == 2 and rep["refusal"] == "solver-boundary", out[:500]
print("boundary path ok:", "certificate" if code == 0 else "inconclusive",
      round(time.time() - t0, 2))

print("smoke7 all green", round(time.time() - t0, 2), "s")
