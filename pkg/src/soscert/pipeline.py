"""End-to-end decomposition runs shared by the command-line front end.

``decompose`` chains the stages: Gram pencil, facial reduction from the
supplied zeros, numeric max-min-eigenvalue ascent on whatever parameters
remain, parameter rounding, and exact certificate extraction with
verification.  The outcome is a RunReport that either carries a verified
Certificate or names the refusal reason; the distinction between
"proven impossible" and "gave up" is preserved for the exit code.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Any, Sequence

from .cert import (Certificate, NotPsd, certificate_from_squares,
                   extract_certificate, round_params, verify_certificate)
from .descent import (DescentIncomplete, conjugate_product, gen_three_squares,
                      two_square_descent)
from .facial import ReduceOptions, ReductionStep, ZeroPoint, reduce
from .fileio import write_certificate_text
from .gram import GramPencil, generic_rank, pencil_eval
from .multipoly import MultiPoly
from .numberfield import AlgebraicNumber
from .sdp import SdpConfig, full_rank_principal_submatrix, max_min_eigenvalue

# Refusal vocabulary; exit 1 reasons are proofs, exit 2 reasons are
# failures to conclude.
REFUSAL_NOT_PSD = "not-psd-unique-solution"
REFUSAL_EMPTY = "empty-pencil"
REFUSAL_BOUNDARY = "solver-boundary"
REFUSAL_DESCENT = "descent-incomplete"
_PROVEN = {REFUSAL_NOT_PSD, REFUSAL_EMPTY}


@dataclass
class RunReport:
    steps: list[ReductionStep] = dc_field(default_factory=list)
    warnings: list[str] = dc_field(default_factory=list)
    messages: list[str] = dc_field(default_factory=list)
    pencil_size: int | None = None
    solver_status: str | None = None
    solver_value: float | None = None
    certificate: Certificate | None = None
    refusal: str | None = None
    witness: list[Any] | None = None
    seconds: float = 0.0

    @property
    def exit_code(self) -> int:
        if self.certificate is not None:
            return 0
        if self.refusal in _PROVEN:
            return 1
        return 2

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "steps": [{"description": s.description, "dim": s.dim, "rank": s.rank}
                      for s in self.steps],
            "warnings": list(self.warnings),
            "messages": list(self.messages),
            "pencil_size": self.pencil_size,
            "solver_status": self.solver_status,
            "solver_value": self.solver_value,
            "refusal": self.refusal,
            "witness": [str(w) for w in self.witness] if self.witness else None,
            "certificate": (write_certificate_text(self.certificate)
                            if self.certificate is not None else None),
            "exit_code": self.exit_code,
            "seconds": self.seconds,
        }
        return out

    def render(self) -> str:
        lines: list[str] = []
        if self.steps:
            lines.append("facial reduction results:")
            for s in self.steps:
                if s.dim < 0:
                    lines.append(f"  {s.description}")
                else:
                    lines.append(f"  {s.description}: {s.dim} indeterminates, rank {s.rank}")
        for w in self.warnings:
            lines.append(f"warning: {w}")
        if self.solver_status is not None:
            val = (f" (min eigenvalue {self.solver_value:.6g})"
                   if self.solver_value is not None else "")
            lines.append(f"solver status: {self.solver_status}{val}")
        lines.extend(self.messages)
        if self.witness is not None:
            lines.append("witness vector: " + ", ".join(str(w) for w in self.witness))
        if self.refusal is not None:
            lines.append(f"refusal: {self.refusal}")
        return "\n".join(lines)


def _attempt_exact(p: GramPencil, params: Sequence[Fraction], f: MultiPoly,
                   report: RunReport) -> Certificate | None:
    matrix = pencil_eval(p, list(params))
    cert = extract_certificate(matrix, p.basis, field=p.field)
    if isinstance(cert, NotPsd):
        return None
    if not verify_certificate(cert, f):
        return None
    return cert


def decompose(f: MultiPoly, zeros: Sequence[ZeroPoint] = (), *,
              trace_equations: bool = True, force_rational: bool = False,
              max_denom: int = 10**6, config: SdpConfig | None = None,
              rounding_retries: int = 3) -> RunReport:
    """Full pipeline; never raises for mathematical outcomes, only for bad input."""
    start = time.perf_counter()
    report = RunReport()
    options = ReduceOptions(trace_equations=trace_equations,
                            force_rational=force_rational)
    if trace_equations and any(not z.is_rational() for z in zeros):
        report.warnings.append("Only valid when looking for rational decompositions")

    pencil, log = reduce(f, zeros, options)
    report.steps = log.steps
    report.warnings.extend(log.warnings)
    if pencil is None:
        report.refusal = REFUSAL_EMPTY
        report.messages.append(
            "the zero constraints admit no Gram matrix: no decomposition "
            "under the applied conditions")
        report.seconds = time.perf_counter() - start
        return report
    report.pencil_size = pencil.size

    if pencil.dim == 0:
        report.messages.append("solution matrix is unique under the specified conditions")
        matrix = pencil_eval(pencil, [])
        cert = extract_certificate(matrix, pencil.basis, field=pencil.field)
        if isinstance(cert, NotPsd):
            report.refusal = REFUSAL_NOT_PSD
            report.witness = cert.witness
            report.messages.append(
                "the unique solution matrix is not positive semidefinite: "
                "no decomposition under the applied conditions")
            report.seconds = time.perf_counter() - start
            return report
        if not verify_certificate(cert, f):
            raise ArithmeticError("extracted certificate failed verification")
        report.certificate = cert
        report.messages.append(f"certificate with {len(cert.coefficients)} squares")
        report.seconds = time.perf_counter() - start
        return report

    if pencil.field is not None:
        report.refusal = REFUSAL_BOUNDARY
        report.messages.append(
            "algebraic coefficients with free parameters remain; "
            "re-run with rationality forcing to continue")
        report.seconds = time.perf_counter() - start
        return report

    rank = generic_rank(pencil)
    omega = full_rank_principal_submatrix(pencil, rank)
    result = max_min_eigenvalue(pencil, omega, config)
    report.solver_status = result.status
    report.solver_value = result.min_eigenvalue

    if result.status != "infeasible-like":
        denom = max_denom
        for _ in range(rounding_retries + 1):
            cert = _attempt_exact(pencil, round_params(result.params, denom), f, report)
            if cert is not None:
                report.certificate = cert
                report.messages.append(
                    f"certificate with {len(cert.coefficients)} squares "
                    f"(denominator bound {denom})")
                report.seconds = time.perf_counter() - start
                return report
            denom *= 2

    report.refusal = REFUSAL_BOUNDARY
    if result.status == "positive-definite":
        report.messages.append(
            "rounding the solver point did not produce a verifiable certificate")
    else:
        report.messages.append(
            "the solver reached the boundary of the feasible set; "
            "inconclusive without further zero constraints")
    report.seconds = time.perf_counter() - start
    return report


# -- descent and generator runs -------------------------------------------


def _rational_poly(p: MultiPoly) -> MultiPoly:
    terms = {}
    for mono, coef in p.terms.items():
        if isinstance(coef, AlgebraicNumber):
            if not coef.is_rational():
                raise ValueError("polynomial is not rational")
            terms[mono] = coef.rational_value()
        else:
            terms[mono] = Fraction(coef)
    return MultiPoly(p.vars, terms)


def descend(p1: MultiPoly, p2: MultiPoly, minpoly: Any,
            depth: int = 32) -> RunReport:
    """Norm-and-descend: rational q1, q2 with q1^2 + q2^2 = p1^2 + p2^2."""
    start = time.perf_counter()
    report = RunReport()
    big1, big2 = conjugate_product(p1, p2, minpoly)
    f = _rational_poly(p1 * p1 + p2 * p2)
    if isinstance(minpoly, (list, tuple)):
        d = len(minpoly) - 1
    else:
        d = getattr(minpoly, "degree", None) or len(list(minpoly)) - 1
    report.messages.append(f"conjugate product of degree {d} verified")
    try:
        q1, q2 = two_square_descent(f, big1, big2, d, depth=depth)
    except DescentIncomplete as exc:
        report.refusal = REFUSAL_DESCENT
        report.messages.append(str(exc))
        report.seconds = time.perf_counter() - start
        return report
    cert = certificate_from_squares([Fraction(1), Fraction(1)], [q1, q2])
    if not verify_certificate(cert, f):
        raise ArithmeticError("descent certificate failed verification")
    report.certificate = cert
    report.messages.append("certificate with 2 squares")
    report.seconds = time.perf_counter() - start
    return report


def generate(a3: Any, b1: Any, b2: Any, b3: Any,
             c1: Any, c2: Any, c3: Any) -> RunReport:
    """Three-square generator run; certificate coefficients live in Q(2^(1/3))."""
    start = time.perf_counter()
    report = RunReport()
    f, p1, p2, p3 = gen_three_squares(a3, b1, b2, b3, c1, c2, c3)
    squares = [p for p in (p1, p2, p3) if p]
    fld = None
    for p in squares:
        for coef in p.terms.values():
            if isinstance(coef, AlgebraicNumber):
                fld = coef.field
                break
        if fld is not None:
            break
    cert = certificate_from_squares([Fraction(1)] * len(squares), squares, field=fld)
    if not verify_certificate(cert, f):
        raise ArithmeticError("generated certificate failed verification")
    report.certificate = cert
    report.messages.append(
        f"f = {f} is a sum of {len(squares)} squares over the cubic field")
    report.seconds = time.perf_counter() - start
    return report
