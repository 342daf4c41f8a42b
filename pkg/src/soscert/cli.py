"""Command-line front end: decompose, verify, pencil, descend2, gen3.

Polynomials are given as expression text (see the grammar in fileio);
an argument starting with `@` is read from the named file instead.
Exit codes for `decompose`: 0 verified certificate, 1 proven no
decomposition under the applied conditions, 2 inconclusive, 64 bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import Any, Sequence

from .facial import ZeroPoint
from .fileio import (ParseError, parse_polynomial, parse_univariate,
                     parse_zeros_file, read_certificate_text,
                     write_certificate_text)
from .gram import build_pencil, generic_rank
from .multipoly import MultiPoly
from .numberfield import NumberField
from .pipeline import RunReport, decompose, descend, generate
from .cert import verify_certificate
from .sdp import SdpConfig

USAGE_EXIT = 64


def _read_arg(text: str) -> str:
    if text.startswith("@"):
        return Path(text[1:]).read_text()
    return text


def _split_vars(spec: str | None) -> tuple[str, ...] | None:
    if spec is None:
        return None
    return tuple(v.strip() for v in spec.split(",") if v.strip())


def _shared_vars(texts: Sequence[str], declared: tuple[str, ...] | None,
                 reserved: set[str]) -> tuple[str, ...]:
    if declared is not None:
        return declared
    from .fileio import names_in
    seen: list[str] = []
    for t in texts:
        for name in names_in(t):
            if name not in seen and name not in reserved:
                seen.append(name)
    return tuple(seen)


def _emit(report: RunReport, args: argparse.Namespace) -> int:
    if getattr(args, "json", False):
        print(json.dumps(report.to_dict(), indent=2))
    else:
        text = report.render()
        if text:
            print(text)
        if report.certificate is not None:
            print(write_certificate_text(report.certificate))
    out = getattr(args, "output", None)
    if out and report.certificate is not None:
        Path(out).write_text(write_certificate_text(report.certificate) + "\n")
    return report.exit_code


def _cmd_decompose(args: argparse.Namespace) -> int:
    f = parse_polynomial(_read_arg(args.polynomial), _split_vars(args.vars))
    zeros: list[ZeroPoint] = []
    if args.zeros:
        entries = parse_zeros_file(Path(args.zeros).read_text(), f.vars)
        for field, coords, _label in entries:
            zeros.append(ZeroPoint.create(f, coords, field=field))
    cfg = SdpConfig(seed=args.seed)
    if args.sdp_tol is not None:
        cfg.boundary_tol = args.sdp_tol
    report = decompose(
        f, zeros,
        trace_equations=(args.trace_equations == "yes"),
        force_rational=(args.force_rational == "yes"),
        max_denom=args.max_denom,
        config=cfg)
    return _emit(report, args)


def _cmd_verify(args: argparse.Namespace) -> int:
    cert = read_certificate_text(Path(args.certificate).read_text())
    f = parse_polynomial(_read_arg(args.polynomial), cert.basis.variables)
    if verify_certificate(cert, f):
        print("certificate verifies")
        return 0
    print("certificate does NOT verify")
    return 1


def _cmd_pencil(args: argparse.Namespace) -> int:
    f = parse_polynomial(_read_arg(args.polynomial), _split_vars(args.vars))
    p = build_pencil(f)
    print(f"size: {p.size}")
    print(f"dimension: {p.dim}")
    print(f"generic rank: {generic_rank(p)}")
    return 0


def _cmd_descend2(args: argparse.Namespace) -> int:
    minpoly = parse_univariate(_read_arg(args.minpoly))
    reserved = {args.generator}
    texts = [_read_arg(args.p1), _read_arg(args.p2)]
    variables = _shared_vars(texts, _split_vars(args.vars), reserved)
    field = NumberField(minpoly, args.generator) if len(minpoly) > 2 else None
    p1 = parse_polynomial(texts[0], variables, field=field)
    p2 = parse_polynomial(texts[1], variables, field=field)
    report = descend(p1, p2, minpoly)
    return _emit(report, args)


def _cmd_gen3(args: argparse.Namespace) -> int:
    texts = [_read_arg(t) for t in (args.a3, args.b1, args.b2, args.b3,
                                    args.c1, args.c2, args.c3)]
    variables = _shared_vars(texts, _split_vars(args.vars), set())
    polys = [parse_polynomial(t, variables) for t in texts]
    report = generate(*polys)
    return _emit(report, args)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="soscert",
        description="Exact rational sum-of-squares certificates for forms.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--vars", help="comma-separated variable order")
        p.add_argument("--json", action="store_true",
                       help="structured report on stdout")
        p.add_argument("--output", help="write the certificate to this file")

    d = sub.add_parser("decompose", help="find a rational SOS certificate")
    d.add_argument("polynomial")
    d.add_argument("--zeros", help="file of known zeros of the form")
    d.add_argument("--trace-equations", choices=("yes", "no"), default="yes",
                   help="use trace equations for algebraic zeros (default yes)")
    d.add_argument("--force-rational", choices=("yes", "no"), default="no",
                   help="restrict algebraic solution families to rational ones")
    d.add_argument("--max-denom", type=int, default=10**6,
                   help="denominator bound for parameter rounding")
    d.add_argument("--sdp-tol", type=float, default=None,
                   help="boundary tolerance for the numeric solver")
    d.add_argument("--seed", type=int, default=20090)
    add_common(d)
    d.set_defaults(func=_cmd_decompose)

    v = sub.add_parser("verify", help="check a certificate file against a polynomial")
    v.add_argument("certificate")
    v.add_argument("polynomial")
    v.set_defaults(func=_cmd_verify)

    pc = sub.add_parser("pencil", help="print Gram pencil size, dimension, rank")
    pc.add_argument("polynomial")
    pc.add_argument("--vars", help="comma-separated variable order")
    pc.set_defaults(func=_cmd_pencil)

    d2 = sub.add_parser("descend2",
                        help="two-square descent from an odd-degree field")
    d2.add_argument("p1")
    d2.add_argument("p2")
    d2.add_argument("--minpoly", required=True,
                    help="minimal polynomial of the generator, in Z")
    d2.add_argument("--generator", default="a",
                    help="generator name used in p1, p2 (default a)")
    add_common(d2)
    d2.set_defaults(func=_cmd_descend2)

    g3 = sub.add_parser("gen3",
                        help="three-square generator over Q(cbrt 2)")
    for name in ("a3", "b1", "b2", "b3", "c1", "c2", "c3"):
        g3.add_argument(name)
    add_common(g3)
    g3.set_defaults(func=_cmd_gen3)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_EXIT


if __name__ == "__main__":
    sys.exit(main())
