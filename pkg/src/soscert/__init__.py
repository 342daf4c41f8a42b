"""Exact sum-of-squares certificates for rational forms.

The package turns a non-negative form with rational coefficients into an
exact rational (or number-field) weighted sum-of-squares identity when
one exists on the boundary of the Gram spectrahedron: build the affine
family of Gram matrices, cut it down with kernel constraints derived
from zeros of the form, pick a point (numerically if free parameters
remain, then rounded back to rationals), and certify it with an exact
LDL^T factorization.  Two constructive routines for classical
sum-of-squares identities ride along: an odd-degree two-squares descent
over Q(i) and a three-squares generator over the cube-root field.
"""

from .cert import (Certificate, LdlResult, NotPsd, certificate_from_squares,
                   charpoly_sign_check, extract_certificate, ldl_decompose,
                   round_params, verify_certificate)
from .descent import (DescentIncomplete, GaussianPoly, conjugate_product,
                      gen_three_squares, two_square_descent)
from .facial import (KernelConstraint, ReduceOptions, ZeroPoint,
                     kernel_from_zero, reduce, search_rational_zeros,
                     trace_constraint)
from .fileio import (ParseError, parse_polynomial, parse_zeros_file,
                     read_certificate_text, write_certificate_text)
from .gaussian import GaussianRational
from .gram import (GramPencil, MonomialBasis, build_pencil, expand_quadratic,
                   generic_rank, monomial_basis, pencil_eval)
from .multipoly import MultiPoly, mv_gcd, resultant_in
from .numberfield import AlgebraicNumber, NumberField
from .pipeline import RunReport, decompose, descend, generate
from .sdp import SdpConfig, SdpResult, max_min_eigenvalue, sym_eigen
from .univariate import count_real_roots, isolate_real_roots, sign_at_root

__all__ = [
    "AlgebraicNumber",
    "Certificate",
    "DescentIncomplete",
    "GaussianPoly",
    "GaussianRational",
    "GramPencil",
    "KernelConstraint",
    "LdlResult",
    "MonomialBasis",
    "MultiPoly",
    "NotPsd",
    "NumberField",
    "ParseError",
    "ReduceOptions",
    "RunReport",
    "SdpConfig",
    "SdpResult",
    "ZeroPoint",
    "build_pencil",
    "certificate_from_squares",
    "charpoly_sign_check",
    "conjugate_product",
    "count_real_roots",
    "decompose",
    "descend",
    "expand_quadratic",
    "extract_certificate",
    "gen_three_squares",
    "generate",
    "generic_rank",
    "isolate_real_roots",
    "kernel_from_zero",
    "ldl_decompose",
    "max_min_eigenvalue",
    "monomial_basis",
    "mv_gcd",
    "parse_polynomial",
    "parse_zeros_file",
    "pencil_eval",
    "read_certificate_text",
    "reduce",
    "resultant_in",
    "round_params",
    "search_rational_zeros",
    "sign_at_root",
    "sym_eigen",
    "trace_constraint",
    "two_square_descent",
    "verify_certificate",
    "write_certificate_text",
]

__version__ = "0.1.0"
