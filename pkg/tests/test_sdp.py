"""Numeric eigenvalue stage: Jacobi spectra and the min-eigenvalue ascent.

The ascent runs on a diagonally equilibrated copy of the pencil, so the
attained value need not be the optimum of the original objective; the
verdicts are what the pipeline consumes, and matrix congruence preserves
them.  Tests pin verdicts and self-consistency, plus the one case with a
unique feasible point, where any correct method must land.
"""

import math
from fractions import Fraction as F

from hypothesis import given, settings
from hypothesis import strategies as st
import pytest

from conftest import field_from
from soscert.fileio import parse_polynomial
from soscert.gram import GramPencil, build_pencil, monomial_basis
from soscert.sdp import (
    SdpConfig,
    SdpResult,
    full_rank_principal_submatrix,
    max_min_eigenvalue,
    sym_eigen,
)


def pencil_of(text):
    names = ("x", "y")
    f = parse_polynomial(text, names)
    return build_pencil(f)


def test_sym_eigen_known():
    vals, vecs = sym_eigen([[2.0, 1.0], [1.0, 2.0]])
    assert abs(vals[0] - 1.0) < 1e-12 and abs(vals[1] - 3.0) < 1e-12
    vals, _ = sym_eigen([[5.0]])
    assert vals == [5.0]
    vals, _ = sym_eigen([[3.0, 0.0], [0.0, -4.0]])
    assert abs(vals[0] + 4.0) < 1e-12 and abs(vals[1] - 3.0) < 1e-12


def test_sym_eigen_vectors_diagonalize():
    m = [[4.0, 1.0, 0.5], [1.0, 3.0, -1.0], [0.5, -1.0, 1.0]]
    vals, vecs = sym_eigen(m)
    assert vals == sorted(vals)
    for lam, v in zip(vals, vecs):
        mv = [sum(m[i][j] * v[j] for j in range(3)) for i in range(3)]
        assert max(abs(mv[i] - lam * v[i]) for i in range(3)) < 1e-9
    for a in range(3):
        for b in range(3):
            dot = sum(vecs[a][i] * vecs[b][i] for i in range(3))
            assert abs(dot - (1.0 if a == b else 0.0)) < 1e-9


entry = st.floats(min_value=-10, max_value=10, allow_nan=False)


@settings(max_examples=40)
@given(st.lists(st.lists(entry, min_size=4, max_size=4), min_size=4, max_size=4))
def test_sym_eigen_random(raw):
    m = [[(raw[i][j] + raw[j][i]) / 2.0 for j in range(4)] for i in range(4)]
    vals, vecs = sym_eigen(m)
    assert vals == sorted(vals)
    trace = sum(m[i][i] for i in range(4))
    assert abs(sum(vals) - trace) < 1e-8
    for lam, v in zip(vals, vecs):
        mv = [sum(m[i][j] * v[j] for j in range(4)) for i in range(4)]
        assert max(abs(mv[i] - lam * v[i]) for i in range(4)) < 1e-7


def test_full_rank_principal_submatrix():
    p = pencil_of("x^4+y^4")
    assert full_rank_principal_submatrix(p, 3) == [0, 1, 2]
    assert full_rank_principal_submatrix(p, 1) == [0]
    with pytest.raises(ValueError):
        full_rank_principal_submatrix(p, 4)


def test_ascent_interior():
    # W(t) = [[1,0,t],[0,-2t,0],[t,0,1]] has positive-definite members
    p = pencil_of("x^4+y^4")
    res = max_min_eigenvalue(p, range(p.size))
    assert res.status == "positive-definite"
    assert res.min_eigenvalue > 0.3
    vals, _ = sym_eigen([[float(p.entry_const(i, j))
                          + res.params[0] * float(p.entry_coeffs(i, j)[0])
                          for j in range(3)] for i in range(3)])
    assert abs(vals[0] - res.min_eigenvalue) < 1e-9
    assert res.iterations > 0


def test_ascent_unique_feasible_point():
    # (x^2-y^2)^2 pins t = -1, the only PSD member, with eigenvalue 0
    p = pencil_of("(x^2-y^2)^2")
    res = max_min_eigenvalue(p, range(p.size))
    assert res.status == "boundary"
    assert abs(res.params[0] + 1.0) < 1e-4
    assert abs(res.min_eigenvalue) < 1e-6


def test_ascent_indefinite():
    # x^4-3x^2y^2+y^4 is negative at (1,1); no PSD member exists
    p = pencil_of("x^4-3*x^2*y^2+y^4")
    res = max_min_eigenvalue(p, range(p.size))
    assert res.status == "infeasible-like"
    assert res.min_eigenvalue < -0.2


def test_dimension_zero_is_direct():
    p = pencil_of("x^2+y^2")
    res = max_min_eigenvalue(p, range(p.size))
    assert res.params == [] and res.iterations == 0
    assert abs(res.min_eigenvalue - 1.0) < 1e-12
    assert res.status == "positive-definite"


def test_field_pencil_rejected():
    K = field_from((-2, 0, 0, 1))
    b = monomial_basis(("x",), 1)
    p = GramPencil(b, [[K.one()]], [], field=K)
    with pytest.raises(ValueError):
        max_min_eigenvalue(p, [0])


def test_subset_restriction():
    # restricted to the corner 2x2 block, the indefinite middle never enters
    p = pencil_of("x^4-3*x^2*y^2+y^4")
    res = max_min_eigenvalue(p, [0, 2])
    assert res.status == "positive-definite"


def test_status_bands_scale():
    cfg = SdpConfig()
    p = pencil_of("(x^2-y^2)^2")
    res = max_min_eigenvalue(p, range(p.size), cfg)
    assert isinstance(res, SdpResult)
    # boundary band is relative to the spectral scale
    assert res.min_eigenvalue >= -cfg.boundary_tol * 4.0
