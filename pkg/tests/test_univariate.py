"""Univariate exact arithmetic and Sturm-sequence root counting."""

from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from soscert import univariate as uv

F = Fraction


def test_normalize_strips_trailing_zeros():
    assert uv.normalize([1, 2, 0]) == [F(1), F(2)]
    assert uv.normalize([0]) == []
    assert uv.degree(uv.normalize([3])) == 0
    assert uv.degree([]) == -1


def test_divmod_roundtrip():
    a = uv.normalize([1, 0, -3, 2])
    b = uv.normalize([-1, 1])
    q, r = uv.divmod_poly(a, b)
    assert uv.add(uv.mul(q, b), r) == a
    assert uv.degree(r) < uv.degree(b)


def test_gcd_poly_monic():
    a = uv.mul(uv.normalize([-1, 1]), uv.normalize([-2, 1]))
    b = uv.mul(uv.normalize([-1, 1]), uv.normalize([-3, 1]))
    assert uv.gcd_poly(a, b) == [F(-1), F(1)]


def test_eval_and_derivative():
    p = uv.normalize([1, -2, 1])  # (Z-1)^2
    assert uv.eval_at(p, F(1)) == 0
    assert uv.eval_at(p, F(3)) == 4
    assert uv.derivative(p) == [F(-2), F(2)]


def test_primitive_int():
    p = uv.normalize([F(2, 3), F(4, 3)])
    prim = uv.primitive_int(p)
    assert prim == [F(1), F(2)]


def test_count_real_roots_known():
    assert uv.count_real_roots(uv.normalize([-2, 0, 0, 1])) == 1
    two_quads = uv.mul(uv.normalize([-2, 0, 1]), uv.normalize([-3, 0, 1]))
    assert uv.count_real_roots(two_quads) == 4
    assert uv.count_real_roots(uv.normalize([1, 0, 1])) == 0
    quartic = uv.normalize([F(-8, 50), F(23, 50), F(-1, 50), F(28, 50), F(1)])
    assert uv.count_real_roots(quartic) == 2


def test_count_in_interval():
    p = uv.mul(uv.normalize([-1, 1]), uv.normalize([-4, 1]))
    assert uv.count_real_roots(p, F(0), F(2)) == 1
    assert uv.count_real_roots(p, F(0), F(5)) == 2


def test_isolation_intervals():
    p = uv.normalize([F(-8, 50), F(23, 50), F(-1, 50), F(28, 50), F(1)])
    ivs = uv.isolate_real_roots(p)
    assert len(ivs) == 2
    bound = uv.root_bound(p)
    for lo, hi in ivs:
        assert lo < hi
        assert uv.count_real_roots(p, lo, hi) == 1
        assert -bound <= lo and hi <= bound
    # intervals are disjoint and ordered
    assert ivs[0][1] <= ivs[1][0]


def test_refine_and_approx():
    p = uv.normalize([-2, 0, 1])
    iv = [i for i in uv.isolate_real_roots(p) if i[1] > 0][0]
    width = iv[1] - iv[0]
    narrowed = uv.refine_interval(p, iv, steps=8)
    assert narrowed[1] - narrowed[0] <= width / 256
    assert uv.count_real_roots(p, narrowed[0], narrowed[1]) == 1
    r = uv.approx_root(p, iv)
    assert abs(r - 2 ** 0.5) < 1e-6


def test_sign_at_root():
    p = uv.normalize([-2, 0, 1])
    pos = [i for i in uv.isolate_real_roots(p) if i[1] > 0][0]
    neg = [i for i in uv.isolate_real_roots(p) if i[0] < 0][0]
    ident = uv.normalize([0, 1])
    assert uv.sign_at_root(ident, p, pos) == 1
    assert uv.sign_at_root(ident, p, neg) == -1
    assert uv.sign_at_root(p, p, pos) == 0
    # q(sqrt 2) with q = Z^2 - 1 is positive
    assert uv.sign_at_root(uv.normalize([-1, 0, 1]), p, pos) == 1


@given(st.lists(st.integers(-8, 8), min_size=1, max_size=5, unique=True))
def test_root_count_matches_linear_factors(roots):
    p = (F(1),)
    for r in roots:
        p = uv.mul(p, uv.normalize([-r, 1]))
    assert uv.count_real_roots(p) == len(roots)
    ivs = uv.isolate_real_roots(p)
    assert len(ivs) == len(roots)
    for r in roots:
        assert any(lo <= r <= hi for lo, hi in ivs)


@given(st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=4),
                min_size=1, max_size=4),
       st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=4),
                min_size=2, max_size=4))
def test_divmod_property(acs, bcs):
    a = uv.normalize(acs)
    b = uv.normalize(bcs)
    if uv.degree(b) < 0:
        return
    q, r = uv.divmod_poly(a, b)
    assert uv.add(uv.mul(q, b), r) == a
    assert uv.degree(r) < uv.degree(b)
