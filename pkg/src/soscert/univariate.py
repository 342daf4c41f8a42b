"""Dense univariate polynomial helpers over Fraction.

Polynomials are lists of Fractions in ascending power order with no
trailing zeros.  These routines back the number-field layer: Sturm
sequences for real-root counting, bisection isolation, and exact sign
evaluation of one polynomial at a root of another.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as int_gcd
from typing import Iterable

Poly = list[Fraction]


def normalize(coeffs: Iterable[Fraction | int]) -> Poly:
    p = [Fraction(c) for c in coeffs]
    while p and p[-1] == 0:
        p.pop()
    return p


def degree(p: Poly) -> int:
    return len(p) - 1


def add(a: Poly, b: Poly) -> Poly:
    n = max(len(a), len(b))
    out = [Fraction(0)] * n
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    return normalize(out)


def neg(a: Poly) -> Poly:
    return [-c for c in a]


def sub(a: Poly, b: Poly) -> Poly:
    return add(a, neg(b))


def mul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return normalize(out)


def scale(a: Poly, s: Fraction) -> Poly:
    if not s:
        return []
    return [c * s for c in a]


def divmod_poly(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    r = list(a)
    lb = b[-1]
    while len(r) >= len(b):
        shift = len(r) - len(b)
        factor = r[-1] / lb
        q[shift] = factor
        for i, c in enumerate(b):
            r[shift + i] -= factor * c
        while r and r[-1] == 0:
            r.pop()
    return normalize(q), r


def rem(a: Poly, b: Poly) -> Poly:
    return divmod_poly(a, b)[1]


def gcd_poly(a: Poly, b: Poly) -> Poly:
    while b:
        a, b = b, rem(a, b)
    if a:
        a = scale(a, 1 / a[-1])
    return a


def derivative(a: Poly) -> Poly:
    return normalize([c * i for i, c in enumerate(a)][1:])


def eval_at(a: Poly, x: Fraction) -> Fraction:
    total = Fraction(0)
    for c in reversed(a):
        total = total * x + c
    return total


def primitive_int(a: Poly) -> Poly:
    """Scale by a positive rational to integer coefficients with content 1."""
    if not a:
        return []
    denom_lcm = 1
    for c in a:
        denom_lcm = denom_lcm * c.denominator // int_gcd(denom_lcm, c.denominator)
    ints = [int(c * denom_lcm) for c in a]
    g = 0
    for v in ints:
        g = int_gcd(g, abs(v))
    return [Fraction(v, g) for v in ints]


def sturm_chain(p: Poly) -> list[Poly]:
    """Sturm sequence with primitive scaling (positive factors only)."""
    chain = [primitive_int(p)]
    d = derivative(p)
    if d:
        chain.append(primitive_int(d))
    while len(chain[-1]) > 1:
        r = rem(chain[-2], chain[-1])
        if not r:
            break
        chain.append(primitive_int(neg(r)))
    return chain


def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


def _sign_at(p: Poly, x: Fraction | None, at_plus_inf: bool | None = None) -> int:
    """Sign at x, or at +/-infinity when at_plus_inf is set."""
    if not p:
        return 0
    if at_plus_inf is None:
        assert x is not None
        return _sign(eval_at(p, x))
    lead = _sign(p[-1])
    if at_plus_inf:
        return lead
    return lead if degree(p) % 2 == 0 else -lead


def _variations(signs: list[int]) -> int:
    signs = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a * b < 0)


def count_real_roots(p: Poly, lo: Fraction | None = None,
                     hi: Fraction | None = None) -> int:
    """Distinct real roots of p in (lo, hi]; None means the infinite end."""
    if not p:
        raise ValueError("zero polynomial")
    if len(p) == 1:
        return 0
    chain = sturm_chain(p)
    at_lo = [_sign_at(q, lo, None if lo is not None else False) for q in chain]
    at_hi = [_sign_at(q, hi, None if hi is not None else True) for q in chain]
    return _variations(at_lo) - _variations(at_hi)


def root_bound(p: Poly) -> Fraction:
    """Cauchy bound: every real root lies strictly inside (-B, B)."""
    lead = abs(p[-1])
    return 1 + max((abs(c) / lead for c in p[:-1]), default=Fraction(0))


def isolate_real_roots(p: Poly) -> list[tuple[Fraction, Fraction]]:
    """Disjoint intervals (lo, hi], each holding exactly one real root of p.

    Interval endpoints are never roots, so signs at endpoints are reliable.
    """
    if len(p) <= 1:
        return []
    bound = root_bound(p)
    total = count_real_roots(p, -bound, bound)
    out: list[tuple[Fraction, Fraction]] = []
    stack = [(-bound, bound, total)]
    while stack:
        lo, hi, n = stack.pop()
        if n == 0:
            continue
        if n == 1:
            out.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        while eval_at(p, mid) == 0:
            mid += (hi - lo) / 64
        left = count_real_roots(p, lo, mid)
        stack.append((lo, mid, left))
        stack.append((mid, hi, n - left))
    out.sort()
    return out


def refine_interval(p: Poly, interval: tuple[Fraction, Fraction],
                    steps: int = 1) -> tuple[Fraction, Fraction]:
    """Halve an isolating interval of p, keeping the root inside."""
    lo, hi = interval
    for _ in range(steps):
        mid = (lo + hi) / 2
        while eval_at(p, mid) == 0:
            mid += (hi - lo) / 64
        if count_real_roots(p, lo, mid) == 1:
            hi = mid
        else:
            lo = mid
    return lo, hi


def sign_at_root(q: Poly, p: Poly, interval: tuple[Fraction, Fraction]) -> int:
    """Exact sign of q at the single root of p inside interval.

    Detects q(root) == 0 through gcd(p, q); otherwise shrinks the interval
    until q is root-free on it and reads the sign at the midpoint.
    """
    if not q:
        return 0
    g = gcd_poly(p, q)
    if len(g) > 1 and count_real_roots(g, interval[0], interval[1]) >= 1:
        return 0
    lo, hi = interval
    while count_real_roots(q, lo, hi) > 0:
        lo, hi = refine_interval(p, (lo, hi))
    s = _sign(eval_at(q, (lo + hi) / 2))
    assert s != 0
    return s


def approx_root(p: Poly, interval: tuple[Fraction, Fraction],
                width: Fraction = Fraction(1, 10**12)) -> Fraction:
    """Rational approximation of the isolated root to within width."""
    lo, hi = interval
    while hi - lo > width:
        lo, hi = refine_interval(p, (lo, hi))
    return (lo + hi) / 2
