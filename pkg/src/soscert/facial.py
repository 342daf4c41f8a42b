"""Facial reduction: kernel constraints from zeros, ghosts, and forcing.

Every constraint here is a vector u known to satisfy Q·u = 0 for all
positive semidefinite members Q of the pencil (for rational targets, all
rational PSD members).  Intersecting the pencil with those equations
shrinks its dimension and generic rank while keeping every PSD member,
until the matrices on the reduced face become strictly feasible or the
face collapses to a single (possibly non-PSD) matrix.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Any, Sequence

from .gram import GramPencil, build_pencil, generic_rank
from .linalg import solve_affine
from .multipoly import MultiPoly
from .numberfield import AlgebraicNumber, NumberField

PLAIN = "plain-zero"
COEFFWISE = "conjugate-coefficientwise"
TRACE = "trace"
DIAG_GHOST = "diag-ghost"
MINOR_GHOST = "minor-ghost"


@dataclass(frozen=True)
class ZeroPoint:
    """An exactly verified zero of the form, possibly algebraic."""

    coords: tuple[Any, ...]
    field: NumberField | None = None
    label: str = ""
    realness: int = 1

    @classmethod
    def create(cls, f: MultiPoly, coords: Sequence[Any],
               field: NumberField | None = None, label: str = "") -> "ZeroPoint":
        coords = tuple(coords)
        if len(coords) != len(f.vars):
            raise ValueError("coordinate count does not match the form")
        value = f.eval(coords)
        if value:
            raise ValueError(f"point {label or coords} is not a zero of the form: f = {value}")
        realness = field.n_real_roots() if field is not None else 1
        if realness < 1:
            raise ValueError("defining polynomial has no real root")
        return cls(coords=coords, field=field, label=label, realness=realness)

    def is_rational(self) -> bool:
        return self.field is None or self.field.degree == 1


@dataclass(frozen=True)
class KernelConstraint:
    vector: tuple[Any, ...]
    origin: str
    field: NumberField | None = None

    def __post_init__(self):
        if not any(self.vector):
            raise ValueError("kernel constraint vector must be nonzero")


def _coords_of(value: Any, degree: int) -> list[Fraction]:
    if isinstance(value, AlgebraicNumber):
        return list(value.coords)
    return [Fraction(value)] + [Fraction(0)] * (degree - 1)


def kernel_from_zero(p: GramPencil, z: ZeroPoint,
                     mode: str = "plain") -> list[KernelConstraint]:
    """Constraints Q·u = 0 from a verified zero.

    plain: the single vector v(z), entries possibly algebraic.
    coefficientwise: one rational vector per power-basis coordinate of
    v(z); equivalent to imposing all algebraic conjugates at once, valid
    when the target Q is rational.
    """
    v = p.basis.vector_at(z.coords)
    if not any(v):
        return []
    if mode == "plain" or z.is_rational():
        vec = tuple(v)
        return [KernelConstraint(vec, PLAIN, field=None if z.is_rational() else z.field)]
    if mode != "coefficientwise":
        raise ValueError(f"unknown mode {mode!r}")
    deg = z.field.degree
    out = []
    for k in range(deg):
        u = tuple(_coords_of(vi, deg)[k] for vi in v)
        if any(u):
            out.append(KernelConstraint(u, COEFFWISE))
    return out


def trace_constraint(p: GramPencil, z: ZeroPoint) -> KernelConstraint | None:
    """The rational kernel vector Tr(v(z)); None when it is uninformative."""
    v = p.basis.vector_at(z.coords)
    if z.field is None:
        u = tuple(Fraction(vi) for vi in v)
    else:
        u = tuple(z.field.trace(vi) if isinstance(vi, AlgebraicNumber)
                  else Fraction(vi) * z.field.degree for vi in v)
    if not any(u):
        return None
    return KernelConstraint(u, TRACE)


def _entry_affine(p: GramPencil, i: int, j: int) -> tuple[Any, list[Any]]:
    return p.constant[i][j], [d[i][j] for d in p.directions]


def _affine_is_zero(const: Any, coeffs: list[Any]) -> bool:
    return not const and not any(coeffs)


def diag_ghosts(p: GramPencil) -> list[KernelConstraint]:
    """e_k for every diagonal entry identically zero over the parameters."""
    out = []
    for k in range(p.size):
        const, coeffs = _entry_affine(p, k, k)
        if _affine_is_zero(const, coeffs):
            e = [Fraction(0)] * p.size
            e[k] = Fraction(1)
            out.append(KernelConstraint(tuple(e), DIAG_GHOST))
    return out


def minor_ghosts(p: GramPencil, rng: random.Random | None = None) -> tuple[
        list[KernelConstraint], list[str]]:
    """Padded kernel vectors of identically singular 2x2 principal minors.

    Returns (constraints, warnings); pairs whose kernel direction depends
    on the parameters are skipped and reported in the warnings.  Pairs are
    screened by exact evaluation at random parameter values before the
    full quadratic identity check.
    """
    if rng is None:
        rng = random.Random(97)
    out: list[KernelConstraint] = []
    warnings: list[str] = []
    k = p.dim
    diag_zero = set()
    for i in range(p.size):
        const, coeffs = _entry_affine(p, i, i)
        if _affine_is_zero(const, coeffs):
            diag_zero.add(i)
    samples = [[Fraction(rng.randint(-100, 100)) for _ in range(k)] for _ in range(2)]

    def at(sample: list[Fraction], const: Any, coeffs: list[Any]) -> Any:
        return const + sum((c * t for c, t in zip(coeffs, sample) if c and t), Fraction(0))

    for i in range(p.size):
        a0, av = _entry_affine(p, i, i)
        for j in range(i + 1, p.size):
            if i in diag_zero and j in diag_zero:
                continue
            c0, cv = _entry_affine(p, j, j)
            b0, bv = _entry_affine(p, i, j)
            if any(at(s, a0, av) * at(s, c0, cv) - at(s, b0, bv) ** 2
                   for s in samples):
                continue
            if not _det_identically_zero(a0, av, b0, bv, c0, cv):
                continue
            constraint = _minor_kernel(p.size, i, j, a0, av, b0, bv, c0, cv)
            if constraint is None:
                warnings.append(f"2x2 minor ({i},{j}) is singular but its kernel "
                                "depends on the parameters; skipped")
            else:
                out.append(constraint)
    return out, warnings


def _det_identically_zero(a0, av, b0, bv, c0, cv) -> bool:
    """a(t)c(t) - b(t)^2 = 0 for all t, checked coefficientwise."""
    if a0 * c0 - b0 * b0:
        return False
    k = len(av)
    for l in range(k):
        if a0 * cv[l] + c0 * av[l] - 2 * b0 * bv[l]:
            return False
    for l in range(k):
        if not (av[l] or cv[l] or bv[l]):
            continue
        if av[l] * cv[l] - bv[l] * bv[l]:
            return False
        for s in range(l + 1, k):
            if av[l] * cv[s] + av[s] * cv[l] - 2 * bv[l] * bv[s]:
                return False
    return True


def _minor_kernel(m: int, i: int, j: int, a0, av, b0, bv, c0, cv) -> KernelConstraint | None:
    """Parameter-free kernel direction of [[a,b],[b,c]], zero-padded."""
    zero = Fraction(0)
    a_zero = _affine_is_zero(a0, av)
    c_zero = _affine_is_zero(c0, cv)
    if a_zero and c_zero:
        return None  # both covered by diagonal ghosts
    vec = [zero] * m
    if a_zero:
        vec[i] = Fraction(1)
        return KernelConstraint(tuple(vec), MINOR_GHOST)
    if c_zero:
        vec[j] = Fraction(1)
        return KernelConstraint(tuple(vec), MINOR_GHOST)
    # b = mu*a exactly, else the kernel direction moves with t
    a_list = [a0] + list(av)
    b_list = [b0] + list(bv)
    pivot = next(idx for idx, v in enumerate(a_list) if v)
    mu = b_list[pivot] / a_list[pivot]
    if any(bl - mu * al for al, bl in zip(a_list, b_list)):
        return None
    vec[i] = -mu
    vec[j] = Fraction(1) if not isinstance(mu, AlgebraicNumber) else mu.field.one()
    return KernelConstraint(tuple(vec), MINOR_GHOST)


def force_rational(p: GramPencil) -> list[tuple[list[Fraction], Fraction]]:
    """Equations zeroing every positive power of the generator in the entries.

    Heuristic: the equations are sufficient for rational entries but not
    necessary, so solutions can be lost.  Each equation is (coeffs, rhs)
    over the parameters.
    """
    if p.field is None:
        return []
    deg = p.field.degree
    equations: list[tuple[list[Fraction], Fraction]] = []
    for i in range(p.size):
        for j in range(i, p.size):
            const, coeffs = _entry_affine(p, i, j)
            cc = _coords_of(const, deg)
            dd = [_coords_of(c, deg) for c in coeffs]
            for power in range(1, deg):
                row = [d[power] for d in dd]
                rhs = -cc[power]
                if any(row) or rhs:
                    equations.append((row, rhs))
    return equations


def apply_parameter_equations(p: GramPencil, equations: list[tuple[list[Any], Any]],
                              field: NumberField | None = None) -> GramPencil | None:
    """Intersect with linear equations on the parameters; None if empty."""
    if not equations:
        return p
    a = [row for row, _ in equations]
    b = [rhs for _, rhs in equations]
    solution = solve_affine(a, b)
    if solution is None:
        return None
    particular, basis_vecs = solution
    constant = p.eval(particular)
    nonzero = [[(r, s, dl[r][s]) for r in range(p.size) for s in range(r, p.size)
                if dl[r][s]] for dl in p.directions]
    directions = []
    for vec in basis_vecs:
        d = [[Fraction(0)] * p.size for _ in range(p.size)]
        for l, w in enumerate(vec):
            if not w:
                continue
            for r, s, val in nonzero[l]:
                d[r][s] = d[r][s] + w * val
        for r in range(p.size):
            for s in range(r + 1, p.size):
                d[s][r] = d[r][s]
        directions.append(d)
    new_field = field if field is not None else p.field
    out = GramPencil(p.basis, constant, directions, field=new_field)
    return _demote_if_rational(out)


def _demote_if_rational(p: GramPencil) -> GramPencil:
    if p.field is None:
        return p

    def as_rational(v: Any) -> Any:
        if isinstance(v, AlgebraicNumber):
            return v.rational_value() if v.is_rational() else None
        return Fraction(v)

    constant = []
    for row in p.constant:
        new_row = [as_rational(v) for v in row]
        if any(v is None for v in new_row):
            return p
        constant.append(new_row)
    directions = []
    for d in p.directions:
        nd = []
        for row in d:
            new_row = [as_rational(v) for v in row]
            if any(v is None for v in new_row):
                return p
            nd.append(new_row)
        directions.append(nd)
    return GramPencil(p.basis, constant, directions, field=None)


def apply_constraints(p: GramPencil, constraints: Sequence[KernelConstraint]) -> GramPencil | None:
    """Intersect the pencil with {Q : Q·u = 0} for every constraint u.

    Exact linear solve over the parameters; the result is re-parametrized
    with the surviving degrees of freedom.  Returns None when no member
    of the pencil satisfies the constraints (the empty pencil).
    """
    if not constraints:
        return p
    field = p.field
    for c in constraints:
        if c.field is not None:
            if field is not None and field != c.field:
                raise ValueError("cannot mix constraints over different number fields")
            field = c.field
    equations: list[tuple[list[Any], Any]] = []
    for c in constraints:
        if len(c.vector) != p.size:
            raise ValueError("constraint length does not match the pencil")
        for i in range(p.size):
            row = [sum((d[i][j] * uj for j, uj in enumerate(c.vector) if uj and d[i][j]),
                       Fraction(0)) for d in p.directions]
            rhs = -sum((p.constant[i][j] * uj for j, uj in enumerate(c.vector)
                        if uj and p.constant[i][j]), Fraction(0))
            if any(row) or rhs:
                equations.append((row, rhs))
    if not equations:
        return p
    return apply_parameter_equations(p, equations, field=field)


# -- the reduction pipeline ---------------------------------------------------


@dataclass
class ReduceOptions:
    trace_equations: bool = True
    force_rational: bool = False
    mode: str | None = None  # force a kernel_from_zero mode for every zero
    ghost_minors: bool = True
    rank_draws: int = 3


@dataclass
class ReductionStep:
    description: str
    dim: int
    rank: int


@dataclass
class ReductionLog:
    steps: list[ReductionStep] = dc_field(default_factory=list)
    warnings: list[str] = dc_field(default_factory=list)

    def record(self, description: str, p: GramPencil, draws: int = 3) -> None:
        self.steps.append(ReductionStep(description, p.dim, generic_rank(p, draws=draws)))


def _zero_batch(p: GramPencil, zeros: Sequence[ZeroPoint],
                options: ReduceOptions) -> list[KernelConstraint]:
    out: list[KernelConstraint] = []
    for z in zeros:
        if options.mode is not None:
            out.extend(kernel_from_zero(p, z, options.mode))
        elif options.trace_equations:
            c = trace_constraint(p, z)
            if c is not None:
                out.append(c)
        else:
            out.extend(kernel_from_zero(p, z, "plain"))
    return out


def _identically_annihilated(p: GramPencil, u: Sequence[Any]) -> bool:
    """True when Q·u = 0 already holds for every member of the pencil."""
    for i in range(p.size):
        if sum((p.constant[i][j] * uj for j, uj in enumerate(u)
                if uj and p.constant[i][j]), Fraction(0)):
            return False
        for d in p.directions:
            if sum((d[i][j] * uj for j, uj in enumerate(u)
                    if uj and d[i][j]), Fraction(0)):
                return False
    return True


def _ghost_fixpoint(p: GramPencil, log: ReductionLog,
                    options: ReduceOptions) -> GramPencil | None:
    while True:
        if p.dim == 0:
            # a single matrix: nothing left to reduce, judge it as is
            return p
        cs = [c for c in diag_ghosts(p)
              if not _identically_annihilated(p, c.vector)]
        kind = "diagonal ghost"
        if not cs and options.ghost_minors:
            raw, warnings = minor_ghosts(p)
            log.warnings.extend(warnings)
            cs = [c for c in raw if not _identically_annihilated(p, c.vector)]
            kind = "2x2 minor ghost"
        if not cs:
            return p
        nxt = apply_constraints(p, cs)
        if nxt is None:
            return None
        p = nxt
        log.record(f"{kind} equations ({len(cs)})", p, options.rank_draws)


def reduce(f: MultiPoly, zeros: Sequence[ZeroPoint],
           options: ReduceOptions | None = None) -> tuple[GramPencil | None, ReductionLog]:
    """Algorithm-style reduction: zero constraints, ghosts, optional forcing."""
    options = options or ReduceOptions()
    log = ReductionLog()
    p = build_pencil(f)
    log.record("initial pencil", p, options.rank_draws)
    cs = _zero_batch(p, zeros, options)
    if cs:
        nxt = apply_constraints(p, cs)
        if nxt is None:
            log.steps.append(ReductionStep("zero constraints: empty pencil", -1, 0))
            return None, log
        p = nxt
        log.record(f"zero constraints ({len(cs)})", p, options.rank_draws)
    p = _ghost_fixpoint(p, log, options)
    if p is None:
        log.steps.append(ReductionStep("ghost equations: empty pencil", -1, 0))
        return None, log
    if options.force_rational:
        algebraic = [z for z in zeros if not z.is_rational()]
        plain = []
        for z in algebraic:
            plain.extend(kernel_from_zero(p, z, "plain"))
        if plain:
            nxt = apply_constraints(p, plain)
            if nxt is None:
                log.steps.append(ReductionStep("plain algebraic constraints: empty pencil", -1, 0))
                return None, log
            p = nxt
            log.record(f"plain algebraic zero constraints ({len(plain)})", p,
                       options.rank_draws)
            p = _ghost_fixpoint(p, log, options)
            if p is None:
                log.steps.append(ReductionStep("ghost equations: empty pencil", -1, 0))
                return None, log
        if p.field is not None:
            eqs = force_rational(p)
            nxt = apply_parameter_equations(p, eqs)
            if nxt is None:
                log.steps.append(ReductionStep("rationality forcing: empty pencil", -1, 0))
                return None, log
            p = nxt
            log.record(f"rationality forcing ({len(eqs)} equations)", p, options.rank_draws)
            p = _ghost_fixpoint(p, log, options)
            if p is None:
                log.steps.append(ReductionStep("ghost equations: empty pencil", -1, 0))
                return None, log
    return p, log


def search_rational_zeros(f: MultiPoly, bound: int = 2) -> list[ZeroPoint]:
    """Small-height rational projective zeros of {f = 0, grad f = 0}.

    Convenience helper, off by default in the pipeline; the grid grows
    quickly with the bound, keep it small.
    """
    n = len(f.vars)
    grads = [f.derivative(v) for v in f.vars]
    values = [Fraction(0)]
    for q in range(1, bound + 1):
        for num in range(1, bound + 1):
            values.extend((Fraction(num, q), Fraction(-num, q)))
    values = sorted(set(values))
    found: list[ZeroPoint] = []
    seen: set[tuple] = set()

    def rec(prefix: list[Fraction]) -> None:
        if len(prefix) == n:
            point = tuple(prefix)
            if point in seen:
                return
            if f.eval(point) == 0 and all(g.eval(point) == 0 for g in grads):
                seen.add(point)
                found.append(ZeroPoint(coords=point, field=None,
                                       label=f"search {point}"))
            return
        for v in values:
            rec(prefix + [v])

    # first nonzero coordinate normalized to 1: one patch per leading index
    for lead in range(n):
        prefix = [Fraction(0)] * lead + [Fraction(1)]
        rec(prefix)
    return found
