"""Numeric subproblem: maximize the minimum eigenvalue over the pencil.

Everything here is floating point and advisory.  A positive-definite
verdict is only ever trusted after the exact LDL check on the rounded
matrix; see the certificate module.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .gram import GramPencil
from .linalg import mat_rank


@dataclass
class SdpConfig:
    eig_tol: float = 1e-9
    boundary_tol: float = 1e-6  # relative to the spectral scale at the end
    max_iters: int = 2000
    initial_step: float = 1.0
    min_step: float = 1e-13
    restarts: int = 5
    seed: int = 20090
    tie_gap: float = 1e-7


@dataclass
class SdpResult:
    params: list[float]
    min_eigenvalue: float
    status: str  # positive-definite | boundary | infeasible-like
    iterations: int = 0


def full_rank_principal_submatrix(p: GramPencil, s: int,
                                  rng: random.Random | None = None,
                                  draws: int = 8) -> list[int]:
    """Greedy index set of size s whose principal submatrix is nonsingular.

    Uses a random exact specialization; the minor test is exact rank, so a
    returned set is certified nonsingular at that specialization.
    """
    if rng is None:
        rng = random.Random(411)
    for _ in range(draws):
        sample = [Fraction(rng.randint(-10**4, 10**4)) for _ in range(p.dim)]
        m = p.eval(sample)
        chosen: list[int] = []
        for k in range(p.size):
            trial = chosen + [k]
            sub = [[m[i][j] for j in trial] for i in trial]
            if mat_rank(sub) == len(trial):
                chosen.append(k)
            if len(chosen) == s:
                return chosen
    raise ValueError(f"no principal submatrix of rank {s} found in {draws} draws")


def sym_eigen(m: Sequence[Sequence[float]], tol: float = 1e-12,
              max_sweeps: int = 64) -> tuple[list[float], list[list[float]]]:
    """Cyclic Jacobi. Returns (eigenvalues ascending, eigenvectors).

    eigenvectors[k] is the unit eigenvector for eigenvalues[k].
    """
    n = len(m)
    a = [[float(m[i][j]) for j in range(n)] for i in range(n)]
    v = [[1.0 if i == j else 0.0 for j in range(n)] for i in range(n)]
    if n == 1:
        return [a[0][0]], [[1.0]]
    scale = max(1.0, max(abs(a[i][j]) for i in range(n) for j in range(n)))
    for _ in range(max_sweeps):
        off = math.sqrt(sum(a[i][j] ** 2 for i in range(n) for j in range(i + 1, n)))
        if off <= tol * scale:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p][q]
                if abs(apq) <= 1e-300:
                    continue
                theta = (a[q][q] - a[p][p]) / (2.0 * apq)
                t = math.copysign(1.0, theta) / (abs(theta) + math.hypot(1.0, theta))
                c = 1.0 / math.hypot(1.0, t)
                s = t * c
                for k in range(n):
                    akp, akq = a[k][p], a[k][q]
                    a[k][p] = c * akp - s * akq
                    a[k][q] = s * akp + c * akq
                for k in range(n):
                    apk, aqk = a[p][k], a[q][k]
                    a[p][k] = c * apk - s * aqk
                    a[q][k] = s * apk + c * aqk
                for k in range(n):
                    vkp, vkq = v[k][p], v[k][q]
                    v[k][p] = c * vkp - s * vkq
                    v[k][q] = s * vkp + c * vkq
    else:
        raise ArithmeticError("Jacobi iteration did not converge")
    order = sorted(range(n), key=lambda i: a[i][i])
    values = [a[i][i] for i in order]
    vectors = [[v[r][i] for r in range(n)] for i in order]
    return values, vectors


def _float_subpencil(p: GramPencil, omega: Sequence[int]):
    idx = list(omega)
    const = [[float(p.constant[i][j]) for j in idx] for i in idx]
    dirs = [[[float(d[i][j]) for j in idx] for i in idx] for d in p.directions]
    return const, dirs


def _eval_sub(const, dirs, t):
    n = len(const)
    m = [row[:] for row in const]
    for w, d in zip(t, dirs):
        if w:
            for i in range(n):
                di = d[i]
                mi = m[i]
                for j in range(n):
                    mi[j] += w * di[j]
    return m


def _softmin(vals: list[float], beta: float) -> float:
    lo = vals[0]
    return lo - math.log(sum(math.exp(-beta * (v - lo)) for v in vals)) / beta


def _softmin_grad(vals, vecs, dirs, beta: float) -> list[float]:
    lo = vals[0]
    weights = [math.exp(-beta * (v - lo)) for v in vals]
    total = sum(weights)
    grad = [0.0] * len(dirs)
    for w, u in zip(weights, vecs):
        if w < 1e-16 * total:
            continue
        for i, d in enumerate(dirs):
            s = 0.0
            for r, ur in enumerate(u):
                if ur:
                    dr = d[r]
                    s += ur * sum(dr[c] * uc for c, uc in enumerate(u))
            grad[i] += (w / total) * s
    return grad


def _lbfgs_ascent(t, value_grad, iters: int, memory: int = 8):
    """Maximize a smooth function by L-BFGS with Armijo backtracking.

    value_grad(t) -> (value, gradient); returns (t, value, evaluations).
    """
    n = len(t)
    cur, g = value_grad(t)
    evals = 1
    s_hist: list[list[float]] = []
    y_hist: list[list[float]] = []
    rho: list[float] = []
    for _ in range(iters):
        gnorm2 = sum(x * x for x in g)
        if gnorm2 < 1e-24:
            break
        q = list(g)
        alphas = []
        for s, y, r in zip(reversed(s_hist), reversed(y_hist), reversed(rho)):
            a = r * sum(si * qi for si, qi in zip(s, q))
            alphas.append(a)
            q = [qi - a * yi for qi, yi in zip(q, y)]
        if y_hist:
            yy = sum(x * x for x in y_hist[-1])
            sy = 1.0 / rho[-1]
            gamma = sy / yy if yy > 0 else 1.0
            q = [gamma * x for x in q]
        for (s, y, r), a in zip(zip(s_hist, y_hist, rho), reversed(alphas)):
            b = r * sum(yi * qi for yi, qi in zip(y, q))
            q = [qi + (a - b) * si for qi, si in zip(q, s)]
        d = q  # ascent direction
        slope = sum(di * gi for di, gi in zip(d, g))
        if slope <= 0:
            d = list(g)
            slope = gnorm2
        step = 1.0
        accepted = False
        for _bt in range(40):
            cand = [ti + step * di for ti, di in zip(t, d)]
            val, gc = value_grad(cand)
            evals += 1
            if val > cur + 1e-4 * step * slope:
                s = [a - b for a, b in zip(cand, t)]
                y = [a - b for a, b in zip(gc, g)]
                sy = sum(a * b for a, b in zip(s, y))
                if sy < -1e-12 * math.sqrt(sum(a * a for a in s))\
                        * math.sqrt(sum(a * a for a in y)):
                    s_hist.append(s)
                    y_hist.append([-x for x in y])
                    rho.append(-1.0 / sy)
                    if len(s_hist) > memory:
                        s_hist.pop(0)
                        y_hist.pop(0)
                        rho.pop(0)
                t, cur, g = cand, val, gc
                accepted = True
                break
            step *= 0.5
        if not accepted:
            break
    return t, cur, evals


def _equilibrate(const, dirs, passes: int = 3) -> list[float]:
    """Ruiz-style diagonal congruence scaling for the stacked pencil.

    Congruence S W S preserves definiteness, so the scaled ascent finds
    positive definite points of the original problem.
    """
    m = len(const)
    d = [1.0] * m
    mats = [const] + list(dirs)
    for _ in range(passes):
        for i in range(m):
            r = max(abs(mat[i][j]) * d[i] * d[j]
                    for mat in mats for j in range(m))
            if r > 1e-300:
                d[i] /= math.sqrt(r)
    return d


def max_min_eigenvalue(p: GramPencil, omega: Sequence[int],
                       cfg: SdpConfig | None = None) -> SdpResult:
    """Ascent on the concave map t -> lambda_min(W_O(t)).

    Plain supergradient steps jam at points where eigenvalues tie, so the
    ascent maximizes a softmin surrogate -log(sum exp(-beta l_j))/beta,
    whose gradient is the softmax-weighted average of the eigenvector
    supergradients u^t D_i u (the averaging near ties), over an
    increasing schedule of beta, then polishes with plain supergradient
    steps and step halving.  Internally the pencil is equilibrated by a
    diagonal congruence and the directions are normalized; the reported
    minimum eigenvalue is for the original matrix at the returned point.
    """
    cfg = cfg or SdpConfig()
    if p.field is not None:
        raise ValueError("numeric stage requires a rational pencil")
    const0, dirs0 = _float_subpencil(p, omega)
    k = p.dim

    if k == 0:
        vals, _ = sym_eigen([row[:] for row in const0])
        return SdpResult([], vals[0], _status(vals[0], cfg), 0)

    d = _equilibrate(const0, dirs0)
    const = [[const0[i][j] * d[i] * d[j] for j in range(len(d))]
             for i in range(len(d))]
    dirs_scaled = [[[dd[i][j] * d[i] * d[j] for j in range(len(d))]
                    for i in range(len(d))] for dd in dirs0]
    fnorms = [max(math.sqrt(sum(x * x for row in dd for x in row)), 1e-300)
              for dd in dirs_scaled]
    dirs = [[[x / fn for x in row] for row in dd]
            for dd, fn in zip(dirs_scaled, fnorms)]

    def lam(t):
        return sym_eigen(_eval_sub(const, dirs, t))

    rng = random.Random(cfg.seed)
    best_t: list[float] | None = None
    best_val = -math.inf
    total_iters = 0
    stage_budget = max(20, cfg.max_iters // 8)
    for restart in range(cfg.restarts):
        t = ([0.0] * k if restart == 0
             else [rng.gauss(0.0, 1.0 + restart) for _ in range(k)])
        vals0, _ = lam(t)
        # beta keeps the surrogate within log(m)/beta of lambda_min.
        # Anchoring it to the spread at the starting point (rather than
        # re-reading the spread each stage) bounds how far the smoothed
        # ascent can trade lambda_min for eigenvalue separation.
        spread0 = max(vals0[-1] - vals0[0], 1e-9)
        rbest_t, rbest_val = list(t), vals0[0]
        for stage in range(11):
            vals, vecs = lam(t)
            if vals[0] >= rbest_val:
                rbest_t, rbest_val = list(t), vals[0]
            else:
                # a smoothed stage wandered off; resume from the best point
                t = list(rbest_t)
                vals, vecs = lam(t)
            beta = 4.0 * 5.0 ** stage / spread0

            def value_grad(tt, beta=beta):
                v, u = lam(tt)
                return _softmin(v, beta), _softmin_grad(v, u, dirs, beta)

            t, _, evals = _lbfgs_ascent(list(t), value_grad, stage_budget)
            total_iters += evals
        vals, _ = lam(t)
        if vals[0] < rbest_val:
            t = list(rbest_t)
        t, vals, polish_iters = _polish(t, lam, dirs, cfg)
        total_iters += polish_iters
        if vals[0] > best_val:
            best_val, best_t = vals[0], t
        # the equilibrated pencil has unit scale, so a fixed band suffices
        # to recognize that the optimum has been reached twice
        if restart >= 1 and best_val > -1e-7:
            break
    params = [ti / fn for ti, fn in zip(best_t or [0.0] * k, fnorms)]
    final, _ = sym_eigen(_eval_sub(const0, dirs0, params))
    scale = max(abs(final[0]), abs(final[-1]))
    return SdpResult(params, final[0], _status(final[0], cfg, scale),
                     total_iters)


def _eig_grad(u, dirs) -> list[float]:
    g = [0.0] * len(dirs)
    for i, d in enumerate(dirs):
        s = 0.0
        for r, ur in enumerate(u):
            if ur:
                dr = d[r]
                s += ur * sum(dr[c] * uc for c, uc in enumerate(u))
        g[i] = s
    return g


def _direction_candidates(vals, vecs, dirs, tie_gap: float) -> list[list[float]]:
    """Ascent direction candidates at a possibly tied minimum eigenvalue.

    The supergradient of a single eigenvector zigzags when eigenvalues
    cross, so averages over growing tied sets and the minimum-norm convex
    combination of the first pair are offered as well; the line search
    takes the first that improves.
    """
    window = max(tie_gap, abs(vals[0]) * 1.5)
    r_max = 1
    while r_max < len(vals) and vals[r_max] <= vals[0] + window and r_max < 4:
        r_max += 1
    grads = [_eig_grad(vecs[r], dirs) for r in range(r_max)]
    cands = []
    for r in range(r_max, 0, -1):
        cands.append([sum(g[i] for g in grads[:r]) / r
                      for i in range(len(dirs))])
    if r_max >= 2:
        g1, g2 = grads[0], grads[1]
        diff = [a - b for a, b in zip(g2, g1)]
        dd = sum(x * x for x in diff)
        if dd > 1e-30:
            theta = max(0.0, min(1.0, sum(b * x for b, x in zip(g2, diff)) / dd))
            cands.insert(0, [theta * a + (1 - theta) * b
                             for a, b in zip(g1, g2)])
    return cands


def _polish(t, lam, dirs, cfg: SdpConfig):
    """Plain supergradient steps on lambda_min itself with step halving.

    Runs after the smoothed stages to strip the residual smoothing bias.
    """
    vals, vecs = lam(t)
    cur = vals[0]
    step = 1e-3
    iters = 0
    budget = min(cfg.max_iters, 300)
    while iters < budget and step > cfg.min_step:
        iters += 1
        improved = False
        for grad in _direction_candidates(vals, vecs, dirs, cfg.tie_gap):
            norm = math.sqrt(sum(g * g for g in grad))
            if norm < 1e-15:
                continue
            trial = step
            while trial > cfg.min_step:
                cand = [a + trial * g / norm for a, g in zip(t, grad)]
                cvals, cvecs = lam(cand)
                if cvals[0] > cur + 1e-17:
                    t, vals, vecs, cur = cand, cvals, cvecs, cvals[0]
                    step = trial * 1.4
                    improved = True
                    break
                trial *= 0.5
            if improved:
                break
        if not improved:
            break
    return t, vals, iters


def _status(value: float, cfg: SdpConfig, scale: float = 1.0) -> str:
    if value > cfg.eig_tol:
        return "positive-definite"
    if value < -cfg.boundary_tol * max(1.0, scale):
        return "infeasible-like"
    return "boundary"
