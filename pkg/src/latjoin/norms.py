"""Free-product norm computation on joins of finite discrete spaces.

The norm of a join element F is the infimum of ||a||_X + ||b||_Y over
nonnegative witness vectors dominating F edge-wise:

    |f_ij(t)| <= (1 - t) a_i + t b_j   for all t in [0, 1], all cells.

Because each |f_ij| is piecewise linear, domination on [0, 1] is equivalent
to domination at the breakpoints of |f_ij|, which turns the infimum into a
finite optimization problem:

* factor norms with p in {1, inf}: an exact linear program solved by the
  rational simplex in :mod:`latjoin.lp` (certificates are exact);
* general 1 < p < inf: projected subgradient descent on the feasible
  iterates (max-violation repair gives the exact best response of the
  second witness block), with an ellipsoid refinement of the incumbent
  (certificates carry a float tolerance).

A grid brute-force search over witness vectors serves as an independent
oracle for the LP route, and a barycentric-grid LP covers the n-fold
scalar-factor case on the standard simplex.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from .join_element import JoinElement, ShapeError, SimplexSample
from .lp import solve_min_nonneg
from .plfunc import DomainError, coerce_scalar, pl_abs


class SolverError(RuntimeError):
    """Iterative solver failed to converge within its caps."""


@dataclass(frozen=True)
class FactorNormSpec:
    """A weighted ell_p norm on one factor, 1 <= p <= inf."""

    p: object
    dim: int
    weights: Optional[tuple] = None

    def __post_init__(self):
        p = self.p
        if p != math.inf:
            p = coerce_scalar(p)
            if p < 1:
                raise DomainError("p must be >= 1")
        object.__setattr__(self, "p", p)
        if self.dim < 1:
            raise DomainError("dim must be >= 1")
        if self.weights is not None:
            w = tuple(coerce_scalar(x) for x in self.weights)
            if len(w) != self.dim:
                raise ShapeError("weights length must equal dim")
            if any(x <= 0 for x in w):
                raise DomainError("weights must be strictly positive")
            object.__setattr__(self, "weights", w)

    @property
    def is_one(self) -> bool:
        return self.p == 1

    @property
    def is_inf(self) -> bool:
        return self.p == math.inf

    def weight(self, i: int):
        return Fraction(1) if self.weights is None else self.weights[i]

    def norm(self, vec: Sequence):
        vec = [coerce_scalar(v) for v in vec]
        if len(vec) != self.dim:
            raise ShapeError("vector length must equal dim")
        if self.is_inf:
            return max(self.weight(i) * abs(v) for i, v in enumerate(vec))
        if self.is_one:
            return sum(self.weight(i) * abs(v) for i, v in enumerate(vec))
        p = float(self.p)
        s = sum(float(self.weight(i)) * abs(float(v)) ** p for i, v in enumerate(vec))
        return s ** (1.0 / p)


def ell_inf(dim: int, weights=None) -> FactorNormSpec:
    return FactorNormSpec(math.inf, dim, weights)


def ell_1(dim: int, weights=None) -> FactorNormSpec:
    return FactorNormSpec(1, dim, weights)


def ell_p(p, dim: int, weights=None) -> FactorNormSpec:
    return FactorNormSpec(p, dim, weights)


@dataclass
class NormCertificate:
    """Norm value plus the dominating witness pair that attains it."""

    value: object
    witness_a: tuple
    witness_b: tuple
    exact: bool
    stats: dict = field(default_factory=dict)

    def to_json_dict(self) -> dict:
        from .plfunc import scalar_to_json

        return {
            "value": scalar_to_json(coerce_scalar(self.value)),
            "witness_a": [scalar_to_json(coerce_scalar(v)) for v in self.witness_a],
            "witness_b": [scalar_to_json(coerce_scalar(v)) for v in self.witness_b],
            "exact": self.exact,
            "stats": self.stats,
        }

    def domination_excess(self, F: JoinElement):
        """Worst violation of |f_ij(t)| <= (1-t) a_i + t b_j at breakpoints.

        Nonpositive means the witness pair dominates F, exhibiting F inside
        value * (solid convex hull of the embedded factor balls).
        """
        worst = None
        for i, row in enumerate(F.cells):
            for j, f in enumerate(row):
                h = pl_abs(f)
                for t, v in zip(h.breakpoints, h.values):
                    bound = (1 - t) * self.witness_a[i] + t * self.witness_b[j]
                    excess = v - bound
                    if worst is None or excess > worst:
                        worst = excess
        return worst


def sup_norm(F: JoinElement):
    """Sup norm over the join; attained at a cell breakpoint."""
    return max(max(abs(v) for v in f.values) for row in F.cells for f in row)


def gauge_norm_e(F: JoinElement):
    """Gauge against the strong unit e == 1: inf {lam : |F| <= lam * e}."""
    lam = None
    for row in F.cells:
        for f in row:
            h = pl_abs(f)
            for v in h.values:
                if lam is None or v > lam:
                    lam = v
    return lam


def _domination_rows(F: JoinElement):
    """Constraint rows (i, j, t, c): require (1-t) a_i + t b_j >= c."""
    rows = []
    for i, row in enumerate(F.cells):
        for j, f in enumerate(row):
            h = pl_abs(f)
            for t, c in zip(h.breakpoints, h.values):
                if c > 0:
                    rows.append((i, j, t, c))
    return rows


def _zero_certificate(F: JoinElement, exact: bool) -> NormCertificate:
    zero = Fraction(0) if exact else 0.0
    return NormCertificate(
        value=zero,
        witness_a=(zero,) * F.m,
        witness_b=(zero,) * F.n,
        exact=exact,
        stats={"solver": "trivial", "constraints": 0},
    )


def free_norm_two(
    F: JoinElement, specX: FactorNormSpec, specY: FactorNormSpec
) -> NormCertificate:
    """Free-product norm of F for the given factor norms.

    p in {1, inf} on both sides is solved exactly by LP; any other p goes
    through the projected-subgradient path and is marked inexact.
    """
    if specX.dim != F.m or specY.dim != F.n:
        raise ShapeError(
            f"factor dims ({specX.dim},{specY.dim}) != element shape ({F.m},{F.n})"
        )
    rows = _domination_rows(F)
    exact_data = all(
        isinstance(t, Fraction) and isinstance(c, Fraction) for _, _, t, c in rows
    )
    if not rows:
        return _zero_certificate(F, exact_data)
    lp_ok = (specX.is_one or specX.is_inf) and (specY.is_one or specY.is_inf)
    if lp_ok:
        return _free_norm_lp(F, specX, specY, rows, exact_data)
    return _free_norm_subgradient(F, specX, specY, rows)


def _free_norm_lp(F, specX, specY, rows, exact_data) -> NormCertificate:
    # Variable blocks.  p = 1 uses one variable per coordinate with the
    # weight as its cost.  p = inf collapses to a single variable alpha via
    # a_i = alpha / w_i, which preserves the norm and only enlarges the
    # feasible set coordinatewise.
    if specX.is_one:
        a_vars = F.m
        costs = [specX.weight(i) for i in range(F.m)]
    else:
        a_vars = 1
        costs = [Fraction(1)]
    if specY.is_one:
        costs += [specY.weight(j) for j in range(F.n)]
    else:
        costs += [Fraction(1)]

    lp_rows = []
    rhs = []
    for i, j, t, c in rows:
        row = []
        ca = 1 - t
        if ca != 0:
            if specX.is_one:
                row.append((i, ca))
            else:
                row.append((0, ca / specX.weight(i)))
        if t != 0:
            if specY.is_one:
                row.append((a_vars + j, t))
            else:
                row.append((a_vars, t / specY.weight(j)))
        lp_rows.append(row)
        rhs.append(c)

    res = solve_min_nonneg(costs, lp_rows, rhs)
    zero = Fraction(0) if res.exact else 0.0
    x = [max(v, zero) for v in res.x]
    if specX.is_one:
        wa = tuple(x[:a_vars])
    else:
        wa = tuple(x[0] / specX.weight(i) for i in range(F.m))
    if specY.is_one:
        wb = tuple(x[a_vars:])
    else:
        wb = tuple(x[a_vars] / specY.weight(j) for j in range(F.n))
    return NormCertificate(
        value=res.value,
        witness_a=wa,
        witness_b=wb,
        exact=res.exact and exact_data,
        stats={
            "solver": "simplex",
            "constraints": len(rows),
            "pivots": res.pivots,
        },
    )


# ---------------------------------------------------------------------------
# projected subgradient for general p


def _pnorm(x, p, w):
    if x.size == 0:
        return 0.0
    if p == math.inf:
        return float(np.max(w * x))
    return float(np.sum(w * x**p) ** (1.0 / p))


def _psubgrad(x, p, w):
    """A subgradient of the weighted p-norm at x >= 0."""
    g = np.zeros_like(x)
    if p == math.inf:
        k = int(np.argmax(w * x))
        g[k] = w[k]
        return g
    nrm = _pnorm(x, p, w)
    if nrm > 0:
        g[:] = w * x ** (p - 1.0) / nrm ** (p - 1.0)
    return g


def _free_norm_subgradient(
    F, specX, specY, rows, *, restarts=5, max_iter=200_000, stall=200, stall_tol=1e-9
) -> NormCertificate:
    """Projected subgradient solver for min ||a||_X + ||b||_Y over the
    domination constraints (1-t) a_i + t b_j >= c.

    The second block is eliminated: for fixed a, the smallest feasible b is
    the per-constraint max-violation repair B(a)_j = max over rows of
    (c - (1-t) a_i) / t, clamped at 0; monotone norms make b = B(a) the
    exact best response, so every iterate is feasible and yields a valid
    upper bound.  The remaining convex objective phi(a) = ||a|| + ||B(a)||
    is minimized over the box {a >= floor} in two phases: diminishing
    c/sqrt(k) subgradient steps from several starts, then an ellipsoid
    refinement (golden section when the block is one-dimensional), whose
    geometric convergence is immune to the kinks that stall plain
    subgradient tails.
    """
    m, n = F.m, F.n
    wx = np.array([float(specX.weight(i)) for i in range(m)])
    wy = np.array([float(specY.weight(j)) for j in range(n)])
    px = specX.p if specX.p == math.inf else float(specX.p)
    py = specY.p if specY.p == math.inf else float(specY.p)

    a_floor = np.zeros(m)
    b_floor = np.zeros(n)
    soft = []
    for i, j, t, c in rows:
        tf, cf = float(t), float(c)
        if tf == 0.0:
            a_floor[i] = max(a_floor[i], cf)
        elif tf == 1.0:
            b_floor[j] = max(b_floor[j], cf)
        else:
            soft.append((i, j, 1.0 - tf, tf, cf))
    ri = np.array([s[0] for s in soft], dtype=np.intp)
    rj = np.array([s[1] for s in soft], dtype=np.intp)
    ca = np.array([s[2] for s in soft])
    cb = np.array([s[3] for s in soft])
    rc = np.array([s[4] for s in soft])

    sup = max(float(r[3]) for r in rows)

    def response(a):
        b = b_floor.copy()
        if ri.size:
            val = (rc - ca * a[ri]) / cb
            np.maximum.at(b, rj, val)
            np.maximum(b, b_floor, out=b)
        return b

    def phi_and_grad(a):
        b = response(a)
        f = _pnorm(a, px, wx) + _pnorm(b, py, wy)
        g = _psubgrad(a, px, wx)
        if ri.size:
            gb = _psubgrad(b, py, wy)
            val = (rc - ca * a[ri]) / cb
            active = (val >= b[rj]) & (val > b_floor[rj] - 1e-300)
            if active.any():
                counts = np.bincount(rj[active], minlength=n).astype(float)
                share = gb[rj[active]] / counts[rj[active]]
                np.add.at(g, ri[active], share * (-ca[active] / cb[active]))
        return f, g, b

    best = math.inf
    best_ab = None
    rng = np.random.default_rng(12345)
    total_iters = 0

    def diminishing_stage(a0):
        """c/sqrt(k) steps until improvement stays below stall_tol."""
        nonlocal best, best_ab, total_iters
        a = np.maximum(a0, a_floor)
        f, g, b = phi_and_grad(a)
        if f < best:
            best, best_ab = f, (a.copy(), b)
        since = 0
        local = f
        for k in range(1, max_iter + 1):
            total_iters += 1
            gn = math.sqrt(float(g @ g))
            if gn <= 0:
                return
            a = np.maximum(a - (0.5 * sup / (gn * math.sqrt(k))) * g, a_floor)
            f, g, b = phi_and_grad(a)
            if f < best:
                best, best_ab = f, (a.copy(), b)
            if f < local - stall_tol:
                local = f
                since = 0
            else:
                since += 1
            if since >= stall:
                return
        raise SolverError("subgradient stage hit its iteration cap")

    def phi_only(a):
        b = response(a)
        return _pnorm(a, px, wx) + _pnorm(b, py, wy), b

    def polish_1d():
        """Golden-section refinement; the collapsed objective is convex."""
        nonlocal best, best_ab, total_iters
        lo = float(a_floor[0])
        hi = max(2.0 * float(best_ab[0][0]), lo + 2.0 * sup + 1.0)
        invphi = (math.sqrt(5.0) - 1.0) / 2.0
        x1 = hi - invphi * (hi - lo)
        x2 = lo + invphi * (hi - lo)
        f1 = phi_only(np.array([x1]))[0]
        f2 = phi_only(np.array([x2]))[0]
        for _ in range(220):
            total_iters += 1
            if f1 <= f2:
                hi, x2, f2 = x2, x1, f1
                x1 = hi - invphi * (hi - lo)
                f1 = phi_only(np.array([x1]))[0]
            else:
                lo, x1, f1 = x1, x2, f2
                x2 = lo + invphi * (hi - lo)
                f2 = phi_only(np.array([x2]))[0]
            if hi - lo <= 1e-14 * max(1.0, hi):
                break
        for x in (x1, x2, lo, hi):
            arr = np.array([max(x, a_floor[0])])
            f, b = phi_only(arr)
            if f < best:
                best, best_ab = f, (arr, b)

    def polish_stage():
        """Ellipsoid refinement of the incumbent.

        The collapsed objective is convex in the few first-block witness
        variables, so central-cut ellipsoid iterations with subgradient
        cuts (and coordinate cuts for the box) converge geometrically,
        independent of the kinks that stall plain subgradient steps."""
        nonlocal best, best_ab, total_iters
        if m == 1:
            polish_1d()
            return
        a0 = best_ab[0].astype(float)
        # every optimal coordinate is bounded through the factor norm
        exps = 1.0 if px == math.inf else 1.0 / float(px)
        amax = np.array([best / float(wx[i]) ** exps for i in range(m)])
        radius = float(np.linalg.norm(amax)) + float(np.linalg.norm(a0)) + 1.0
        E = np.eye(m) * radius * radius
        c = a0.copy()
        rounds = 2 * m * (m + 1) * 50
        for _ in range(rounds):
            total_iters += 1
            worst = int(np.argmax(a_floor - c))
            if c[worst] < a_floor[worst]:
                g = np.zeros(m)
                g[worst] = -1.0
            else:
                f, g, b = phi_and_grad(c)
                if f < best:
                    best, best_ab = f, (c.copy(), b)
            Eg = E @ g
            gEg = float(g @ Eg)
            if gEg <= 1e-60 * radius * radius:
                break
            c = c - Eg / ((m + 1.0) * math.sqrt(gEg))
            E = (m * m / (m * m - 1.0)) * (
                E - (2.0 / (m + 1.0)) * np.outer(Eg, Eg) / gEg
            )
            E = 0.5 * (E + E.T)

    for restart in range(restarts):
        if restart == 0:
            start = np.full(m, sup)
        else:
            start = sup * (0.25 + 1.5 * rng.random(m))
        diminishing_stage(start)
    polish_stage()

    a, b = best_ab
    return NormCertificate(
        value=best,
        witness_a=tuple(float(v) for v in a),
        witness_b=tuple(float(v) for v in b),
        exact=False,
        stats={
            "solver": "projected-subgradient",
            "constraints": len(rows),
            "iterations": total_iters,
            "restarts": restarts,
            "tolerance": 1e-7,
        },
    )


# ---------------------------------------------------------------------------
# simplex-grid norm for the n-fold scalar factor case


def free_norm_simplex(
    sample: SimplexSample, piecewise_linear: bool = False
) -> NormCertificate:
    """Norm of a sampled function on the simplex grid.

    Minimizes sum(a_i) over a >= 0 with sum_i a_i t_i >= |f(t)| at every
    grid point.  Exact for functions linear on the grid triangulation (pass
    ``piecewise_linear=True`` to certify that); otherwise the grid is a
    relaxation and the value is a lower bound on the true norm, so the
    certificate is marked inexact and records the resolution used.
    """
    if not sample.points:
        raise DomainError("empty sample")
    n = sample.n
    rows = []
    rhs = []
    for point, v in zip(sample.points, sample.values):
        c = abs(v)
        if c > 0:
            rows.append([(i, ti) for i, ti in enumerate(point) if ti != 0])
            rhs.append(c)
    if not rows:
        zero = Fraction(0)
        return NormCertificate(
            value=zero,
            witness_a=(zero,) * n,
            witness_b=(),
            exact=True,
            stats={"solver": "trivial", "resolution": sample.resolution},
        )
    res = solve_min_nonneg([Fraction(1)] * n, rows, rhs)
    zero = Fraction(0) if res.exact else 0.0
    return NormCertificate(
        value=res.value,
        witness_a=tuple(max(v, zero) for v in res.x),
        witness_b=(),
        exact=res.exact and piecewise_linear,
        stats={
            "solver": "simplex",
            "resolution": sample.resolution,
            "constraints": len(rows),
            "pivots": res.pivots,
        },
    )


def pconvexity_ratio(n: int, p, resolution: int = 50):
    """Norm of (sum_i t_i^p)^(1/p) on the simplex grid, over n^(1/p).

    The function has norm n while the p-sum of the coordinate norms is
    n^(1/p), so the ratio n^(1-1/p) witnesses how p-convexity degrades with
    the number of scalar factors (sharp at 2^(1-1/p) for two factors).
    """
    if n < 1:
        raise DomainError("n must be >= 1")
    if p != math.inf:
        p = float(p)
        if p < 1:
            raise DomainError("p must be >= 1")

    if p == math.inf:
        fn = lambda t: float(max(t))
        denom = 1.0
    else:
        fn = lambda t: float(sum(float(ti) ** p for ti in t)) ** (1.0 / p)
        denom = float(n) ** (1.0 / p)
    sample = SimplexSample.from_function(n, resolution, fn)
    cert = free_norm_simplex(sample)
    return float(cert.value) / denom


# ---------------------------------------------------------------------------
# independent grid oracle


def brute_force_norm(
    F: JoinElement,
    grid: int,
    specX: Optional[FactorNormSpec] = None,
    specY: Optional[FactorNormSpec] = None,
    refine_rounds: int = 3,
):
    """Grid-search oracle for the sup-type free-product norm.

    Scans the scalar witness alpha (all a_i = alpha / w_i) over a
    nonnegative grid, refines around the incumbent, and pairs each alpha
    with its exact minimal feasible beta.  The returned objective comes
    from an exactly feasible witness, so it is always >= the LP optimum,
    and it converges to it as the grid is refined (within 2*sup/grid after
    the first pass).  Only max-type factor norms are supported; the scalar
    collapse is exact for those.
    """
    if grid < 1:
        raise DomainError("grid must be >= 1")
    specX = specX or ell_inf(F.m)
    specY = specY or ell_inf(F.n)
    if not (specX.is_inf and specY.is_inf):
        raise DomainError("brute_force_norm supports max-type factor norms only")
    if specX.dim != F.m or specY.dim != F.n:
        raise ShapeError("factor dims do not match element shape")

    # Independent constraint extraction: u * alpha + w * beta >= c.
    rows = []
    for i, row in enumerate(F.cells):
        for j, f in enumerate(row):
            h = pl_abs(f)
            for t, c in zip(h.breakpoints, h.values):
                if c > 0:
                    rows.append(((1 - t) / specX.weight(i), t / specY.weight(j), c))
    if not rows:
        return Fraction(0)

    exact = all(
        isinstance(u, Fraction) and isinstance(w, Fraction) and isinstance(c, Fraction)
        for u, w, c in rows
    )
    fu = np.array([float(u) for u, _, _ in rows])
    fw = np.array([float(w) for _, w, _ in rows])
    fc = np.array([float(c) for _, _, c in rows])

    hard = fw == 0  # rows constraining alpha alone
    alpha_min = float(np.max(fc[hard] / fu[hard])) if hard.any() else 0.0
    sup = sup_norm(F)
    wmax_x = max(float(specX.weight(i)) for i in range(F.m))
    wmax_y = max(float(specY.weight(j)) for j in range(F.n))
    alpha_max = max(alpha_min, float(sup) * (wmax_x + wmax_y))

    soft_u = fu[~hard]
    soft_w = fw[~hard]
    soft_c = fc[~hard]

    def best_beta(alpha: float) -> float:
        if soft_c.size == 0:
            return 0.0
        return max(0.0, float(np.max((soft_c - soft_u * alpha) / soft_w)))

    lo, hi = alpha_min, alpha_max
    best_alpha = lo
    best_val = lo + best_beta(lo)
    for _ in range(refine_rounds):
        if hi <= lo:
            break
        alphas = np.linspace(lo, hi, grid + 1)
        vals = [a + best_beta(a) for a in alphas]
        k = int(np.argmin(vals))
        if vals[k] < best_val:
            best_val = vals[k]
            best_alpha = float(alphas[k])
        step = (hi - lo) / grid
        lo = max(alpha_min, best_alpha - step)
        hi = best_alpha + step

    if not exact:
        return best_val

    # Exact re-evaluation of the incumbent: a rational alpha with its exact
    # best-response beta gives a certified feasible objective.
    alpha = Fraction(best_alpha).limit_denominator(10**12)
    if alpha < Fraction(best_alpha):  # never round below the float incumbent
        alpha = Fraction(best_alpha)
    for u, w, c in rows:
        if w == 0 and u * alpha < c:
            alpha = c / u
    beta = Fraction(0)
    for u, w, c in rows:
        if w != 0:
            need = (c - u * alpha) / w
            if need > beta:
                beta = need
    return alpha + beta
