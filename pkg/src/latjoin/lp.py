"""Self-contained dense simplex solver for small covering LPs.

Solves   minimize c.x   subject to   A x >= b,  x >= 0
with c >= 0.  Every norm computation in this package produces an LP of this
shape: few variables (the witness vector), many constraints (one per
breakpoint or grid point), nonnegative data.

Strategy: run the primal simplex on the dual
    maximize b.y   subject to   A^T y <= c,  y >= 0,
whose slack basis is feasible from the start (c >= 0), so no phase-1 is
needed.  The primal witness is read off the reduced costs of the slack
columns and then re-checked against every constraint, so a returned
solution is certified optimal by weak duality: it is feasible and its
objective equals the objective of a feasible dual point.

Arithmetic is exact (Fraction) when the input data is exact, float with a
1e-9 pivot tolerance otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

SparseRow = Sequence[tuple[int, object]]  # (variable index, coefficient)


class LPError(RuntimeError):
    """Solver failure: bad shapes, unboundedness, or failed verification."""


@dataclass
class LPResult:
    value: object
    x: list
    y: list
    pivots: int
    exact: bool
    stats: dict = field(default_factory=dict)


def _is_exact(values) -> bool:
    return all(isinstance(v, (int, Fraction)) for v in values)


def solve_min_nonneg(c: Sequence, rows: Sequence[SparseRow], b: Sequence) -> LPResult:
    """Minimize c.x over {x >= 0 : rows[k].x >= b[k] for all k}.

    ``rows`` holds sparse constraint rows as (index, coeff) pairs.  Requires
    c >= 0; rows with b[k] <= 0 are vacuous but accepted.
    """
    r = len(c)
    n = len(b)
    if len(rows) != n:
        raise LPError("row/rhs count mismatch")
    exact = (
        _is_exact(c)
        and _is_exact(b)
        and all(_is_exact([v for _, v in row]) for row in rows)
    )
    if exact:
        zero, one = Fraction(0), Fraction(1)
        conv = Fraction
        tol = Fraction(0)
    else:
        zero, one = 0.0, 1.0
        conv = float
        tol = 1e-9

    c = [conv(v) for v in c]
    b = [conv(v) for v in b]
    for v in c:
        if v < 0:
            raise LPError("negative cost coefficient")
    if any(j < 0 or j >= r for row in rows for j, _ in row):
        raise LPError("constraint index out of range")

    if n == 0 or r == 0:
        x = [zero] * r
        if any(bk > tol for bk in b):
            raise LPError("infeasible: empty rows with positive rhs")
        return LPResult(value=zero, x=x, y=[zero] * n, pivots=0, exact=exact)

    # Dual tableau: r constraint rows, n structural columns, r slacks, rhs.
    width = n + r + 1
    T = [[zero] * width for _ in range(r + 1)]
    for k, row in enumerate(rows):
        for j, v in row:
            T[j][k] += conv(v)
    for i in range(r):
        T[i][n + i] = one
        T[i][-1] = c[i]
    obj = T[r]
    for k in range(n):
        obj[k] = -b[k]  # z_j - c_j for structural dual variables

    basis = list(range(n, n + r))
    pivots = 0
    bland_after = 4 * (n + r) + 200

    while True:
        # entering column: most negative reduced cost (Bland once stalled)
        enter = -1
        if pivots < bland_after:
            best = -tol
            for j in range(n + r):
                if obj[j] < best:
                    best = obj[j]
                    enter = j
        else:
            for j in range(n + r):
                if obj[j] < -tol:
                    enter = j
                    break
        if enter < 0:
            break

        leave = -1
        ratio = None
        for i in range(r):
            a = T[i][enter]
            if a > tol:
                rt = T[i][-1] / a
                if ratio is None or rt < ratio or (
                    rt == ratio and basis[i] < basis[leave]
                ):
                    ratio = rt
                    leave = i
        if leave < 0:
            raise LPError("dual unbounded: primal constraints infeasible")

        # pivot on (leave, enter)
        piv = T[leave][enter]
        prow = T[leave]
        if piv != one:
            inv = one / piv
            T[leave] = prow = [v * inv for v in prow]
        for i in range(r + 1):
            if i == leave:
                continue
            f = T[i][enter]
            if f != zero:
                row_i = T[i]
                T[i] = [u - f * w for u, w in zip(row_i, prow)]
        obj = T[r]
        basis[leave] = enter
        pivots += 1

    value = obj[-1]
    x = [obj[n + i] for i in range(r)]
    y = [zero] * n
    for i, bi in enumerate(basis):
        if bi < n:
            y[bi] = T[i][-1]

    _verify(c, rows, b, x, value, exact, tol)
    return LPResult(value=value, x=x, y=y, pivots=pivots, exact=exact)


def _verify(c, rows, b, x, value, exact, tol):
    slack = tol if exact else 1e-7
    for xi in x:
        if xi < -slack:
            raise LPError("verification failed: negative primal variable")
    for k, row in enumerate(rows):
        lhs = sum(v * x[j] for j, v in row)
        if lhs < b[k] - slack * max(1, abs(b[k])):
            raise LPError(f"verification failed: constraint {k} violated")
    cx = sum(ci * xi for ci, xi in zip(c, x))
    if exact:
        if cx != value:
            raise LPError("verification failed: duality gap")
    else:
        if abs(cx - value) > 1e-7 * max(1.0, abs(value)):
            raise LPError("verification failed: duality gap")
