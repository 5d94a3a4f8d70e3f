"""Functions on the join of two finite discrete spaces.

The join of discrete spaces with m and n points is the complete bipartite
graph K_{m,n} with every edge a copy of [0, 1]; parameter t = 0 sits at the
first-factor vertex p_i, t = 1 at the second-factor vertex q_j.  A
continuous function on the join is an m x n matrix of PL functions whose
endpoint values agree along each vertex: cell (i, j) has value l_i at t = 0
and r_j at t = 1.  The traces l and r are stored explicitly so endpoint
compatibility is a checkable invariant.

Also hosts SimplexSample, the barycentric-grid model for positively
homogeneous functions on the positive face of the unit sphere, used by the
n-factor scalar norm computation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator, Sequence

from .plfunc import (
    DomainError,
    PLFunction,
    coerce_scalar,
    pl_abs,
    pl_combine,
    pl_eval,
    pl_linear,
    pl_scale,
)

JOIN_OPS = ("add", "sub", "max", "min", "abs", "scale")


class ShapeError(ValueError):
    """Mismatched factor dimensions."""


class TraceError(ValueError):
    """Cell endpoints inconsistent with the stored traces."""


@dataclass(frozen=True)
class JoinElement:
    """m x n matrix of edge functions with compatible endpoint traces."""

    cells: tuple
    left_trace: tuple
    right_trace: tuple

    def __post_init__(self):
        cells = tuple(tuple(row) for row in self.cells)
        m = len(cells)
        if m < 1 or len(cells[0]) < 1:
            raise ShapeError("need m, n >= 1")
        n = len(cells[0])
        if any(len(row) != n for row in cells):
            raise ShapeError("ragged cell matrix")
        lt = tuple(coerce_scalar(v) for v in self.left_trace)
        rt = tuple(coerce_scalar(v) for v in self.right_trace)
        if len(lt) != m or len(rt) != n:
            raise ShapeError("trace length mismatch")
        for i in range(m):
            for j in range(n):
                f = cells[i][j]
                if not isinstance(f, PLFunction):
                    raise TraceError("cells must be PLFunction")
                if f.values[0] != lt[i]:
                    raise TraceError(f"cell ({i},{j}) value at 0 != left trace")
                if f.values[-1] != rt[j]:
                    raise TraceError(f"cell ({i},{j}) value at 1 != right trace")
        object.__setattr__(self, "cells", cells)
        object.__setattr__(self, "left_trace", lt)
        object.__setattr__(self, "right_trace", rt)

    @property
    def m(self) -> int:
        return len(self.cells)

    @property
    def n(self) -> int:
        return len(self.cells[0])

    @classmethod
    def from_cells(cls, cells: Sequence[Sequence[PLFunction]]) -> "JoinElement":
        """Build from a cell matrix, deriving and validating the traces."""
        cells = tuple(tuple(row) for row in cells)
        if not cells or not cells[0]:
            raise ShapeError("need m, n >= 1")
        lt = tuple(row[0].values[0] for row in cells)
        rt = tuple(f.values[-1] for f in cells[0])
        return cls(cells, lt, rt)

    def cell(self, i: int, j: int) -> PLFunction:
        return self.cells[i][j]

    def to_json_dict(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "cells": [[f.to_json_dict() for f in row] for row in self.cells],
        }

    @classmethod
    def from_json_dict(cls, d: dict, mode: str = "rational") -> "JoinElement":
        if not isinstance(d, dict) or "cells" not in d:
            raise DomainError("join element JSON needs key 'cells'")
        cells = [
            [PLFunction.from_json_dict(c, mode) for c in row] for row in d["cells"]
        ]
        if "m" in d and len(cells) != d["m"]:
            raise ShapeError("declared m does not match cells")
        if "n" in d and any(len(row) != d["n"] for row in cells):
            raise ShapeError("declared n does not match cells")
        return cls.from_cells(cells)


def embed_factor1(a: Sequence, n: int) -> JoinElement:
    """Canonical copy of the first factor: cell (i, j) = L(a_i, 0)."""
    a = [coerce_scalar(v) for v in a]
    if not a or n < 1:
        raise ShapeError("need m, n >= 1")
    zero = a[0] * 0
    cells = [[pl_linear(ai, zero) for _ in range(n)] for ai in a]
    return JoinElement(cells, tuple(a), (zero,) * n)


def embed_factor2(b: Sequence, m: int) -> JoinElement:
    """Canonical copy of the second factor: cell (i, j) = L(0, b_j)."""
    b = [coerce_scalar(v) for v in b]
    if not b or m < 1:
        raise ShapeError("need m, n >= 1")
    zero = b[0] * 0
    cells = [[pl_linear(zero, bj) for bj in b] for _ in range(m)]
    return JoinElement(cells, (zero,) * m, tuple(b))


def zero_element(m: int, n: int) -> JoinElement:
    return embed_factor1([Fraction(0)] * m, n)


def unit_element(m: int, n: int) -> JoinElement:
    """The strong unit e = phi1(1) + phi2(1), constant 1 on the join."""
    return join_lattice_op(
        "add", embed_factor1([1] * m, n), embed_factor2([1] * n, m)
    )


def join_lattice_op(op: str, F: JoinElement, G=None) -> JoinElement:
    """Cell-wise lattice/vector operation; traces are recomputed and checked."""
    if op not in JOIN_OPS:
        raise DomainError(f"unknown op {op!r}")
    if op == "abs":
        cells = [[pl_abs(f) for f in row] for row in F.cells]
    elif op == "scale":
        c = coerce_scalar(G)
        cells = [[pl_scale(f, c) for f in row] for row in F.cells]
    else:
        if not isinstance(G, JoinElement):
            raise ShapeError(f"{op} needs a second JoinElement")
        if (F.m, F.n) != (G.m, G.n):
            raise ShapeError(f"shape mismatch: {F.m}x{F.n} vs {G.m}x{G.n}")
        cells = [
            [pl_combine(op, f, g) for f, g in zip(frow, grow)]
            for frow, grow in zip(F.cells, G.cells)
        ]
    return JoinElement.from_cells(cells)


def factor_projection(F: JoinElement, which: int) -> JoinElement:
    """Contractive projection onto a canonical factor copy.

    Evaluates at the factor's vertices (the traces) and embeds back, so
    projecting onto factor 1 returns embed_factor1(left trace of F).
    """
    if which == 1:
        return embed_factor1(F.left_trace, F.n)
    if which == 2:
        return embed_factor2(F.right_trace, F.m)
    raise DomainError("which must be 1 or 2")


def eval_join(F: JoinElement, i: int, j: int, t):
    return pl_eval(F.cells[i][j], t)


# ---------------------------------------------------------------------------
# barycentric grids on the standard simplex


def simplex_grid(n: int, resolution: int) -> Iterator[tuple]:
    """All points of the standard (n-1)-simplex with coordinates k/resolution.

    Lexicographic in the composition (k_1, ..., k_n), sum k_i = resolution.
    """
    if n < 1 or resolution < 1:
        raise DomainError("need n >= 1 and resolution >= 1")
    d = resolution

    def rec(prefix, remaining, slots):
        if slots == 1:
            yield prefix + (Fraction(remaining, d),)
            return
        for k in range(remaining + 1):
            yield from rec(prefix + (Fraction(k, d),), remaining - k, slots - 1)

    yield from rec((), d, n)


@dataclass(frozen=True)
class SimplexSample:
    """Values of a function sampled on a barycentric grid of the simplex."""

    n: int
    resolution: int
    points: tuple
    values: tuple

    def __post_init__(self):
        pts = tuple(tuple(coerce_scalar(c) for c in p) for p in self.points)
        vals = tuple(coerce_scalar(v) for v in self.values)
        expected = math.comb(self.resolution + self.n - 1, self.n - 1)
        if len(pts) != expected:
            raise DomainError(
                f"expected {expected} grid points, got {len(pts)}"
            )
        if len(vals) != len(pts):
            raise DomainError("point/value count mismatch")
        for p in pts:
            if len(p) != self.n:
                raise DomainError("point arity mismatch")
            if any(c < 0 for c in p) or sum(p) != 1:
                raise DomainError(f"not a barycentric point: {p}")
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "values", vals)

    @classmethod
    def from_function(
        cls, n: int, resolution: int, fn: Callable
    ) -> "SimplexSample":
        pts = tuple(simplex_grid(n, resolution))
        return cls(n, resolution, pts, tuple(fn(p) for p in pts))

    @classmethod
    def coordinate(cls, n: int, resolution: int, i: int) -> "SimplexSample":
        """The i-th barycentric coordinate function t -> t_i."""
        return cls.from_function(n, resolution, lambda p: p[i])
