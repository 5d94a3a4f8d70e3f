"""Continuous piecewise-linear functions on [0, 1].

A PLFunction is stored as breakpoints 0 = t_0 < t_1 < ... < t_k = 1 together
with the value at each breakpoint; between breakpoints the function is the
linear interpolant.  Arithmetic defaults to exact rationals
(:class:`fractions.Fraction`); float coefficients are accepted and propagate,
giving an approximate mode for large instances.

The representation is closed under pointwise add/sub/max/min/abs because the
crossing parameters of two linear pieces are themselves rational in the input
data.  A consequence used throughout the norm solvers: a PLFunction is >= 0
on all of [0, 1] iff it is >= 0 at every breakpoint.
"""

from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Union

Scalar = Union[Fraction, float]

COMBINE_OPS = ("add", "sub", "max", "min")


class DomainError(ValueError):
    """Evaluation outside [0, 1] or malformed construction data."""


def coerce_scalar(x) -> Scalar:
    """Normalize a number: ints become Fractions, floats stay floats."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise DomainError(f"not a number: {x!r}")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, float):
        if not math.isfinite(x):
            raise DomainError(f"non-finite value: {x!r}")
        return x
    if isinstance(x, str):
        return Fraction(x)
    raise DomainError(f"cannot interpret {x!r} as a scalar")


def scalar_to_json(x: Scalar):
    if isinstance(x, Fraction):
        if x.denominator == 1:
            return int(x)
        return f"{x.numerator}/{x.denominator}"
    return float(x)


def scalar_from_json(x, mode: str = "rational") -> Scalar:
    if isinstance(x, str):
        return Fraction(x)
    if isinstance(x, bool) or x is None:
        raise DomainError(f"not a number: {x!r}")
    if isinstance(x, int):
        return Fraction(x) if mode == "rational" else float(x)
    if isinstance(x, float):
        # str() round-trips the shortest decimal, so 0.1 -> 1/10, not the
        # binary expansion.
        return Fraction(str(x)) if mode == "rational" else x
    raise DomainError(f"cannot interpret {x!r} as a scalar")


@dataclass(frozen=True)
class PLFunction:
    """Piecewise-linear function on [0, 1] by breakpoints and values."""

    breakpoints: tuple
    values: tuple

    def __post_init__(self):
        bps = tuple(coerce_scalar(t) for t in self.breakpoints)
        vals = tuple(coerce_scalar(v) for v in self.values)
        if len(bps) != len(vals):
            raise DomainError("breakpoint/value length mismatch")
        if len(bps) < 2:
            raise DomainError("need at least breakpoints 0 and 1")
        if bps[0] != 0 or bps[-1] != 1:
            raise DomainError("breakpoints must start at 0 and end at 1")
        for a, b in zip(bps, bps[1:]):
            if not a < b:
                raise DomainError("breakpoints must be strictly increasing")
        object.__setattr__(self, "breakpoints", bps)
        object.__setattr__(self, "values", vals)

    @property
    def is_exact(self) -> bool:
        return all(isinstance(x, Fraction) for x in self.breakpoints) and all(
            isinstance(x, Fraction) for x in self.values
        )

    def __call__(self, t) -> Scalar:
        return pl_eval(self, t)

    def to_json_dict(self) -> dict:
        return {
            "t": [scalar_to_json(t) for t in self.breakpoints],
            "v": [scalar_to_json(v) for v in self.values],
        }

    @classmethod
    def from_json_dict(cls, d: dict, mode: str = "rational") -> "PLFunction":
        if not isinstance(d, dict) or "t" not in d or "v" not in d:
            raise DomainError("PL function JSON needs keys 't' and 'v'")
        return cls(
            tuple(scalar_from_json(x, mode) for x in d["t"]),
            tuple(scalar_from_json(x, mode) for x in d["v"]),
        )


def pl_linear(a, b) -> PLFunction:
    """The segment function t |-> (1-t)*a + t*b."""
    a = coerce_scalar(a)
    b = coerce_scalar(b)
    return PLFunction((Fraction(0), Fraction(1)), (a, b))


def pl_const(c) -> PLFunction:
    return pl_linear(c, c)


def pl_eval(f: PLFunction, t) -> Scalar:
    """Value of the interpolant at t in [0, 1]; exact for rational inputs."""
    t = coerce_scalar(t)
    if t < 0 or t > 1:
        raise DomainError(f"argument {t} outside [0, 1]")
    bps = f.breakpoints
    i = bisect_right(bps, t) - 1
    if i == len(bps) - 1:
        return f.values[-1]
    t0, t1 = bps[i], bps[i + 1]
    v0, v1 = f.values[i], f.values[i + 1]
    if t == t0:
        return v0
    return v0 + (v1 - v0) * (t - t0) / (t1 - t0)


def _merged_breakpoints(f: PLFunction, g: PLFunction) -> list:
    return sorted(set(f.breakpoints) | set(g.breakpoints))


def refine(f: PLFunction, points: Iterable) -> PLFunction:
    """Re-express f on the union of its breakpoints and the given points."""
    pts = sorted(set(f.breakpoints) | {coerce_scalar(p) for p in points})
    if pts[0] < 0 or pts[-1] > 1:
        raise DomainError("refinement points must lie in [0, 1]")
    return PLFunction(tuple(pts), tuple(pl_eval(f, p) for p in pts))


def pl_combine(op: str, f: PLFunction, g: PLFunction) -> PLFunction:
    """Pointwise add/sub/max/min of two PL functions, with exact breakpoints.

    For max/min, every parameter where f - g changes sign inside a shared
    linear piece is inserted as a breakpoint, so the result interpolates the
    true pointwise op everywhere.  Coincident pieces insert nothing.
    """
    if op not in COMBINE_OPS:
        raise DomainError(f"unknown op {op!r}")
    base = _merged_breakpoints(f, g)
    fv = [pl_eval(f, t) for t in base]
    gv = [pl_eval(g, t) for t in base]
    if op == "add":
        return PLFunction(tuple(base), tuple(a + b for a, b in zip(fv, gv)))
    if op == "sub":
        return PLFunction(tuple(base), tuple(a - b for a, b in zip(fv, gv)))

    pts: list = []
    vals: list = []
    pick: Callable = max if op == "max" else min
    for i, t in enumerate(base):
        if i > 0:
            d0 = fv[i - 1] - gv[i - 1]
            d1 = fv[i] - gv[i]
            if (d0 > 0 and d1 < 0) or (d0 < 0 and d1 > 0):
                tprev = base[i - 1]
                tc = tprev + (t - tprev) * d0 / (d0 - d1)
                # exact mode puts the crossing strictly inside; float
                # rounding can collapse it onto an endpoint, where the
                # endpoint value already captures it
                if tprev < tc < t:
                    vc = pl_eval(f, tc)  # = g(tc) at the crossing
                    pts.append(tc)
                    vals.append(vc)
        pts.append(t)
        vals.append(pick(fv[i], gv[i]))
    return PLFunction(tuple(pts), tuple(vals))


def pl_scale(f: PLFunction, c) -> PLFunction:
    c = coerce_scalar(c)
    return PLFunction(f.breakpoints, tuple(c * v for v in f.values))


def pl_negate(f: PLFunction) -> PLFunction:
    return pl_scale(f, -1)


def pl_abs(f: PLFunction) -> PLFunction:
    """Pointwise absolute value, with zero crossings inserted as breakpoints."""
    pts: list = []
    vals: list = []
    bps, fv = f.breakpoints, f.values
    for i, t in enumerate(bps):
        if i > 0:
            v0, v1 = fv[i - 1], fv[i]
            if (v0 > 0 and v1 < 0) or (v0 < 0 and v1 > 0):
                tprev = bps[i - 1]
                tc = tprev + (t - tprev) * v0 / (v0 - v1)
                if tprev < tc < t:
                    pts.append(tc)
                    vals.append(0 * v0)
        pts.append(t)
        vals.append(abs(fv[i]))
    return PLFunction(tuple(pts), tuple(vals))


def pl_simplify(f: PLFunction) -> PLFunction:
    """Drop interior breakpoints that are collinear with their neighbours."""
    keep = [0]
    for i in range(1, len(f.breakpoints) - 1):
        j = keep[-1]
        t0, t1, t2 = f.breakpoints[j], f.breakpoints[i], f.breakpoints[i + 1]
        v0, v1, v2 = f.values[j], f.values[i], f.values[i + 1]
        # collinear iff (v1-v0)/(t1-t0) == (v2-v1)/(t2-t1), cross-multiplied
        if (v1 - v0) * (t2 - t1) != (v2 - v1) * (t1 - t0):
            keep.append(i)
    keep.append(len(f.breakpoints) - 1)
    return PLFunction(
        tuple(f.breakpoints[i] for i in keep), tuple(f.values[i] for i in keep)
    )


def pl_equal(f: PLFunction, g: PLFunction, tol=0) -> bool:
    """Pointwise equality, decided exactly on the merged breakpoint set."""
    for t in _merged_breakpoints(f, g):
        if abs(pl_eval(f, t) - pl_eval(g, t)) > tol:
            return False
    return True


def pl_sup_abs(f: PLFunction) -> Scalar:
    """Sup norm of f on [0, 1]; attained at a breakpoint."""
    return max(abs(v) for v in f.values)


def pl_nonneg(f: PLFunction) -> bool:
    """Whether f >= 0 everywhere (equivalently, at every breakpoint)."""
    return all(v >= 0 for v in f.values)
