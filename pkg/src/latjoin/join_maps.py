"""Relation sets on finite spaces and their propagation across joins.

A RelationSet M cuts out the sublattice {f : f(x) = alpha * f(y) for all
(x, y, alpha) in M} of functions on a finite space.  Joining two
constrained spaces induces a parametric family of relations on the join:
one record per pair of factor relations (interior, t running over [0, 1])
plus boundary records tying the traces.  Membership of a join element is
decided exactly: along an interior record the right-hand side
lam(t) * F(s(t)) with lam(t) = alpha(1-t) + beta*t and s(t) = beta*t/lam(t)
is itself piecewise linear in t (a Moebius reparametrization composed with
a PL function, scaled by the affine lam), so its breakpoints are the finite
preimages of the target cell's breakpoints and equality is checked on a
merged breakpoint set, with no sampling.

The same reparametrization transports weighted-composition homomorphisms
of the factors to the join.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .join_element import JoinElement, ShapeError
from .plfunc import DomainError, PLFunction, coerce_scalar, pl_eval, pl_linear


@dataclass(frozen=True)
class RelationSet:
    """Triples (x, y, alpha): every admissible f satisfies f(x) = alpha f(y)."""

    space_size: int
    triples: tuple

    def __post_init__(self):
        seen = []
        for t in self.triples:
            x, y, alpha = t
            x, y = int(x), int(y)
            alpha = coerce_scalar(alpha)
            if not isinstance(alpha, Fraction):
                alpha = Fraction(alpha)
            if x == y:
                raise DomainError(f"relation ({x},{y}) needs distinct points")
            if not (0 <= x < self.space_size and 0 <= y < self.space_size):
                raise DomainError(f"relation ({x},{y}) outside the space")
            if alpha < 0:
                raise DomainError("relation coefficient must be >= 0")
            seen.append((x, y, alpha))
        object.__setattr__(self, "triples", tuple(sorted(set(seen))))

    @property
    def is_normalized(self) -> bool:
        pairs = {}
        for x, y, alpha in self.triples:
            pairs.setdefault((x, y), set()).add(alpha)
        return all(len(v) == 1 for v in pairs.values())

    def to_json_dict(self) -> dict:
        from .plfunc import scalar_to_json

        return {
            "size": self.space_size,
            "triples": [[x, y, scalar_to_json(a)] for x, y, a in self.triples],
        }

    @classmethod
    def from_json_dict(cls, d: dict) -> "RelationSet":
        return cls(d["size"], tuple((t[0], t[1], t[2]) for t in d["triples"]))


def normalize_relations(M: RelationSet) -> RelationSet:
    """Resolve conflicting coefficients on the same ordered pair.

    Two distinct coefficients on (x, y) force f(x) = f(y) = 0, which is the
    pair of zero relations (x, y, 0) and (y, x, 0); applying this until
    stable and dropping duplicates yields a normalized set.
    """
    triples = set(M.triples)
    while True:
        by_pair = {}
        for x, y, alpha in triples:
            by_pair.setdefault((x, y), set()).add(alpha)
        conflicts = [p for p, alphas in by_pair.items() if len(alphas) > 1]
        if not conflicts:
            break
        for x, y in conflicts:
            triples = {t for t in triples if (t[0], t[1]) != (x, y)}
            triples.add((x, y, Fraction(0)))
            triples.add((y, x, Fraction(0)))
    return RelationSet(M.space_size, tuple(triples))


def satisfies_relations(vec: Sequence, M: RelationSet, tol=0) -> bool:
    vec = [coerce_scalar(v) for v in vec]
    if len(vec) != M.space_size:
        raise ShapeError("vector length must equal the space size")
    return all(abs(vec[x] - a * vec[y]) <= tol for x, y, a in M.triples)


def random_satisfying_vector(M: RelationSet, rng, lo: int = -8, hi: int = 8):
    """A random rational vector satisfying M exactly.

    Uses weighted union-find: each point carries a coefficient against its
    component root (f(x) = coeff * f(root)); inconsistent cycles and zero
    relations force the whole component to zero.  Root values are drawn
    uniformly from [lo, hi].
    """
    size = M.space_size
    parent = list(range(size))
    coeff = [Fraction(1)] * size
    zero = [False] * size

    def find(x):
        root = x
        acc = Fraction(1)
        while parent[root] != root:
            acc *= coeff[root]
            root = parent[root]
        # path compression
        node = x
        carry = acc
        while parent[node] != root:
            nxt = parent[node]
            c = coeff[node]
            parent[node] = root
            coeff[node] = carry
            carry /= c
            node = nxt
        return root, acc

    def mark_zero(root):
        zero[root] = True

    for x, y, alpha in M.triples:
        rx, cx = find(x)
        ry, cy = find(y)
        if alpha == 0:
            # f(x) = 0: the root of x is forced to zero unless coeff is 0
            if cx != 0:
                mark_zero(rx)
            continue
        if rx == ry:
            if cx != alpha * cy:
                mark_zero(rx)
            continue
        if cy == 0:
            if cx != 0:
                mark_zero(rx)
            continue
        if cx == 0:
            mark_zero(ry)  # g(x) = 0 and alpha, cy != 0 force g(root y) = 0
            continue
        parent[ry] = rx
        coeff[ry] = cx / (alpha * cy)
        if zero[ry]:
            mark_zero(rx)

    values = [Fraction(0)] * size
    root_value = {}
    for v in range(size):
        r, c = find(v)
        if r not in root_value:
            root_value[r] = (
                Fraction(0) if zero[r] else Fraction(rng.randint(lo, hi))
            )
        values[v] = c * root_value[r]
    if not satisfies_relations(values, M):
        # inconsistent propagation can only be fixed by zeroing; safe fallback
        values = [Fraction(0)] * size
    return tuple(values)


# ---------------------------------------------------------------------------
# induced relations on the join


@dataclass(frozen=True)
class InteriorRecord:
    """For t in [0,1]: F[x,z](t) = lam(t) * F[y,w](s(t)),
    lam(t) = alpha (1-t) + beta t,  s(t) = beta t / lam(t) where lam > 0.
    alpha = beta = 0 degenerates to: the whole cell (x, z) vanishes."""

    x: int
    z: int
    y: int
    w: int
    alpha: Fraction
    beta: Fraction


@dataclass(frozen=True)
class BoundaryRecord:
    """side 1: left_trace[src] = coeff * left_trace[dst] (the t = 0 vertex);
    side 2: the same for right traces (the t = 1 vertex)."""

    side: int
    src: int
    dst: int
    coeff: Fraction


@dataclass(frozen=True)
class VacuousRecord:
    """A branch whose target parameter is unconstrained; reported, not checked."""

    reason: str
    data: tuple


@dataclass(frozen=True)
class JoinRelationFamily:
    m: int
    n: int
    interior: tuple
    boundary: tuple
    vacuous: tuple = ()


def induced_join_relations(M1: RelationSet, M2: RelationSet) -> JoinRelationFamily:
    """The relation family cutting out the join of two constrained spaces.

    One interior record per pair of factor relations, boundary records for
    each single factor relation at its own end, and vacuous records for the
    branches whose target parameter is arbitrary (a zero relation on the
    opposite factor makes the target value irrelevant)."""
    M1 = normalize_relations(M1)
    M2 = normalize_relations(M2)
    interior = []
    boundary = []
    vacuous = []
    for x, y, alpha in M1.triples:
        boundary.append(BoundaryRecord(1, x, y, alpha))
        for z, w, beta in M2.triples:
            interior.append(InteriorRecord(x, z, y, w, alpha, beta))
    for z, w, beta in M2.triples:
        boundary.append(BoundaryRecord(2, z, w, beta))
    zeros2 = {(w, z) for z, w, b in M2.triples if b == 0}
    for x, y, alpha in M1.triples:
        for w, z in zeros2:
            vacuous.append(
                VacuousRecord(
                    "target parameter arbitrary at t=0: zero relation on factor 2",
                    (x, y, alpha, w, z),
                )
            )
    zeros1 = {(y, x) for x, y, a in M1.triples if a == 0}
    for z, w, beta in M2.triples:
        for y, x in zeros1:
            vacuous.append(
                VacuousRecord(
                    "target parameter arbitrary at t=1: zero relation on factor 1",
                    (z, w, beta, y, x),
                )
            )
    return JoinRelationFamily(
        M1.space_size, M2.space_size, tuple(interior), tuple(boundary), tuple(vacuous)
    )


def mobius_transport(G: PLFunction, alpha, beta) -> PLFunction:
    """The function t -> lam(t) * G(s(t)) as an exact PLFunction.

    With lam(t) = alpha (1-t) + beta t and s(t) = beta t / lam(t): on any
    interval where s stays inside one linear piece G(s) = c + d s, the
    composite equals c lam(t) + d beta t, which is affine in t; so the
    breakpoints are exactly the preimages s^{-1}(u) of G's breakpoints,
    u -> alpha u / (beta (1-u) + alpha u).  Degenerate ends (alpha or beta
    zero) collapse to a single segment, extended by continuity."""
    alpha = coerce_scalar(alpha)
    beta = coerce_scalar(beta)
    if alpha < 0 or beta < 0:
        raise DomainError("transport coefficients must be >= 0")
    if alpha == 0 and beta == 0:
        return pl_linear(0, 0)
    if beta == 0:
        return pl_linear(alpha * G.values[0], 0)
    if alpha == 0:
        return pl_linear(0, beta * G.values[-1])
    pts = []
    vals = []
    for u, v in zip(G.breakpoints, G.values):
        t = alpha * u / (beta * (1 - u) + alpha * u)
        # exact arithmetic keeps the preimages strictly increasing; float
        # rounding may collide neighbours, in which case one point suffices
        if pts and t <= pts[-1]:
            if u == 1:
                pts[-1], vals[-1] = t, (alpha * (1 - t) + beta * t) * v
            continue
        pts.append(t)
        vals.append((alpha * (1 - t) + beta * t) * v)
    return PLFunction(tuple(pts), tuple(vals))


@dataclass(frozen=True)
class Violation:
    kind: str
    record: object
    cell: tuple
    t: object
    lhs: object
    rhs: object


@dataclass(frozen=True)
class MembershipResult:
    ok: bool
    violation: Optional[Violation] = None
    checked_records: int = 0
    vacuous_records: int = 0

    def __bool__(self):
        return self.ok


def check_membership(
    F: JoinElement, family: JoinRelationFamily, tol=0
) -> MembershipResult:
    """Whether F satisfies every relation of the family, with the first
    violation (cell, parameter, both sides) when it does not."""
    if (F.m, F.n) != (family.m, family.n):
        raise ShapeError("family shape does not match the element")
    checked = 0

    for rec in family.boundary:
        checked += 1
        if rec.side == 1:
            lhs = F.left_trace[rec.src]
            rhs = rec.coeff * F.left_trace[rec.dst]
            t = Fraction(0)
            cell = (rec.src, 0)
        else:
            lhs = F.right_trace[rec.src]
            rhs = rec.coeff * F.right_trace[rec.dst]
            t = Fraction(1)
            cell = (0, rec.src)
        if abs(lhs - rhs) > tol:
            return MembershipResult(
                False, Violation("boundary", rec, cell, t, lhs, rhs), checked
            )

    for rec in family.interior:
        checked += 1
        lhs_fn = F.cells[rec.x][rec.z]
        if rec.alpha == 0 and rec.beta == 0:
            for t, v in zip(lhs_fn.breakpoints, lhs_fn.values):
                if abs(v) > tol:
                    return MembershipResult(
                        False,
                        Violation(
                            "interior-zero", rec, (rec.x, rec.z), t, v, 0
                        ),
                        checked,
                    )
            continue
        rhs_fn = mobius_transport(F.cells[rec.y][rec.w], rec.alpha, rec.beta)
        grid = sorted(set(lhs_fn.breakpoints) | set(rhs_fn.breakpoints))
        for t in grid:
            lhs = pl_eval(lhs_fn, t)
            rhs = pl_eval(rhs_fn, t)
            if abs(lhs - rhs) > tol:
                return MembershipResult(
                    False,
                    Violation("interior", rec, (rec.x, rec.z), t, lhs, rhs),
                    checked,
                )

    return MembershipResult(True, None, checked, len(family.vacuous))


# ---------------------------------------------------------------------------
# weighted-composition homomorphisms


@dataclass(frozen=True)
class WeightedComposition:
    """T f (x) = omega[x] * f(sigma[x]), with sigma defined where omega > 0."""

    domain_size: int
    codomain_size: int
    omega: tuple
    sigma: tuple

    def __post_init__(self):
        om = tuple(coerce_scalar(w) for w in self.omega)
        sg = tuple(int(s) for s in self.sigma)
        if len(om) != self.codomain_size or len(sg) != self.codomain_size:
            raise ShapeError("omega/sigma must have codomain length")
        for k, (w, s) in enumerate(zip(om, sg)):
            if w < 0:
                raise DomainError("weights must be >= 0")
            if w > 0:
                if not (0 <= s < self.domain_size):
                    raise DomainError(f"sigma undefined at {k} where omega > 0")
            elif s != -1:
                raise DomainError(f"sigma must be -1 at {k} where omega == 0")
        object.__setattr__(self, "omega", om)
        object.__setattr__(self, "sigma", sg)

    @classmethod
    def identity(cls, size: int) -> "WeightedComposition":
        return cls(size, size, (Fraction(1),) * size, tuple(range(size)))

    @property
    def is_injective_data(self) -> bool:
        """Strictly positive weights and surjective sigma (finite criterion)."""
        return all(w > 0 for w in self.omega) and set(self.sigma) == set(
            range(self.domain_size)
        )

    def to_json_dict(self) -> dict:
        from .plfunc import scalar_to_json

        return {
            "domain_size": self.domain_size,
            "codomain_size": self.codomain_size,
            "omega": [scalar_to_json(w) for w in self.omega],
            "sigma": list(self.sigma),
        }

    @classmethod
    def from_json_dict(cls, d: dict) -> "WeightedComposition":
        return cls(d["domain_size"], d["codomain_size"], tuple(d["omega"]), tuple(d["sigma"]))


def transport_hom(
    T1: WeightedComposition, T2: WeightedComposition, F: JoinElement
) -> JoinElement:
    """Apply the join of two weighted-composition maps to F.

    Output cell (x, y) at parameter t is omega(t) * F[sigma1 x, sigma2 y](s(t))
    with omega(t) = (1-t) omega1(x) + t omega2(y) and s(t) = t omega2(y)/omega(t)
    where omega > 0, extended by continuity; exactly the Moebius transport of
    the source cell, so the output is PL with exact breakpoints."""
    if T1.domain_size != F.m or T2.domain_size != F.n:
        raise ShapeError("composition domains do not match the element shape")
    cells = []
    for x in range(T1.codomain_size):
        row = []
        a = T1.omega[x]
        for y in range(T2.codomain_size):
            b = T2.omega[y]
            if a == 0 and b == 0:
                row.append(pl_linear(0, 0))
            elif b == 0:
                row.append(pl_linear(a * F.left_trace[T1.sigma[x]], 0))
            elif a == 0:
                row.append(pl_linear(0, b * F.right_trace[T2.sigma[y]]))
            else:
                row.append(mobius_transport(F.cells[T1.sigma[x]][T2.sigma[y]], a, b))
        cells.append(row)
    return JoinElement.from_cells(cells)
