"""Finite simplicial complexes, join constructions, and integer homology.

Complexes are given by generating facets; faces are the downward closure.
Homology is reduced: the degree-0 boundary map is the augmentation onto the
empty simplex, so b~_k = (#k-faces) - rank d_k - rank d_{k+1} and the
torsion in degree k is the set of elementary divisors > 1 of d_{k+1}.  All
matrix work runs through the exact integer Smith normal form engine, so
Betti numbers and torsion coefficients are certified, not floating-point.

The join of two complexes (all unions of a facet of each) realizes the
topological join; cone and suspension are joins with one and two points,
and joining spheres adds their dimensions plus one.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, Iterable, Sequence, Tuple


class FacetError(ValueError):
    """Malformed facet list."""


class ParseError(ValueError):
    """Unreadable facet file; message names the offending line."""


@dataclass(frozen=True)
class HomologyProfile:
    """Reduced Betti numbers per degree plus torsion divisors per degree."""

    betti: tuple
    torsion: dict = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "betti", tuple(int(b) for b in self.betti))
        tors = {
            int(k): tuple(int(d) for d in v) for k, v in self.torsion.items() if v
        }
        for divs in tors.values():
            for a, b in zip(divs, divs[1:]):
                if b % a != 0:
                    raise FacetError("torsion divisors must form a chain")
        object.__setattr__(self, "torsion", tors)

    def __eq__(self, other):
        if not isinstance(other, HomologyProfile):
            return NotImplemented
        return self.betti == other.betti and self.torsion == other.torsion

    @classmethod
    def sphere(cls, d: int) -> "HomologyProfile":
        """Profile of the d-sphere: one reduced class in top degree."""
        if d < 0:
            raise FacetError("d must be >= 0")
        return cls((0,) * d + (1,), {})

    @classmethod
    def acyclic(cls, dim: int) -> "HomologyProfile":
        return cls((0,) * (dim + 1), {})

    def to_json_dict(self) -> dict:
        return {
            "betti": list(self.betti),
            "torsion": {str(k): list(v) for k, v in sorted(self.torsion.items())},
        }


@dataclass(frozen=True)
class SimplicialComplex:
    """Abstract complex generated by facets (maximal faces are kept)."""

    vertex_count: int
    facets: tuple
    _faces: dict = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        cleaned = set()
        for f in self.facets:
            fs = tuple(sorted(int(v) for v in f))
            if len(set(fs)) != len(fs):
                raise FacetError(f"repeated vertex in facet {f}")
            if not fs:
                raise FacetError("empty facet")
            if fs[0] < 0 or fs[-1] >= self.vertex_count:
                raise FacetError(f"facet {f} outside vertex range")
            cleaned.add(fs)
        maximal = tuple(
            sorted(
                f
                for f in cleaned
                if not any(f != g and set(f) <= set(g) for g in cleaned)
            )
        )
        object.__setattr__(self, "facets", maximal)
        object.__setattr__(self, "_faces", {})

    @classmethod
    def from_facets(cls, facets: Iterable[Sequence[int]]) -> "SimplicialComplex":
        facets = [tuple(f) for f in facets]
        count = 1 + max((max(f) for f in facets if f), default=-1)
        return cls(count, tuple(facets))

    @property
    def dim(self) -> int:
        return max((len(f) - 1 for f in self.facets), default=-1)

    @property
    def is_empty(self) -> bool:
        return not self.facets

    def faces(self, k: int) -> Tuple[tuple, ...]:
        """All k-faces, sorted lexicographically."""
        if k < 0 or k > self.dim:
            return ()
        cache = self._faces
        if k not in cache:
            found = set()
            for f in self.facets:
                if len(f) >= k + 1:
                    found.update(combinations(f, k + 1))
            cache[k] = tuple(sorted(found))
        return cache[k]

    def face_counts(self) -> list[int]:
        return [len(self.faces(k)) for k in range(self.dim + 1)]

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * n for k, n in enumerate(self.face_counts()))


def point_complex() -> SimplicialComplex:
    return SimplicialComplex(1, ((0,),))


def empty_complex() -> SimplicialComplex:
    return SimplicialComplex(0, ())


def sphere_complex(d: int) -> SimplicialComplex:
    """Boundary of the (d+1)-simplex: the minimal triangulated d-sphere."""
    if d < 0:
        raise FacetError("d must be >= 0")
    verts = range(d + 2)
    return SimplicialComplex(d + 2, tuple(combinations(verts, d + 1)))


def join_complex(K: SimplicialComplex, L: SimplicialComplex) -> SimplicialComplex:
    """Simplicial join: facets are unions of a facet of each factor."""
    if K.is_empty:
        return L
    if L.is_empty:
        return K
    shift = K.vertex_count
    facets = tuple(
        sigma + tuple(v + shift for v in tau) for sigma in K.facets for tau in L.facets
    )
    return SimplicialComplex(K.vertex_count + L.vertex_count, facets)


def cone(K: SimplicialComplex) -> SimplicialComplex:
    return join_complex(K, point_complex())


def suspension(K: SimplicialComplex) -> SimplicialComplex:
    return join_complex(K, sphere_complex(0))


def _boundary_entries(K: SimplicialComplex, k: int):
    """Sparse entries of d_k plus its shape; d_0 is the augmentation row."""
    if k < 0 or k > K.dim:
        raise FacetError(f"no boundary map in degree {k}")
    cols = K.faces(k)
    if k == 0:
        return [(0, j, 1) for j in range(len(cols))], 1, len(cols)
    rows_index: Dict[tuple, int] = {f: i for i, f in enumerate(K.faces(k - 1))}
    entries = []
    for j, face in enumerate(cols):
        sign = 1
        for drop in range(len(face)):
            sub = face[:drop] + face[drop + 1 :]
            entries.append((rows_index[sub], j, sign))
            sign = -sign
    return entries, len(rows_index), len(cols)


def boundary_matrix(K: SimplicialComplex, k: int) -> list[list[int]]:
    """Dense boundary matrix in degree k (rows: (k-1)-faces, cols: k-faces),
    with the alternating-sign rule on sorted vertex lists."""
    entries, nrows, ncols = _boundary_entries(K, k)
    M = [[0] * ncols for _ in range(nrows)]
    for i, j, v in entries:
        M[i][j] = v
    return M


def homology(K: SimplicialComplex) -> HomologyProfile:
    """Reduced integer homology via Smith normal form of the boundary maps."""
    from .snf import smith_normal_form_sparse

    if K.is_empty:
        return HomologyProfile((), {})
    dim = K.dim
    ranks = [0] * (dim + 2)
    divisors = [()] * (dim + 2)
    for k in range(dim + 1):
        entries, nrows, ncols = _boundary_entries(K, k)
        divs, rank = smith_normal_form_sparse(entries, nrows, ncols)
        ranks[k] = rank
        divisors[k] = divs
    betti = []
    torsion = {}
    for k in range(dim + 1):
        betti.append(len(K.faces(k)) - ranks[k] - ranks[k + 1])
        tors = tuple(d for d in divisors[k + 1] if d > 1)
        if tors:
            torsion[k] = tors
    return HomologyProfile(tuple(betti), torsion)


def pseudo_manifold_check(K: SimplicialComplex) -> tuple[bool, str]:
    """Closed pseudo-manifold test: pure top dimension and every ridge
    ((d-1)-face) contained in exactly two facets."""
    if K.is_empty:
        return False, "empty complex"
    d = K.dim
    if any(len(f) != d + 1 for f in K.facets):
        return False, "facets of mixed dimension"
    ridge_count: Dict[tuple, int] = {}
    for f in K.facets:
        for drop in range(len(f)):
            ridge = f[:drop] + f[drop + 1 :]
            ridge_count[ridge] = ridge_count.get(ridge, 0) + 1
    bad = [r for r, c in ridge_count.items() if c != 2]
    if bad:
        return False, f"{len(bad)} ridges not in exactly two facets"
    return True, f"closed pseudo-manifold of dimension {d}"


# ---------------------------------------------------------------------------
# facet-list files: one facet per line, whitespace-separated 0-based vertex
# ids, '#' starts a comment


def load_complex(path) -> SimplicialComplex:
    facets = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            try:
                ids = tuple(int(tok) for tok in line.split())
            except ValueError:
                raise ParseError(f"{path}: line {lineno}: not an integer list")
            if len(set(ids)) != len(ids):
                raise ParseError(f"{path}: line {lineno}: repeated vertex id")
            if any(v < 0 for v in ids):
                raise ParseError(f"{path}: line {lineno}: negative vertex id")
            facets.append(ids)
    if not facets:
        raise ParseError(f"{path}: no facets")
    used = sorted({v for f in facets for v in f})
    if used != list(range(len(used))):
        missing = sorted(set(range(used[-1] + 1)) - set(used))
        raise ParseError(f"{path}: vertex ids have gaps (missing {missing[:5]})")
    return SimplicialComplex.from_facets(facets)


def save_complex(K: SimplicialComplex, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for f in K.facets:
            fh.write(" ".join(str(v) for v in f) + "\n")
