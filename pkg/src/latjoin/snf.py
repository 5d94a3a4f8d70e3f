"""Smith normal form of integer matrices by sparse fraction-free elimination.

Pivots are chosen among the shortest active rows, preferring entries of
minimal absolute value and minimal fill (Markowitz cost).  When a pivot
does not divide an entry in its row or column, a Euclidean row/column step
replaces the pivot by the (strictly smaller) remainder, so every step stays
integral and arbitrary-precision ints rule out overflow.  After full
diagonalization the diagonal is normalized into a divisibility chain by
pairwise gcd/lcm exchanges, which preserves the cokernel.
"""

from __future__ import annotations

import heapq
from math import gcd
from typing import Dict, Iterable, Sequence, Set, Tuple

Entry = Tuple[int, int, int]  # row, col, value


def smith_normal_form(matrix: Sequence[Sequence[int]]) -> tuple[list[int], int]:
    """Elementary divisors d_1 | d_2 | ... | d_r and the rank of an integer
    matrix given as a dense list of rows."""
    nrows = len(matrix)
    ncols = len(matrix[0]) if nrows else 0
    entries = [
        (i, j, int(v))
        for i, row in enumerate(matrix)
        for j, v in enumerate(row)
        if v != 0
    ]
    if any(len(row) != ncols for row in matrix):
        raise ValueError("ragged matrix")
    return smith_normal_form_sparse(entries, nrows, ncols)


def smith_normal_form_sparse(
    entries: Iterable[Entry], nrows: int, ncols: int
) -> tuple[list[int], int]:
    rows: Dict[int, Dict[int, int]] = {}
    cols: Dict[int, Set[int]] = {}
    for i, j, v in entries:
        if v == 0:
            continue
        if not (0 <= i < nrows and 0 <= j < ncols):
            raise ValueError("entry out of range")
        r = rows.setdefault(i, {})
        r[j] = r.get(j, 0) + v
        if r[j] == 0:
            del r[j]
        else:
            cols.setdefault(j, set()).add(i)
    for j in list(cols):
        cols[j] = {i for i in cols[j] if j in rows.get(i, ())}
        if not cols[j]:
            del cols[j]
    for i in list(rows):
        if not rows[i]:
            del rows[i]

    pivots: list[int] = []

    def set_entry(i: int, j: int, v: int):
        r = rows.get(i)
        if v == 0:
            if r is not None and j in r:
                del r[j]
                if not r:
                    del rows[i]
                c = cols[j]
                c.discard(i)
                if not c:
                    del cols[j]
        else:
            if r is None:
                r = rows[i] = {}
            r[j] = v
            cols.setdefault(j, set()).add(i)

    def row_axpy(k: int, i: int, q: int):
        """row_k -= q * row_i (unimodular for integer q)."""
        for j, v in list(rows[i].items()):
            cur = rows.get(k, {}).get(j, 0)
            set_entry(k, j, cur - q * v)

    def col_axpy(c: int, j: int, q: int):
        """col_c -= q * col_j."""
        for k in list(cols.get(j, ())):
            cur = rows.get(k, {}).get(c, 0)
            set_entry(k, c, cur - q * rows[k][j])

    def pick_pivot():
        short = heapq.nsmallest(25, rows.items(), key=lambda kv: len(kv[1]))
        best = None
        for i, r in short:
            for j, v in r.items():
                av = abs(v)
                cost = (len(r) - 1) * (len(cols[j]) - 1)
                key = (av, cost)
                if best is None or key < best[0]:
                    best = (key, i, j)
                    if key == (1, 0):
                        return best[1], best[2]
        return best[1], best[2]

    while rows:
        i, j = pick_pivot()
        # Euclidean phase: shrink the pivot until it divides its row and
        # column; each replacement strictly decreases |pivot|.
        while True:
            v = rows[i][j]
            moved = False
            for k in list(cols[j]):
                if k == i:
                    continue
                val = rows[k][j]
                if val % v != 0:
                    row_axpy(k, i, val // v)
                    i = k
                    moved = True
                    break
            if moved:
                continue
            for c in list(rows[i]):
                if c == j:
                    continue
                val = rows[i][c]
                if val % v != 0:
                    col_axpy(c, j, val // v)
                    j = c
                    moved = True
                    break
            if not moved:
                break
        v = rows[i][j]
        for k in list(cols[j]):
            if k != i:
                row_axpy(k, i, rows[k][j] // v)
        # column j is now zero outside the pivot, so clearing row i with
        # column operations touches no other entry: just drop the row.
        for c in list(rows[i]):
            if c != j:
                set_entry(i, c, 0)
        set_entry(i, j, 0)
        pivots.append(abs(v))

    return _divisor_chain(pivots), len(pivots)


def _divisor_chain(values: list[int]) -> list[int]:
    """Normalize positive diagonal entries into a divisibility chain."""
    d = sorted(values)
    changed = True
    while changed:
        changed = False
        for a in range(len(d)):
            for b in range(a + 1, len(d)):
                if d[b] % d[a] != 0:
                    g = gcd(d[a], d[b])
                    d[a], d[b] = g, d[a] * d[b] // g
                    changed = True
        if changed:
            d.sort()
    return d
