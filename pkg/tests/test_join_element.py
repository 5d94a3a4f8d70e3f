import json
import math
from fractions import Fraction

import pytest

from latjoin.join_element import (
    JoinElement,
    ShapeError,
    SimplexSample,
    TraceError,
    embed_factor1,
    embed_factor2,
    factor_projection,
    join_lattice_op,
    simplex_grid,
    unit_element,
)
from latjoin.plfunc import PLFunction, pl_equal, pl_eval, pl_linear

from conftest import make_join


class TestEmbeddings:
    def test_single_cell_generator(self):
        F = embed_factor1([1], 1)
        assert F.cells[0][0] == pl_linear(1, 0)

    def test_second_factor_generator(self):
        F = embed_factor2([1], 1)
        assert F.cells[0][0] == pl_linear(0, 1)

    def test_zero_vector(self):
        F = embed_factor1([0, 0], 2)
        assert all(v == 0 for row in F.cells for f in row for v in f.values)

    def test_rows_constant_in_second_index(self):
        F = embed_factor1([1, -2], 3)
        assert F.m == 2 and F.n == 3
        for i in range(2):
            for j in range(3):
                assert F.cells[i][j] == F.cells[i][0]

    def test_unit_element_is_constant_one(self):
        e = unit_element(2, 3)
        for row in e.cells:
            for f in row:
                for t in (0, Fraction(1, 3), Fraction(1, 2), 1):
                    assert pl_eval(f, t) == 1

    def test_needs_positive_dims(self):
        with pytest.raises(ShapeError):
            embed_factor1([], 2)
        with pytest.raises(ShapeError):
            embed_factor1([1], 0)


class TestLatticeOps:
    def test_max_of_unit_embeddings(self):
        F = join_lattice_op("max", embed_factor1([1, 1], 2), embed_factor2([1, 1], 2))
        expected = PLFunction((0, Fraction(1, 2), 1), (1, Fraction(1, 2), 1))
        for row in F.cells:
            for f in row:
                assert pl_equal(f, expected)

    def test_difference_with_self_is_zero(self, rng):
        F = make_join(rng, m=2, n=2)
        Z = join_lattice_op("sub", F, F)
        assert all(v == 0 for row in Z.cells for f in row for v in f.values)

    def test_abs_commutes_with_embedding(self):
        a = [3, -5, 0]
        lhs = join_lattice_op("abs", embed_factor1(a, 2))
        rhs = embed_factor1([abs(v) for v in a], 2)
        for lrow, rrow in zip(lhs.cells, rhs.cells):
            for f, g in zip(lrow, rrow):
                assert pl_equal(f, g)

    def test_scale(self):
        F = embed_factor1([2, -4], 2)
        G = join_lattice_op("scale", F, Fraction(-1, 2))
        assert G.left_trace == (-1, 2)

    def test_shape_mismatch(self, rng):
        F = make_join(rng, m=2, n=2)
        G = make_join(rng, m=2, n=3)
        with pytest.raises(ShapeError):
            join_lattice_op("add", F, G)

    def test_trace_consistency_preserved(self, rng):
        for _ in range(20):
            F = make_join(rng, m=2, n=3)
            G = make_join(rng, m=2, n=3)
            for op in ("add", "sub", "max", "min"):
                H = join_lattice_op(op, F, G)
                for i in range(2):
                    for j in range(3):
                        assert H.cells[i][j].values[0] == H.left_trace[i]
                        assert H.cells[i][j].values[-1] == H.right_trace[j]


class TestTraces:
    def test_mismatched_traces_rejected(self):
        cell = pl_linear(1, 0)
        with pytest.raises(TraceError):
            JoinElement(((cell,),), (2,), (0,))
        with pytest.raises(TraceError):
            JoinElement(((cell,),), (1,), (5,))

    def test_from_cells_rejects_incompatible_matrix(self):
        # two cells of one row must share their value at t = 0
        with pytest.raises(TraceError):
            JoinElement.from_cells([[pl_linear(1, 0), pl_linear(2, 0)]])

    def test_ragged_rejected(self):
        c = pl_linear(0, 0)
        with pytest.raises(ShapeError):
            JoinElement(((c, c), (c,)), (0, 0), (0, 0))


class TestProjection:
    def test_fixes_its_range(self):
        F = embed_factor1([1, -3], 2)
        assert factor_projection(F, 1) == F

    def test_kills_other_factor(self):
        F = embed_factor2([4, 5], 3)
        P = factor_projection(F, 1)
        assert all(v == 0 for row in P.cells for f in row for v in f.values)

    def test_idempotent(self, rng):
        F = make_join(rng, m=3, n=2)
        P = factor_projection(F, 2)
        assert factor_projection(P, 2) == P

    def test_bad_index(self, rng):
        with pytest.raises(Exception):
            factor_projection(make_join(rng), 3)


class TestJson:
    def test_round_trip(self, rng):
        F = make_join(rng, m=2, n=2)
        data = json.loads(json.dumps(F.to_json_dict()))
        G = JoinElement.from_json_dict(data)
        assert G == F

    def test_load_rejects_incompatible_endpoints(self):
        d = {
            "m": 2,
            "n": 1,
            "cells": [
                [{"t": [0, 1], "v": [1, 0]}],
                [{"t": [0, 1], "v": [1, 2]}],  # fine: traces derived per row
            ],
        }
        # cell (1,0) ends at 2 while cell (0,0) ends at 0: right traces clash
        with pytest.raises(TraceError):
            JoinElement.from_json_dict(d)

    def test_load_rejects_wrong_declared_shape(self):
        d = {"m": 3, "n": 1, "cells": [[{"t": [0, 1], "v": [0, 0]}]]}
        with pytest.raises(ShapeError):
            JoinElement.from_json_dict(d)


class TestSimplexSample:
    def test_grid_cardinality(self):
        for n, d in [(1, 5), (2, 7), (3, 4), (4, 3)]:
            pts = list(simplex_grid(n, d))
            assert len(pts) == math.comb(d + n - 1, n - 1)
            assert all(sum(p) == 1 and all(c >= 0 for c in p) for p in pts)

    def test_vertices_present(self):
        pts = set(simplex_grid(3, 6))
        for i in range(3):
            e = tuple(Fraction(int(i == j)) for j in range(3))
            assert e in pts

    def test_coordinate_sample(self):
        s = SimplexSample.coordinate(2, 4, 0)
        for p, v in zip(s.points, s.values):
            assert v == p[0]

    def test_bad_point_count(self):
        with pytest.raises(Exception):
            SimplexSample(2, 2, ((Fraction(1), Fraction(0)),), (1,))

    def test_zero_dimensional(self):
        s = SimplexSample.from_function(1, 3, lambda p: p[0])
        assert s.points == ((Fraction(1),),)
