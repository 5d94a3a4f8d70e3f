import random
from fractions import Fraction

import pytest

from latjoin.lp import LPError, solve_min_nonneg


def test_two_variable_unit_constraints():
    res = solve_min_nonneg(
        [Fraction(1), Fraction(1)], [[(0, Fraction(1))], [(1, Fraction(1))]],
        [Fraction(1), Fraction(1)],
    )
    assert res.value == 2
    assert res.x == [1, 1]
    assert res.exact


def test_alternative_optima_accept_any_witness():
    # a >= 0, (a+b)/2 >= 1, b >= 0: optimum 2 along a segment
    res = solve_min_nonneg(
        [Fraction(1), Fraction(1)],
        [[(0, Fraction(1))], [(0, Fraction(1, 2)), (1, Fraction(1, 2))], [(1, Fraction(1))]],
        [Fraction(0), Fraction(1), Fraction(0)],
    )
    assert res.value == 2
    assert res.x[0] + res.x[1] == 2


def test_zero_rhs_gives_zero():
    res = solve_min_nonneg([Fraction(2), Fraction(3)], [[(0, 1), (1, 1)]], [Fraction(0)])
    assert res.value == 0


def test_empty_problem():
    res = solve_min_nonneg([Fraction(1)], [], [])
    assert res.value == 0 and res.x == [0]


def test_float_mode_detected():
    res = solve_min_nonneg([1.0, 1.0], [[(0, 0.5), (1, 0.5)]], [1.0])
    assert not res.exact
    assert abs(res.value - 2.0) < 1e-9


def test_negative_cost_rejected():
    with pytest.raises(LPError):
        solve_min_nonneg([Fraction(-1)], [[(0, Fraction(1))]], [Fraction(1)])


def test_infeasible_detected():
    # constraint with no positive coefficient and positive rhs
    with pytest.raises(LPError):
        solve_min_nonneg([Fraction(1)], [[(0, Fraction(0))]], [Fraction(1)])


def test_random_instances_certified_by_duality():
    rng = random.Random(42)
    for _ in range(150):
        nvars = rng.randint(1, 5)
        ncons = rng.randint(1, 8)
        c = [Fraction(rng.randint(0, 6)) for _ in range(nvars)]
        rows, b = [], []
        for _ in range(ncons):
            support = rng.sample(range(nvars), k=rng.randint(1, nvars))
            row = [(j, Fraction(rng.randint(1, 5))) for j in support]
            rows.append(row)
            b.append(Fraction(rng.randint(0, 9)))
        res = solve_min_nonneg(c, rows, b)
        # primal feasibility
        for row, bk in zip(rows, b):
            assert sum(v * res.x[j] for j, v in row) >= bk
        # dual feasibility and zero gap certify optimality
        lhs = [Fraction(0)] * nvars
        for k, row in enumerate(rows):
            for j, v in row:
                lhs[j] += v * res.y[k]
        assert all(l <= cj for l, cj in zip(lhs, c))
        assert sum(bk * yk for bk, yk in zip(b, res.y)) == res.value
        assert sum(cj * xj for cj, xj in zip(c, res.x)) == res.value
