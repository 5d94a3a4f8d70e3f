import json
from fractions import Fraction

import pytest

from latjoin.join_element import (
    JoinElement,
    ShapeError,
    embed_factor1,
    embed_factor2,
    join_lattice_op,
    unit_element,
)
from latjoin.join_maps import (
    BoundaryRecord,
    InteriorRecord,
    RelationSet,
    WeightedComposition,
    check_membership,
    induced_join_relations,
    mobius_transport,
    normalize_relations,
    random_satisfying_vector,
    satisfies_relations,
    transport_hom,
)
from latjoin.plfunc import DomainError, PLFunction, pl_eval, pl_linear

from conftest import make_join


class TestRelationSet:
    def test_validation(self):
        with pytest.raises(DomainError):
            RelationSet(3, ((0, 0, 1),))
        with pytest.raises(DomainError):
            RelationSet(2, ((0, 3, 1),))
        with pytest.raises(DomainError):
            RelationSet(2, ((0, 1, -1),))

    def test_json_round_trip(self):
        M = RelationSet(4, ((0, 1, Fraction(2, 3)), (2, 3, 0)))
        d = json.loads(json.dumps(M.to_json_dict()))
        assert RelationSet.from_json_dict(d) == M
        assert d["triples"][0][2] == "2/3"


class TestNormalize:
    def test_conflict_becomes_zero_pair(self):
        M = RelationSet(3, ((0, 1, 2), (0, 1, 1)))
        N = normalize_relations(M)
        assert set(N.triples) == {(0, 1, Fraction(0)), (1, 0, Fraction(0))}

    def test_normalized_unchanged(self):
        M = RelationSet(4, ((0, 1, Fraction(1, 2)), (2, 3, 3)))
        assert normalize_relations(M) == M

    def test_single_triple_unchanged(self):
        M = RelationSet(2, ((0, 1, 3),))
        assert normalize_relations(M).triples == ((0, 1, Fraction(3)),)

    def test_cascading_conflicts_stabilize(self):
        M = RelationSet(2, ((0, 1, 1), (0, 1, 2), (1, 0, 5)))
        N = normalize_relations(M)
        assert set(N.triples) == {(0, 1, Fraction(0)), (1, 0, Fraction(0))}
        assert N.is_normalized


class TestSolving:
    def test_solutions_satisfy(self, rng):
        for _ in range(200):
            size = rng.randint(1, 6)
            triples = []
            for _ in range(rng.randint(0, 5)):
                if size < 2:
                    break
                x, y = rng.sample(range(size), 2)
                triples.append((x, y, Fraction(rng.randint(0, 4), rng.randint(1, 3))))
            M = normalize_relations(RelationSet(size, triples))
            g = random_satisfying_vector(M, rng)
            assert satisfies_relations(g, M)

    def test_nontrivial_solutions_exist(self, rng):
        M = RelationSet(3, ((0, 1, 2),))
        seen_nonzero = any(
            any(v != 0 for v in random_satisfying_vector(M, rng)) for _ in range(20)
        )
        assert seen_nonzero

    def test_inconsistent_cycle_zeroes_out(self, rng):
        M = RelationSet(2, ((0, 1, 2), (1, 0, 2)))  # g0 = 2 g1 = 4 g0
        g = random_satisfying_vector(M, rng)
        assert g == (0, 0)


class TestInducedFamily:
    def test_empty_inputs_have_no_records(self):
        fam = induced_join_relations(RelationSet(2, ()), RelationSet(3, ()))
        assert fam.interior == () and fam.boundary == ()
        assert (fam.m, fam.n) == (2, 3)

    def test_single_first_factor_relation(self):
        fam = induced_join_relations(RelationSet(2, ((0, 1, 1),)), RelationSet(2, ()))
        assert fam.interior == ()
        assert fam.boundary == (BoundaryRecord(1, 0, 1, Fraction(1)),)

    def test_pair_produces_interior_record(self):
        fam = induced_join_relations(
            RelationSet(2, ((0, 1, Fraction(3)),)), RelationSet(2, ((0, 1, Fraction(2)),))
        )
        assert fam.interior == (
            InteriorRecord(0, 0, 1, 1, Fraction(3), Fraction(2)),
        )
        assert len(fam.boundary) == 2

    def test_vacuous_records_reported(self):
        fam = induced_join_relations(
            RelationSet(2, ((0, 1, 1),)), RelationSet(2, ((0, 1, 0),))
        )
        assert fam.vacuous
        assert "arbitrary" in fam.vacuous[0].reason


class TestMobius:
    def test_identity_coefficients(self):
        G = PLFunction((0, Fraction(1, 3), 1), (2, -1, 5))
        assert mobius_transport(G, 1, 1) == G

    def test_matches_pointwise_formula(self, rng):
        for _ in range(60):
            bps = [Fraction(0)] + sorted(
                {Fraction(rng.randint(1, 15), 16) for _ in range(rng.randint(0, 3))}
            ) + [Fraction(1)]
            G = PLFunction(tuple(bps), tuple(Fraction(rng.randint(-8, 8)) for _ in bps))
            alpha = Fraction(rng.randint(1, 5), rng.randint(1, 3))
            beta = Fraction(rng.randint(1, 5), rng.randint(1, 3))
            H = mobius_transport(G, alpha, beta)
            for _ in range(25):
                t = Fraction(rng.randint(0, 64), 64)
                lam = alpha * (1 - t) + beta * t
                s = beta * t / lam
                assert pl_eval(H, t) == lam * pl_eval(G, s)

    def test_degenerate_sides(self):
        G = PLFunction((0, Fraction(1, 2), 1), (4, 9, -6))
        assert mobius_transport(G, 2, 0) == pl_linear(8, 0)
        assert mobius_transport(G, 0, 3) == pl_linear(0, -18)
        assert mobius_transport(G, 0, 0) == pl_linear(0, 0)

    def test_negative_rejected(self):
        with pytest.raises(DomainError):
            mobius_transport(pl_linear(0, 1), -1, 1)


class TestMembership:
    def test_embedded_admissible_accepted(self, rng):
        for _ in range(60):
            m, n = rng.randint(1, 4), rng.randint(1, 4)
            M1 = normalize_relations(RelationSet(m, [
                (x, y, Fraction(rng.randint(0, 3)))
                for x, y in (rng.sample(range(m), 2) for _ in range(rng.randint(0, 3)))
            ] if m >= 2 else []))
            M2 = normalize_relations(RelationSet(n, [
                (x, y, Fraction(rng.randint(0, 3)))
                for x, y in (rng.sample(range(n), 2) for _ in range(rng.randint(0, 3)))
            ] if n >= 2 else []))
            fam = induced_join_relations(M1, M2)
            g = random_satisfying_vector(M1, rng)
            h = random_satisfying_vector(M2, rng)
            Fg, Fh = embed_factor1(g, n), embed_factor2(h, m)
            assert check_membership(Fg, fam).ok
            assert check_membership(Fh, fam).ok
            assert check_membership(join_lattice_op("max", Fg, Fh), fam).ok
            assert check_membership(join_lattice_op("min", Fg, Fh), fam).ok

    def test_constant_one_violates_scaling_relation(self):
        fam = induced_join_relations(
            RelationSet(2, ((0, 1, 2),)), RelationSet(1, ())
        )
        res = check_membership(unit_element(2, 1), fam)
        assert not res.ok
        v = res.violation
        assert v.kind == "boundary" and v.t == 0
        assert v.lhs == 1 and v.rhs == 2

    def test_zero_element_satisfies_everything(self, rng):
        fam = induced_join_relations(
            RelationSet(2, ((0, 1, 3), (1, 0, 0))),
            RelationSet(2, ((0, 1, Fraction(1, 2)),)),
        )
        Z = embed_factor1([0, 0], 2)
        assert check_membership(Z, fam).ok

    def test_violation_witness_is_correct(self, rng):
        for _ in range(40):
            m = rng.randint(2, 4)
            n = rng.randint(1, 3)
            x, y = rng.sample(range(m), 2)
            M1 = RelationSet(m, ((x, y, Fraction(rng.randint(1, 3))),))
            fam = induced_join_relations(M1, RelationSet(n, ()))
            g = list(random_satisfying_vector(M1, rng))
            g[x] += 1
            res = check_membership(embed_factor1(g, n), fam)
            assert not res.ok
            assert res.violation.lhs != res.violation.rhs

    def test_interior_violation_reports_parameter(self, rng):
        # element agreeing at traces but broken inside the edge
        M1 = RelationSet(2, ((0, 1, 1),))
        M2 = RelationSet(2, ((0, 1, 1),))
        fam = induced_join_relations(M1, M2)
        bump = PLFunction((0, Fraction(1, 2), 1), (0, 1, 0))
        flat = pl_linear(0, 0)
        F = JoinElement(((bump, flat), (flat, flat)), (0, 0), (0, 0))
        res = check_membership(F, fam)
        assert not res.ok
        assert res.violation.kind in ("interior", "interior-zero")
        assert 0 < res.violation.t < 1

    def test_shape_mismatch(self, rng):
        fam = induced_join_relations(RelationSet(2, ()), RelationSet(2, ()))
        with pytest.raises(ShapeError):
            check_membership(make_join(rng, m=3, n=2), fam)

    def test_lattice_expressions_of_admissible_vectors(self, rng):
        # richer lattice expressions stay inside the constrained sublattice
        M1 = RelationSet(3, ((0, 1, 2),))
        M2 = RelationSet(2, ((1, 0, Fraction(1, 2)),))
        fam = induced_join_relations(M1, M2)
        for _ in range(20):
            g1 = random_satisfying_vector(M1, rng)
            g2 = random_satisfying_vector(M1, rng)
            h = random_satisfying_vector(M2, rng)
            E = join_lattice_op(
                "max",
                join_lattice_op("min", embed_factor1(g1, 2), embed_factor1(g2, 2)),
                join_lattice_op("scale", embed_factor2(h, 3), Fraction(2)),
            )
            assert check_membership(E, fam).ok


class TestWeightedComposition:
    def test_validation(self):
        with pytest.raises(DomainError):
            WeightedComposition(2, 1, (1,), (5,))
        with pytest.raises(DomainError):
            WeightedComposition(2, 1, (0,), (0,))
        with pytest.raises(DomainError):
            WeightedComposition(2, 1, (-1,), (0,))
        with pytest.raises(ShapeError):
            WeightedComposition(2, 2, (1,), (0, 1))

    def test_json_round_trip(self):
        T = WeightedComposition(3, 2, (Fraction(1, 2), Fraction(0)), (2, -1))
        d = json.loads(json.dumps(T.to_json_dict()))
        assert WeightedComposition.from_json_dict(d) == T

    def test_identity_data_detection(self):
        assert WeightedComposition.identity(3).is_injective_data
        assert not WeightedComposition(2, 2, (1, 1), (0, 0)).is_injective_data


class TestTransport:
    def test_identity_is_identity(self, rng):
        for _ in range(15):
            F = make_join(rng, m=2, n=3)
            out = transport_hom(
                WeightedComposition.identity(2), WeightedComposition.identity(3), F
            )
            assert out == F

    def test_weight_two_formula(self):
        out = transport_hom(
            WeightedComposition(1, 1, (Fraction(2),), (0,)),
            WeightedComposition.identity(1),
            unit_element(1, 1),
        )
        for t in (0, Fraction(1, 4), Fraction(2, 3), 1):
            assert pl_eval(out.cells[0][0], t) == 2 - t

    def test_lattice_homomorphism_at_samples(self, rng):
        for _ in range(25):
            m, n = rng.randint(1, 3), rng.randint(1, 3)
            F = make_join(rng, m=m, n=n)
            G = make_join(rng, m=m, n=n)
            T1 = WeightedComposition(
                m, m,
                tuple(Fraction(rng.randint(1, 4)) for _ in range(m)),
                tuple(rng.randrange(m) for _ in range(m)),
            )
            T2 = WeightedComposition(
                n, n,
                tuple(Fraction(rng.randint(1, 4)) for _ in range(n)),
                tuple(rng.randrange(n) for _ in range(n)),
            )
            lhs = transport_hom(T1, T2, join_lattice_op("max", F, G))
            rhs = join_lattice_op(
                "max", transport_hom(T1, T2, F), transport_hom(T1, T2, G)
            )
            for _ in range(40):
                i, j = rng.randrange(m), rng.randrange(n)
                t = Fraction(rng.randint(0, 48), 48)
                assert pl_eval(lhs.cells[i][j], t) == pl_eval(rhs.cells[i][j], t)

    def test_injective_data_preserves_nonzero(self, rng):
        from latjoin.norms import sup_norm

        for _ in range(30):
            m, n = rng.randint(1, 3), rng.randint(1, 3)
            F = make_join(rng, m=m, n=n)
            if sup_norm(F) == 0:
                continue
            T1 = WeightedComposition(
                m, m,
                tuple(Fraction(rng.randint(1, 3)) for _ in range(m)),
                tuple(rng.sample(range(m), m)),
            )
            T2 = WeightedComposition(
                n, n,
                tuple(Fraction(rng.randint(1, 3)) for _ in range(n)),
                tuple(rng.sample(range(n), n)),
            )
            assert T1.is_injective_data and T2.is_injective_data
            assert sup_norm(transport_hom(T1, T2, F)) > 0

    def test_zero_weight_collapses(self):
        F = unit_element(2, 2)
        T1 = WeightedComposition(2, 2, (Fraction(1), Fraction(0)), (0, -1))
        T2 = WeightedComposition.identity(2)
        out = transport_hom(T1, T2, F)
        assert out.left_trace == (1, 0)

    def test_shape_mismatch(self, rng):
        F = make_join(rng, m=2, n=2)
        with pytest.raises(ShapeError):
            transport_hom(WeightedComposition.identity(3), WeightedComposition.identity(2), F)

    def test_rational_breakpoints_stay_rational(self, rng):
        for _ in range(10):
            F = make_join(rng, m=2, n=2)
            T1 = WeightedComposition(2, 2, (Fraction(3), Fraction(1, 2)), (1, 0))
            T2 = WeightedComposition(2, 2, (Fraction(2, 3), Fraction(5)), (0, 1))
            out = transport_hom(T1, T2, F)
            for row in out.cells:
                for f in row:
                    assert f.is_exact
