import json

import pytest

from balleans.groups import (
    AsdimReport,
    CardinalToken,
    FAGSubgroup,
    FiniteAbelianGroup,
    GroupDescriptor,
    OMEGA,
    PruferSubgroup,
    ReducedTorsionPart,
    ZERO,
    all_subgroups,
    asdim_classify,
    component_census,
    descriptor_finite_sylow,
    descriptor_free,
    descriptor_prufer_sum,
    descriptor_rationals,
    fag_log_distance,
    iso_points_classify,
    prufer_log_distance,
)
from balleans.lattices import ExtNat, INFINITE
from oracles import all_subgroup_element_sets, closure, element_count_mu


class TestFiniteAbelianGroup:
    def test_invariant_factor_validation(self):
        with pytest.raises(ValueError):
            FiniteAbelianGroup((4, 2))  # no divisibility chain
        with pytest.raises(ValueError):
            FiniteAbelianGroup((1,))

    def test_from_orders_canonicalizes(self):
        g = FiniteAbelianGroup.from_orders([6, 4])
        assert g.invariant_factors == (2, 12)
        assert g.order == 24 and g.exponent == 12

    def test_arithmetic(self):
        g = FiniteAbelianGroup((2, 4))
        assert g.add((1, 3), (1, 2)) == (0, 1)
        assert g.neg((1, 1)) == (1, 3)
        assert g.element_order((0, 1)) == 4
        assert len(list(g.elements())) == 8


class TestFAGSubgroup:
    def test_generated_fixture(self):
        g = FiniteAbelianGroup((12,))
        s = FAGSubgroup.from_elements(g, [4])
        assert s.elements() == closure(g, [4]) == frozenset({(0,), (4,), (8,)})
        assert s.order == 3

    def test_trivial_and_whole(self):
        g = FiniteAbelianGroup((2, 4))
        assert FAGSubgroup.trivial(g).order == 1
        assert FAGSubgroup.whole(g).order == 8
        assert FAGSubgroup.from_elements(g, [(1, 0), (0, 1)]).order == 8

    def test_distance_fixtures(self):
        g = FiniteAbelianGroup((12,))
        a = FAGSubgroup.from_elements(g, [2])
        b = FAGSubgroup.from_elements(g, [3])
        assert fag_log_distance(a, b) == ExtNat.finite(3)
        assert fag_log_distance(a, a) == ExtNat.finite(1)
        g2 = FiniteAbelianGroup((2, 2))
        x = FAGSubgroup.from_elements(g2, [(1, 0)])
        y = FAGSubgroup.from_elements(g2, [(0, 1)])
        assert fag_log_distance(x, y) == ExtNat.finite(2)

    def test_parent_mismatch(self):
        a = FAGSubgroup.trivial(FiniteAbelianGroup((4,)))
        b = FAGSubgroup.trivial(FiniteAbelianGroup((6,)))
        with pytest.raises(ValueError):
            fag_log_distance(a, b)

    def test_all_subgroups_matches_closure_enumeration(self):
        for factors in ((12,), (2, 4), (3, 9)):
            g = FiniteAbelianGroup(factors)
            got = {s.elements() for s in all_subgroups(g)}
            assert got == all_subgroup_element_sets(g)

    def test_distance_matches_element_counting(self):
        g = FiniteAbelianGroup((2, 4))
        subs = all_subgroups(g)
        for a in subs:
            for b in subs:
                d = fag_log_distance(a, b)
                assert d.value == element_count_mu(g, a.elements(), b.elements())


class TestPrufer:
    def test_distance_fixtures(self):
        assert prufer_log_distance(PruferSubgroup(2, 3),
                                   PruferSubgroup(2, 5)) == ExtNat.finite(4)
        assert prufer_log_distance(PruferSubgroup(2, 4),
                                   PruferSubgroup(2, 4)) == ExtNat.finite(1)
        assert prufer_log_distance(PruferSubgroup(2, None),
                                   PruferSubgroup(2, 7)) == INFINITE
        assert prufer_log_distance(PruferSubgroup(2, None),
                                   PruferSubgroup(2, None)) == ExtNat.finite(1)

    def test_prime_validation(self):
        with pytest.raises(ValueError):
            PruferSubgroup(4, 1)
        with pytest.raises(ValueError):
            prufer_log_distance(PruferSubgroup(2, 1), PruferSubgroup(3, 1))


class TestDescriptors:
    def test_json_round_trip(self):
        d = GroupDescriptor(
            free_rank=CardinalToken.finite(2),
            q_rank=OMEGA,
            prufer=((2, CardinalToken.finite(1)), (5, OMEGA)),
            reduced_torsion=((3, ReducedTorsionPart("finite", 27)),
                             (7, ReducedTorsionPart("layerly_finite"))),
        )
        assert GroupDescriptor.from_json(
            json.loads(json.dumps(d.to_json()))) == d

    def test_cardinal_tokens(self):
        assert CardinalToken.from_json("omega") == OMEGA
        big = CardinalToken.two_to_the(OMEGA)
        assert CardinalToken.from_json(big.to_json()) == big
        assert str(big) == "2^omega"

    def test_validation(self):
        with pytest.raises(ValueError):
            GroupDescriptor(prufer=((4, CardinalToken.finite(1)),))
        with pytest.raises(ValueError):
            GroupDescriptor(prufer=((3, CardinalToken.finite(1)),
                                    (2, CardinalToken.finite(1))))


class TestIsoPoints:
    def test_size_table(self):
        # free of rank 1: one isolated subgroup
        assert iso_points_classify(descriptor_free(1)).size == CardinalToken.finite(1)
        # rationals: two
        assert iso_points_classify(descriptor_rationals(1)).size == CardinalToken.finite(2)
        # rationals squared: countably many
        assert iso_points_classify(descriptor_rationals(2)).size == OMEGA
        # infinitely many rational summands: 2^omega
        assert iso_points_classify(descriptor_rationals(OMEGA)).size == \
            CardinalToken.two_to_the(OMEGA)
        # reduced torsion kills all isolated points
        vec = GroupDescriptor(
            reduced_torsion=((2, ReducedTorsionPart("layerly_finite")),))
        assert iso_points_classify(vec).size == ZERO
        # a Pruefer group alone: divisible, free rank 0 -> one
        assert iso_points_classify(
            descriptor_prufer_sum({2: 1})).size == CardinalToken.finite(1)


class TestAsdim:
    def test_fixtures(self):
        assert asdim_classify(descriptor_free(1)).kind == "infinite"
        r = asdim_classify(descriptor_prufer_sum({2: 1}))
        assert (r.kind, r.n) == ("finite", 1)
        r = asdim_classify(descriptor_prufer_sum({2: 1, 3: 1, 5: 1}))
        assert (r.kind, r.n) == ("finite", 3)
        assert asdim_classify(
            descriptor_finite_sylow({2: 8, 3: 9})).kind == "zero"
        r = asdim_classify(descriptor_prufer_sum({2: 2}))
        assert (r.kind, r.lower_bound) == ("unknown", 2)

    def test_infinite_branches(self):
        assert asdim_classify(descriptor_rationals(1)).kind == "infinite"
        assert asdim_classify(
            descriptor_prufer_sum({2: OMEGA})).kind == "infinite"
        d = GroupDescriptor(
            reduced_torsion=((2, ReducedTorsionPart("not_layerly_finite")),))
        assert asdim_classify(d).kind == "infinite"

    def test_honest_unknown_for_infinite_layerly_finite_sylow(self):
        d = GroupDescriptor(
            reduced_torsion=((2, ReducedTorsionPart("layerly_finite")),))
        r = asdim_classify(d)
        assert r.kind == "unknown" and r.lower_bound >= 1

    def test_report_validation(self):
        with pytest.raises(ValueError):
            AsdimReport("unknown")


class TestComponentCensus:
    def test_fixtures(self):
        c = component_census("Z^n", n=1)
        assert c.count == CardinalToken.finite(2)
        assert component_census("Z^n", n=3).count == OMEGA
        assert component_census("prufer", prime=5).count == CardinalToken.finite(2)
        assert component_census("finite_abelian").count == CardinalToken.finite(1)
        c = component_census("exp_finitary", group_cardinality=OMEGA)
        assert c.count == CardinalToken.two_to_the(OMEGA)

    def test_errors(self):
        with pytest.raises(ValueError):
            component_census("wild-family")
        with pytest.raises(ValueError):
            component_census("exp_finitary",
                             group_cardinality=CardinalToken.finite(6))
