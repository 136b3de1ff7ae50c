import itertools
import math
import random

import pytest

from balleans.groups import FiniteAbelianGroup
from balleans.lattices import ExtNat, lattice_from_generators, log_subgroup_distance
from balleans.suites import (
    SUITES,
    lz_exp_ball_windowed,
    run_all,
    suite_cellular,
    suite_lzball,
)
from balleans.witnesses import (
    PrimeTuple,
    TaxiPoint,
    cyclic_subgroup_tree,
    dlog_closed_form,
    elementary_abelian_correspondence,
    hamming_embed,
    iota,
    lz_exp_ball,
    lz_exp_ball_general,
    lz_log_ball,
    prufer_ball,
    taxi_distance,
    verify_iota_quasi_isometry,
)
from balleans.ballean import hamming_distance


class TestIota:
    def test_fixtures(self):
        pt = PrimeTuple((2, 3))
        assert iota(pt, TaxiPoint((3, 1))) == lattice_from_generators(1, [[24]])
        assert iota(pt, TaxiPoint((0, 0))) == lattice_from_generators(1, [[1]])
        assert iota(pt, TaxiPoint((1, 2))) == lattice_from_generators(1, [[18]])

    def test_prime_tuple_validation(self):
        with pytest.raises(ValueError):
            PrimeTuple((3, 2))
        with pytest.raises(ValueError):
            PrimeTuple((2, 4))
        with pytest.raises(ValueError):
            PrimeTuple((2, 3), log_base=2.5)

    def test_taxi_distance(self):
        assert taxi_distance(TaxiPoint((3, 1)), TaxiPoint((1, 2))) == 3
        assert taxi_distance(TaxiPoint((0, 0)), TaxiPoint((2, 5))) == 7
        with pytest.raises(ValueError):
            taxi_distance(TaxiPoint((1,)), TaxiPoint((1, 2)))


class TestDlogClosedForm:
    def test_fixtures(self):
        pt = PrimeTuple((2, 3))
        assert dlog_closed_form(pt, TaxiPoint((3, 1)),
                                TaxiPoint((1, 2))) == ExtNat.finite(4)
        assert dlog_closed_form(pt, TaxiPoint((2, 2)),
                                TaxiPoint((2, 2))) == ExtNat.finite(1)
        p2 = PrimeTuple((2,))
        assert dlog_closed_form(p2, TaxiPoint((3,)),
                                TaxiPoint((1,))) == ExtNat.finite(4)

    def test_matches_lattice_computation(self):
        pt = PrimeTuple((2, 3, 5))
        rng = random.Random(0)
        for _ in range(200):
            m = TaxiPoint(tuple(rng.randint(0, 6) for _ in range(3)))
            mp = TaxiPoint(tuple(rng.randint(0, 6) for _ in range(3)))
            assert dlog_closed_form(pt, m, mp) == \
                log_subgroup_distance(iota(pt, m), iota(pt, mp))

    def test_quasi_isometry_report(self):
        pt = PrimeTuple((2,))
        pairs = [(TaxiPoint((a,)), TaxiPoint((b,)))
                 for a in range(11) for b in range(11)]
        rep = verify_iota_quasi_isometry(pt, pairs)
        assert rep.ok and rep.samples == 121
        assert rep.max_ratio <= 1.0 + 1e-12  # single prime: exact isometry


class TestHammingEmbed:
    def test_fixtures(self):
        f10 = hamming_embed(2, TaxiPoint((1, 0)))
        f00 = hamming_embed(2, TaxiPoint((0, 0)))
        assert f10.support_set == {0, 1, 2}
        assert f00.support_set == {0, 1}
        assert hamming_distance(f10, f00) == 1
        f21 = hamming_embed(2, TaxiPoint((2, 1)))
        assert hamming_distance(f21, f00) == 3

    def test_isometry_exhaustive_n2(self):
        grid = [TaxiPoint(c) for c in itertools.product(range(5), repeat=2)]
        for m, mp in itertools.combinations(grid, 2):
            assert hamming_distance(hamming_embed(2, m), hamming_embed(2, mp)) \
                == taxi_distance(m, mp)


class TestElementaryAbelian:
    def test_fixtures(self):
        c, e = elementary_abelian_correspondence(2, {0, 1}, {1, 2})
        assert c == e == ExtNat.finite(2)
        c, e = elementary_abelian_correspondence(2, {0, 3}, {0, 3})
        assert c == e == ExtNat.finite(1)
        c, e = elementary_abelian_correspondence(3, {0}, set())
        assert c == e == ExtNat.finite(3)

    def test_small_sweep(self):
        subsets = [frozenset(c) for s in range(4)
                   for c in itertools.combinations(range(3), s)]
        for f, fp in itertools.combinations_with_replacement(subsets, 2):
            c, e = elementary_abelian_correspondence(2, f, fp, width=3)
            assert c == e


class TestCyclicSubgroupTree:
    def test_z4_z2_fixture(self):
        cert = cyclic_subgroup_tree(FiniteAbelianGroup((2, 4)))
        assert len(cert.vertices) == 6
        assert cert.is_tree and cert.height == 2
        root_sub = cert.vertices[cert.root]
        assert root_sub.order == 1
        # the three order-2 subgroups hang off the root
        root_children = [a for a, b in cert.edges if b == cert.root]
        assert len(root_children) == 3

    def test_chain_fixtures(self):
        cert = cyclic_subgroup_tree(FiniteAbelianGroup((8,)))
        assert len(cert.vertices) == 4 and cert.height == 3 and cert.is_tree
        cert = cyclic_subgroup_tree(FiniteAbelianGroup((5,)))
        assert len(cert.vertices) == 2 and cert.height == 1 and cert.is_tree

    def test_rejects_non_p_group(self):
        with pytest.raises(ValueError):
            cyclic_subgroup_tree(FiniteAbelianGroup((6,)))


class TestLzBalls:
    def test_exp_fixtures(self):
        assert lz_exp_ball(7, 2) == {7}
        assert lz_exp_ball(4, 0) == {4}
        assert lz_exp_ball_general(5, []) == {5}

    def test_exp_windowed_agreement(self):
        for n in range(1, 16):
            for m in range(0, 4):
                assert lz_exp_ball(n, m) == lz_exp_ball_windowed(n, m)

    def test_log_fixtures(self):
        assert lz_log_ball(6, 2) == {3, 6, 12}
        assert lz_log_ball(9, 1) == {9}
        assert lz_log_ball(1, 3) == {1, 2, 3}

    def test_log_ball_is_exact_sublevel_set(self):
        n, bound = 12, 4
        ball = lz_log_ball(n, bound)
        for m in range(1, n * bound * 2):
            l = n * m // math.gcd(n, m)
            assert (m in ball) == (max(l // n, l // m) <= bound)


class TestPruferBall:
    def test_fixtures(self):
        assert prufer_ball(2, 5, 4) == {3, 4, 5, 6, 7}
        assert prufer_ball(7, 3, 1) == {3}
        assert prufer_ball(3, 0, 3) == {0, 1}

    def test_size_growth(self):
        for k in range(0, 4):
            ball = prufer_ball(2, 10, 2 ** k)
            assert len(ball) == 2 * k + 1


class TestSuites:
    def test_all_suites_pass(self):
        for rep in run_all(seed=0):
            assert rep.ok, rep.to_json()

    def test_deterministic_under_seed(self):
        a = suite_cellular(count=5, seed=3)
        b = suite_cellular(count=5, seed=3)
        assert a == b

    def test_suite_registry(self):
        assert set(SUITES) == {"iota", "hamming", "elemab", "tree", "lzball",
                               "mu-index", "cellular", "axioms"}
