import json
import random

import pytest

from balleans.lattices import (
    ExtNat,
    INFINITE,
    Lattice,
    commensurable,
    full_lattice,
    index_in,
    lattice_from_generators,
    lattice_intersection,
    lattice_sum,
    log_subgroup_distance,
    member,
    saturation,
    trivial_lattice,
)
from oracles import frac_rank, in_integer_span, oracle_mu_prime


class TestExtNat:
    def test_ordering(self):
        assert ExtNat.finite(2) < ExtNat.finite(5) < INFINITE
        assert max(ExtNat.finite(3), INFINITE) == INFINITE

    def test_multiplication(self):
        assert ExtNat.finite(3) * ExtNat.finite(4) == ExtNat.finite(12)
        assert ExtNat.finite(3) * INFINITE == INFINITE

    def test_log(self):
        assert ExtNat.finite(8).log(2) == pytest.approx(3.0)
        assert ExtNat.finite(1).log() == 0.0
        assert INFINITE.log() == float("inf")
        with pytest.raises(ValueError):
            ExtNat.finite(2).log(1.0)

    def test_json_round_trip(self):
        for v in (ExtNat.finite(7), INFINITE):
            assert ExtNat.from_json(json.loads(json.dumps(v.to_json()))) == v

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            ExtNat.finite(0)


class TestConstruction:
    def test_canonical_equality(self):
        a = lattice_from_generators(2, [[2, 4], [0, 6]])
        b = lattice_from_generators(2, [[2, 10], [0, -6], [2, 4]])
        assert a == b  # same span, bit-identical canonical form

    def test_trivial_and_full(self):
        assert trivial_lattice(3).rank == 0
        assert full_lattice(3).rank == 3
        assert member([5, -7, 2], full_lattice(3))
        assert not member([1, 0, 0], trivial_lattice(3))

    def test_width_mismatch(self):
        with pytest.raises(ValueError):
            lattice_from_generators(2, [[1, 2, 3]])

    def test_json_round_trip(self):
        lat = lattice_from_generators(2, [[2, 4]])
        assert Lattice.from_json(json.loads(json.dumps(lat.to_json()))) == lat


class TestMembershipSumIntersection:
    def test_member_oracle(self):
        rng = random.Random(2)
        for _ in range(60):
            gens = [[rng.randint(-6, 6) for _ in range(3)] for _ in range(2)]
            lat = lattice_from_generators(3, gens)
            x = [rng.randint(-12, 12) for _ in range(3)]
            assert member(x, lat) == in_integer_span(x, gens)

    def test_sum_contains_both(self):
        a = lattice_from_generators(2, [[2, 0]])
        b = lattice_from_generators(2, [[0, 3]])
        s = lattice_sum(a, b)
        assert member([2, 0], s) and member([0, 3], s)
        assert s.rank == 2

    def test_intersection_fixture(self):
        a = lattice_from_generators(1, [[4]])
        b = lattice_from_generators(1, [[6]])
        assert lattice_intersection(a, b) == lattice_from_generators(1, [[12]])

    def test_intersection_is_largest_common(self):
        rng = random.Random(3)
        for _ in range(40):
            a = lattice_from_generators(
                2, [[rng.randint(-5, 5) for _ in range(2)] for _ in range(2)])
            b = lattice_from_generators(
                2, [[rng.randint(-5, 5) for _ in range(2)] for _ in range(2)])
            cap = lattice_intersection(a, b)
            for row in cap.basis:
                assert member(list(row), a) and member(list(row), b)
            # no common point strictly between: scan a small box
            for x in range(-4, 5):
                for y in range(-4, 5):
                    if member([x, y], a) and member([x, y], b):
                        assert member([x, y], cap)

    def test_ambient_mismatch(self):
        with pytest.raises(ValueError):
            lattice_sum(full_lattice(2), full_lattice(3))


class TestIndexAndSaturation:
    def test_index_fixtures(self):
        z = full_lattice(1)
        assert index_in(lattice_from_generators(1, [[6]]), z) == ExtNat.finite(6)
        assert index_in(trivial_lattice(1), z) == INFINITE
        assert index_in(trivial_lattice(1), trivial_lattice(1)) == ExtNat.finite(1)

    def test_index_not_subgroup(self):
        with pytest.raises(ValueError):
            index_in(lattice_from_generators(1, [[3]]),
                     lattice_from_generators(1, [[2]]))

    def test_index_multiplicative_in_towers(self):
        a = lattice_from_generators(2, [[4, 0], [0, 6]])
        b = lattice_from_generators(2, [[2, 0], [0, 3]])
        c = full_lattice(2)
        assert index_in(a, b) * index_in(b, c) == index_in(a, c)

    def test_full_rank_index_is_abs_det(self):
        rng = random.Random(9)
        from balleans import exactmat
        for _ in range(30):
            n = rng.choice([2, 3])
            gens = [[rng.randint(-6, 6) for _ in range(n)] for _ in range(n)]
            lat = lattice_from_generators(n, gens)
            if lat.rank == n:
                assert index_in(lat, full_lattice(n)) == \
                    ExtNat.finite(exactmat.abs_det(gens))

    def test_saturation_fixture(self):
        h = lattice_from_generators(2, [[2, 4]])
        assert saturation(h) == lattice_from_generators(2, [[1, 2]])

    def test_saturation_properties(self):
        rng = random.Random(4)
        for _ in range(40):
            n = rng.choice([2, 3])
            h = lattice_from_generators(
                n, [[rng.randint(-6, 6) for _ in range(n)]
                    for _ in range(rng.randint(0, n))])
            s = saturation(h)
            assert s.rank == h.rank
            assert saturation(s) == s
            if h.rank:
                assert index_in(h, s).is_finite


class TestDistance:
    def test_fixtures(self):
        d = log_subgroup_distance(lattice_from_generators(1, [[24]]),
                                  lattice_from_generators(1, [[18]]))
        assert d == ExtNat.finite(4)
        a = lattice_from_generators(2, [[1, 0]])
        b = lattice_from_generators(2, [[0, 1]])
        assert log_subgroup_distance(a, b) == INFINITE

    def test_identity_and_symmetry(self):
        rng = random.Random(5)
        for _ in range(30):
            a = lattice_from_generators(
                2, [[rng.randint(-6, 6) for _ in range(2)] for _ in range(2)])
            b = lattice_from_generators(
                2, [[rng.randint(-6, 6) for _ in range(2)] for _ in range(2)])
            assert log_subgroup_distance(a, a) == ExtNat.finite(1)
            assert log_subgroup_distance(a, b) == log_subgroup_distance(b, a)

    def test_commensurable_iff_finite(self):
        rng = random.Random(6)
        for _ in range(40):
            n = rng.choice([2, 3])
            a = lattice_from_generators(
                n, [[rng.randint(-5, 5) for _ in range(n)]
                    for _ in range(rng.randint(1, n))])
            b = lattice_from_generators(
                n, [[rng.randint(-5, 5) for _ in range(n)]
                    for _ in range(rng.randint(1, n))])
            assert commensurable(a, b) == log_subgroup_distance(a, b).is_finite

    def test_commensurable_iff_equal_saturation(self):
        rng = random.Random(7)
        for _ in range(40):
            a = lattice_from_generators(
                2, [[rng.randint(-5, 5) for _ in range(2)] for _ in range(2)])
            b = lattice_from_generators(
                2, [[rng.randint(-5, 5) for _ in range(2)] for _ in range(2)])
            assert commensurable(a, b) == (saturation(a) == saturation(b))

    def test_against_residue_counting_oracle(self):
        rng = random.Random(8)
        for _ in range(40):
            n = rng.choice([2, 3])
            ga = [[rng.randint(-8, 8) for _ in range(n)] for _ in range(n)]
            gb = [[rng.randint(-8, 8) for _ in range(n)] for _ in range(n)]
            d = log_subgroup_distance(lattice_from_generators(n, ga),
                                      lattice_from_generators(n, gb))
            om = oracle_mu_prime(ga, gb)
            if om is None:
                assert not d.is_finite
            else:
                assert d == ExtNat.finite(om)
