import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polyanti.core import Chain, PointSet, is_intersection_closed, is_poly_antimatroid, join_of_chains
from polyanti.staircase import (Cuboid, StaircaseSpec, eppstein_set, h_chain_decomposition,
                                is_poset_poly_antimatroid, is_step_staircase, random_face_starts,
                                random_regular_spec, staircase_points, three_chain_decomposition,
                                trace_chain_3d, validate_regular, verify_staircase_join)
from polyanti.utils import InvalidInputError, SearchCapExceeded, ValidationError


def check_theorem_on_seed(seed):
    spec = random_regular_spec(seed)
    S = staircase_points(spec)
    top = S.max_point
    assert verify_staircase_join(S), seed
    for chain in three_chain_decomposition(S):
        assert chain.length == sum(top)
    starts = random_face_starts(S, np.random.default_rng(seed))
    assert join_of_chains(h_chain_decomposition(S, *starts)) == S, seed
    assert is_poly_antimatroid(S), seed
    assert is_intersection_closed(S), seed


class TestCuboids:
    def test_size_and_points(self):
        c = Cuboid((0, 0, 0), (2, 2, 1))
        assert c.size == 18
        assert len(c.points()) == 18
        assert str(c) == "(0,0,0)-(2,2,1)"

    @pytest.mark.parametrize("lo, hi", [((1, 1, 1), (1, 1, 1)), ((2, 0, 0), (1, 1, 1)), ((0, 0), (1, 1))])
    def test_invalid_cuboids(self, lo, hi):
        with pytest.raises(ValidationError):
            Cuboid(lo, hi)


class TestRegularity:
    def test_two_step_is_regular(self, two_step_spec):
        assert validate_regular(two_step_spec) == (True, [])

    @pytest.mark.parametrize("corners, condition", [
        ([((1, 0, 0), (2, 2, 2))], "a"),
        ([((0, 0, 0), (2, 2, 2)), ((0, 0, 0), (3, 3, 3))], "b"),
        ([((0, 0, 0), (1, 1, 1)), ((2, 0, 0), (3, 1, 1))], "c"),
        ([((0, 0, 0), (2, 2, 2)), ((1, 0, 0), (2, 2, 2))], "d"),
    ])
    def test_each_condition_is_reported(self, corners, condition):
        ok, violations = validate_regular(StaircaseSpec.from_corners(corners))
        assert not ok
        assert condition in [v.condition for v in violations]

    def test_empty_sequence(self):
        with pytest.raises(ValidationError):
            validate_regular(StaircaseSpec(()))

    def test_two_step_points(self, two_step):
        assert len(two_step) == 37
        assert two_step.max_point == (3, 3, 2)

    def test_irregular_points_rejected(self):
        spec = StaircaseSpec.from_corners([((0, 0, 0), (2, 2, 2)), ((1, 0, 0), (2, 2, 2))])
        with pytest.raises(InvalidInputError):
            staircase_points(spec)


class TestTraces:
    def test_unit_cube_chains(self, unit_cube):
        b_x, b_y, b_z = three_chain_decomposition(unit_cube)
        assert list(b_z) == [(0, 0, 0), (0, 0, 1), (0, 1, 1), (1, 1, 1)]
        assert list(b_x) == [(0, 0, 0), (1, 0, 0), (1, 0, 1), (1, 1, 1)]
        assert list(b_y) == [(0, 0, 0), (0, 1, 0), (1, 1, 0), (1, 1, 1)]
        assert verify_staircase_join(unit_cube)

    def test_eppstein_chains_miss_a_point(self, eppstein2):
        b_x, b_y, b_z = three_chain_decomposition(eppstein2)
        assert list(b_z) == [(0, 0, 0), (0, 1, 0), (0, 2, 0), (0, 2, 1), (1, 2, 1), (2, 2, 1)]
        assert list(b_x) == [(0, 0, 0), (1, 0, 0), (2, 0, 0), (2, 0, 1), (2, 1, 1), (2, 2, 1)]
        assert list(b_y) == [(0, 0, 0), (0, 1, 0), (0, 2, 0), (1, 2, 0), (2, 2, 0), (2, 2, 1)]
        joined = join_of_chains([b_x, b_y, b_z])
        assert (1, 1, 1) in eppstein2
        assert (1, 1, 1) not in joined
        assert not verify_staircase_join(eppstein2)

    def test_axis_order_spellings(self, two_step):
        assert trace_chain_3d(two_step, "yzx", (3, 3, 2)) == trace_chain_3d(two_step, (1, 2, 0), (3, 3, 2))

    def test_bad_axis_order(self, unit_cube):
        with pytest.raises(ValidationError):
            trace_chain_3d(unit_cube, "xxy", (1, 1, 1))

    def test_start_outside_set(self, unit_cube):
        with pytest.raises(InvalidInputError):
            trace_chain_3d(unit_cube, "xyz", (2, 0, 0))

    def test_face_starts_checked(self, two_step):
        with pytest.raises(ValidationError):
            h_chain_decomposition(two_step, (2, 2, 1), (3, 3, 2), (3, 3, 2))

    def test_two_step_theorem(self, two_step):
        assert verify_staircase_join(two_step)
        assert all(ch.length == 8 for ch in three_chain_decomposition(two_step))


class TestEppstein:
    def test_sizes(self):
        assert len(eppstein_set(1)) == 7
        assert len(eppstein_set(2)) == 15

    def test_classes(self, eppstein2):
        assert is_poly_antimatroid(eppstein2)
        assert not is_poset_poly_antimatroid(eppstein2)

    def test_positive_n(self):
        with pytest.raises(ValidationError):
            eppstein_set(0)


class TestRandomSpecs:
    def test_reproducible_and_regular(self):
        assert random_regular_spec(11) == random_regular_spec(11)
        for seed in range(50):
            spec = random_regular_spec(seed, max_steps=5, max_coord=8)
            assert validate_regular(spec)[0]
            assert 1 <= len(spec) <= 5
            assert all(c <= 8 for cuboid in spec for c in cuboid.max_corner)

    @given(st.integers(0, 2 ** 32 - 1))
    @settings(max_examples=40, deadline=None)
    def test_three_chains_join_to_random_staircases(self, seed):
        check_theorem_on_seed(seed)

    @pytest.mark.slow
    def test_three_chains_join_on_seeded_corpus(self):
        for seed in range(500):
            check_theorem_on_seed(seed)


class TestStepStaircase:
    def test_unit_cube_is_one_cuboid(self, unit_cube):
        spec = is_step_staircase(unit_cube)
        assert spec == StaircaseSpec((Cuboid((0, 0, 0), (1, 1, 1)),))

    def test_two_step_is_found(self, two_step):
        spec = is_step_staircase(two_step)
        assert spec is not None
        assert validate_regular(spec)[0]
        assert staircase_points(spec) == two_step

    def test_eppstein_is_rejected_quickly(self, eppstein2):
        assert is_step_staircase(eppstein2) is None

    def test_planar_slice(self):
        S = PointSet([(x, y, 0) for x in range(3) for y in range(3) if (x, y) != (0, 2)])
        spec = is_step_staircase(S)
        assert spec is not None
        assert staircase_points(spec) == S

    def test_random_staircases_are_recognised(self):
        for seed in range(15):
            S = staircase_points(random_regular_spec(seed, max_steps=3, max_coord=3))
            if len(S) <= 1:
                continue
            spec = is_step_staircase(S)
            assert spec is not None, seed
            assert staircase_points(spec) == S

    def test_caps_raise(self, two_step):
        with pytest.raises(SearchCapExceeded):
            is_step_staircase(two_step, maximal_cuboid_cap=1, cuboid_cap=5)

    def test_invalid_inputs(self):
        with pytest.raises(InvalidInputError):
            is_step_staircase(PointSet([(0, 0, 0)]))
        with pytest.raises(ValidationError):
            is_step_staircase(PointSet([(0, 0), (1, 0)]))

    def test_chain_is_a_staircase(self):
        S = Chain([(0, 0, 0), (1, 0, 0), (1, 1, 0), (1, 1, 1)]).point_set()
        spec = is_step_staircase(S)
        assert spec is not None
        assert staircase_points(spec) == S
