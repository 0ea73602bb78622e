import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polyanti.core import (PointSet, is_accessible, is_intersection_closed, is_poly_antimatroid, is_union_closed,
                           join_of_chains, satisfies_exchange_strict)
from polyanti.planar import (boundary_decomposition, boundary_point_sets, characterization_check, check_def4,
                             is_n4_connected, is_orthogonally_convex, n4_neighborhood, n8_neighborhood,
                             random_antimatroidal_set, satisfies_def4, trace_lower_boundary,
                             trace_upper_boundary)
from polyanti.utils import InvalidInputError, ValidationError

from .conftest import PLANAR_EXAMPLE_LOWER, PLANAR_EXAMPLE_UPPER


def origin_subsets(width, height):
    """Every subset of [0..width]x[0..height] that contains the origin."""
    cells = [(x, y) for x in range(width + 1) for y in range(height + 1)][1:]
    for s in range(1 << len(cells)):
        yield PointSet([(0, 0)] + [c for i, c in enumerate(cells) if s >> i & 1], dim=2)


class TestNeighbourhoods:
    def test_clipped_at_the_axes(self):
        assert n4_neighborhood((0, 0)) == {(1, 0), (0, 1)}
        assert len(n8_neighborhood((0, 0))) == 3
        assert len(n8_neighborhood((1, 1))) == 8

    def test_planar_only(self):
        with pytest.raises(ValidationError):
            n4_neighborhood((0, 0, 0))

    def test_connectivity_and_convexity(self, planar_example):
        assert is_n4_connected(planar_example)
        assert is_orthogonally_convex(planar_example)
        assert not is_n4_connected(PointSet([(0, 0), (1, 1)]))
        assert not is_orthogonally_convex(PointSet([(0, 0), (2, 0)]))


class TestBoundaryTraces:
    def test_planar_example_lower(self, planar_example):
        lower = trace_lower_boundary(planar_example)
        assert list(lower) == PLANAR_EXAMPLE_LOWER
        assert lower[4] == (4, 0)
        assert lower[8] == (6, 2)
        assert lower[10] == (6, 4)
        assert lower[18] == (12, 6)

    def test_planar_example_upper(self, planar_example):
        assert list(trace_upper_boundary(planar_example)) == PLANAR_EXAMPLE_UPPER

    def test_planar_example_join(self, planar_example):
        decomposition = boundary_decomposition(planar_example)
        assert decomposition.join() == planar_example
        assert len(planar_example) == 34

    def test_unit_square(self, unit_square):
        assert list(trace_lower_boundary(unit_square)) == [(0, 0), (1, 0), (1, 1)]
        assert list(trace_upper_boundary(unit_square)) == [(0, 0), (0, 1), (1, 1)]

    def test_missing_maximum(self):
        with pytest.raises(InvalidInputError, match="not a member"):
            trace_lower_boundary(PointSet([(0, 0), (1, 0), (0, 1)]))

    def test_trace_needs_an_antimatroidal_set(self):
        with pytest.raises(InvalidInputError, match="not antimatroidal"):
            trace_upper_boundary(PointSet([(0, 0), (2, 0), (2, 1)]))

    @pytest.mark.parametrize("trace", [trace_lower_boundary, trace_upper_boundary])
    def test_ring_is_rejected(self, ring, trace):
        assert not satisfies_def4(ring)
        with pytest.raises(InvalidInputError, match="not antimatroidal") as info:
            trace(ring)
        assert info.value.point in ring

    def test_ring_decomposition_is_rejected(self, ring):
        with pytest.raises(InvalidInputError):
            boundary_decomposition(ring)

    def test_boundary_sets_of_square(self, unit_square):
        lower, upper = boundary_point_sets(unit_square)
        assert lower == PointSet([(0, 0), (1, 0), (1, 1)])
        assert upper == PointSet([(0, 0), (0, 1), (1, 1)])


class TestDef4:
    def test_a1_violation(self):
        v = check_def4(PointSet([(0, 0), (1, 1)]))
        assert v.prop == "def4_a1"

    def test_a2_violation(self):
        v = check_def4(PointSet([(0, 0), (1, 0), (0, 1)]))
        assert v.prop == "def4_a2"
        assert v.message == "A=(0,1), B=(1,0) requires (1,1)"

    def test_planar_example(self, planar_example):
        assert satisfies_def4(planar_example)
        assert characterization_check(planar_example)

    def test_equivalences_over_the_three_by_three_box(self):
        disagreements = []
        holds = 0
        for S in origin_subsets(2, 2):
            a = satisfies_def4(S)
            b = is_accessible(S) and is_union_closed(S)
            c = characterization_check(S)
            d = is_accessible(S) and satisfies_exchange_strict(S)
            holds += a
            if not a == b == c == d:
                disagreements.append(sorted(S))
        assert disagreements == []
        assert holds > 0


class TestRandomSets:
    def test_reproducible(self):
        assert random_antimatroidal_set(7, 5, 4) == random_antimatroidal_set(7, 5, 4)

    def test_degenerate_sizes(self):
        assert random_antimatroidal_set(0, 0, 0) == PointSet([(0, 0)])
        assert len(random_antimatroidal_set(0, 3, 0)) == 4

    def test_random_sets_are_antimatroidal_and_intersection_closed(self):
        rng = np.random.default_rng(2024)
        for seed in range(1000):
            width, height = (int(v) for v in rng.integers(0, 13, size=2))
            S = random_antimatroidal_set(seed, width, height)
            assert S.max_point == (width, height)
            assert satisfies_def4(S), seed
            assert is_intersection_closed(S), seed


seeds = st.integers(0, 2 ** 32 - 1)
sides = st.integers(0, 10)


@st.composite
def origin_sets(draw):
    cells = draw(st.sets(st.tuples(st.integers(0, 4), st.integers(0, 4)), max_size=20))
    return PointSet(cells | {(0, 0)}, dim=2)


class TestBoundaryProperties:
    @given(seeds, sides, sides)
    @settings(max_examples=100, deadline=None)
    def test_traces_match_boundary_point_sets(self, seed, width, height):
        S = random_antimatroidal_set(seed, width, height)
        lower, upper = boundary_point_sets(S)
        assert trace_lower_boundary(S).point_set() == lower
        assert trace_upper_boundary(S).point_set() == upper

    @given(seeds, sides, sides)
    @settings(max_examples=100, deadline=None)
    def test_boundaries_join_back_to_the_set(self, seed, width, height):
        S = random_antimatroidal_set(seed, width, height)
        decomposition = boundary_decomposition(S)
        assert decomposition.join() == S
        assert join_of_chains([decomposition.lower, decomposition.upper]) == S

    @given(origin_sets())
    @settings(max_examples=200, deadline=None)
    def test_planar_axioms_match_poly_antimatroid(self, S):
        assert satisfies_def4(S) == is_poly_antimatroid(S)
