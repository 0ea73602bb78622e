import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polyanti.cdim import (CdimResult, cdim_2d, cdim_lower_bound, convex_dimension_exact,
                           enumerate_maximal_chains, join_irreducibles, max_antichain, max_antichain_2d)
from polyanti.core import Chain, PointSet, comparable, is_chain_set, join_of_chains
from polyanti.planar import random_antimatroidal_set, satisfies_def4
from polyanti.staircase import eppstein_set, random_regular_spec, staircase_points
from polyanti.utils import InvalidInputError, SearchCapExceeded, ValidationError


def accessible_subsets_2d(width, height):
    """Origin-containing subsets of the box in which every point can step down inside the set."""
    cells = [(x, y) for x in range(width + 1) for y in range(height + 1)][1:]
    for s in range(1 << len(cells)):
        pts = {(0, 0)} | {c for i, c in enumerate(cells) if s >> i & 1}
        if all(p == (0, 0) or (p[0] - 1, p[1]) in pts or (p[0], p[1] - 1) in pts for p in pts):
            yield PointSet(pts, dim=2)


@st.composite
def planar_point_sets(draw):
    pts = draw(st.sets(st.tuples(st.integers(0, 8), st.integers(0, 8)), min_size=1, max_size=30))
    return PointSet(pts, dim=2)


class TestChainsAndIrreducibles:
    def test_unit_square_has_two_chains(self, unit_square):
        chains = enumerate_maximal_chains(unit_square)
        assert chains == [Chain([(0, 0), (1, 0), (1, 1)]), Chain([(0, 0), (0, 1), (1, 1)])]

    def test_chain_cap(self, unit_square):
        with pytest.raises(SearchCapExceeded):
            enumerate_maximal_chains(unit_square, cap=1)

    def test_irreducibles_of_unit_cube(self, unit_cube):
        assert join_irreducibles(unit_cube) == PointSet([(1, 0, 0), (0, 1, 0), (0, 0, 1)])

    def test_irreducibles_of_single_point(self):
        assert join_irreducibles(PointSet([(0, 0)])).is_empty()


class TestAntichains:
    def test_matching_on_cube_irreducibles(self, unit_cube):
        size, witness = max_antichain(join_irreducibles(unit_cube))
        assert size == 3
        assert len(witness) == 3

    def test_empty(self):
        assert max_antichain(PointSet([], dim=2))[0] == 0

    @given(planar_point_sets())
    @settings(max_examples=60, deadline=None)
    def test_planar_shortcut_matches_matching(self, S):
        size, witness = max_antichain(S)
        size_2d, witness_2d = max_antichain_2d(S)
        assert size == size_2d
        for w in (witness, witness_2d):
            pts = w.sorted()
            assert all(p in S for p in pts)
            assert not any(comparable(a, b) for i, a in enumerate(pts) for b in pts[i + 1:])
        assert len(witness) == size and len(witness_2d) == size

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_eppstein_lower_bound(self, n):
        assert cdim_lower_bound(eppstein_set(n)) == n + 1


class TestExactSearch:
    def test_eppstein_two(self, eppstein2):
        result = convex_dimension_exact(eppstein2)
        assert result.is_exact
        assert result.value == 3
        assert join_of_chains(result.witness_chains) == eppstein2
        assert len(result.irreducible_antichain) == 3

    def test_planar_example(self, planar_example):
        result = convex_dimension_exact(planar_example)
        assert result.value == 2
        assert join_of_chains(result.witness_chains) == planar_example

    def test_chain_set(self):
        S = PointSet([(0, 0), (1, 0), (1, 1), (2, 1)])
        assert convex_dimension_exact(S).value == 1

    def test_unit_cube(self, unit_cube):
        assert convex_dimension_exact(unit_cube).value == 3

    def test_not_a_poly_antimatroid(self):
        with pytest.raises(InvalidInputError):
            convex_dimension_exact(PointSet([(0, 0), (1, 0), (0, 1)]))

    def test_chain_overflow_gives_interval(self, planar_example):
        result = convex_dimension_exact(planar_example, chain_cap=1)
        assert result.exhausted
        assert not result.is_exact
        assert result.lower == 2
        assert result.upper == len(join_irreducibles(planar_example))
        assert result.value == (result.lower, result.upper)
        assert result.witness_chains == ()

    def test_empty_interval_rejected(self):
        with pytest.raises(ValidationError):
            CdimResult(3, 2, (), PointSet([], dim=2))

    @given(st.integers(0, 2 ** 32 - 1))
    @settings(max_examples=25, deadline=None)
    def test_random_staircases_need_at_most_three_chains(self, seed):
        S = staircase_points(random_regular_spec(seed, max_steps=3, max_coord=3))
        result = convex_dimension_exact(S, chain_cap=2000, subset_cap=50000)
        assert result.lower <= 3
        if result.is_exact:
            assert result.value <= 3
            assert join_of_chains(result.witness_chains) == S
        if all(p in S for p in [(1, 0, 0), (0, 1, 0), (0, 0, 1)]):
            assert result.lower == 3


class TestPlanarClosedForm:
    def test_planar_example(self, planar_example):
        result = cdim_2d(planar_example)
        assert result.value == 2
        assert result.method == "closed-form-2d"
        assert join_of_chains(result.witness_chains) == planar_example

    def test_chain(self):
        assert cdim_2d(PointSet([(0, 0), (0, 1)])).value == 1

    def test_requires_antimatroidal_input(self):
        with pytest.raises(InvalidInputError):
            cdim_2d(PointSet([(0, 0), (1, 1)]))

    def test_matches_search_over_the_four_by_four_box(self):
        checked = 0
        for S in accessible_subsets_2d(3, 3):
            if not satisfies_def4(S):
                continue
            closed = cdim_2d(S).value
            assert closed == convex_dimension_exact(S).value, sorted(S)
            assert closed == (1 if is_chain_set(S) else 2)
            checked += 1
        assert checked > 100

    def test_matches_search_on_random_sets(self):
        rng = np.random.default_rng(99)
        for seed in range(200):
            width, height = (int(v) for v in rng.integers(0, 7, size=2))
            S = random_antimatroidal_set(seed, width, height)
            assert cdim_2d(S).value == convex_dimension_exact(S).value, seed
