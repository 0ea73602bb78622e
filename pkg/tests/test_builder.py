import pytest

from polyanti.builder import StaircaseBuilder
from polyanti.staircase import random_regular_spec
from polyanti.utils import InvalidInputError, ValidationError


class TestStaircaseBuilder:
    def test_two_steps(self, two_step, two_step_spec):
        builder = StaircaseBuilder().step((0, 0, 0), (2, 2, 1)).step((1, 1, 0), (3, 3, 2))
        assert builder.build() == two_step_spec
        assert builder.points() == two_step

    def test_irregular_sequence_lists_every_condition(self):
        builder = StaircaseBuilder().step((1, 0, 0), (2, 2, 2)).step((1, 0, 0), (2, 2, 2))
        with pytest.raises(InvalidInputError) as info:
            builder.build()
        message = str(info.value)
        for condition in ("(a)", "(b)", "(d)"):
            assert condition in message

    def test_random_replaces_steps(self):
        builder = StaircaseBuilder().step((0, 0, 0), (1, 1, 1)).random(seed=9, max_steps=4, max_coord=6)
        assert builder.build() == random_regular_spec(9, 4, 6)

    def test_empty(self):
        with pytest.raises(ValidationError):
            StaircaseBuilder().build()

    def test_bad_cuboid(self):
        with pytest.raises(ValidationError):
            StaircaseBuilder().step((0, 0, 0), (0, 0, 0))
