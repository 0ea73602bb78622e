"""
Fluent API for building staircases.
"""

from .core import PointSet
from .staircase import Cuboid, StaircaseSpec, random_regular_spec, staircase_points, validate_regular
from .utils import InvalidInputError


class StaircaseBuilder:
    """
    Fluent interface for building regular cuboid sequences.

    Example:
        stairs = (StaircaseBuilder()
                  .step((0, 0, 0), (2, 2, 1))
                  .step((1, 1, 0), (3, 3, 2))
                  .points())
    """

    def __init__(self):
        self._cuboids = []

    def step(self, min_corner, max_corner):
        """Append the cuboid [min_corner..max_corner]."""
        self._cuboids.append(Cuboid(tuple(min_corner), tuple(max_corner)))
        return self

    def random(self, seed=0, max_steps=5, max_coord=8):
        """Replace the steps with a seeded random regular sequence."""
        self._cuboids = list(random_regular_spec(seed, max_steps, max_coord).cuboids)
        return self

    def build(self) -> StaircaseSpec:
        """Return the sequence, raising InvalidInputError unless it is regular."""
        spec = StaircaseSpec(tuple(self._cuboids))
        ok, violations = validate_regular(spec)
        if not ok:
            raise InvalidInputError("; ".join(str(v) for v in violations))
        return spec

    def points(self) -> PointSet:
        return staircase_points(self.build())
