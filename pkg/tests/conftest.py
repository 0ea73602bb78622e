import pytest

from polyanti.core import PointSet
from polyanti.pointfile import PointFile
from polyanti.staircase import StaircaseSpec, eppstein_set, staircase_points

# Rows of the 34-point planar example: y -> (first x, last x).
PLANAR_EXAMPLE_ROWS = {0: (0, 4), 1: (1, 4), 2: (2, 6), 3: (2, 6), 4: (6, 11), 5: (8, 12), 6: (9, 12)}

PLANAR_EXAMPLE_LOWER = [
    (0, 0), (1, 0), (2, 0), (3, 0), (4, 0), (4, 1), (4, 2), (5, 2), (6, 2), (6, 3),
    (6, 4), (7, 4), (8, 4), (9, 4), (10, 4), (11, 4), (11, 5), (12, 5), (12, 6),
]
PLANAR_EXAMPLE_UPPER = [
    (0, 0), (1, 0), (1, 1), (2, 1), (2, 2), (2, 3), (3, 3), (4, 3), (5, 3), (6, 3),
    (6, 4), (7, 4), (8, 4), (8, 5), (9, 5), (9, 6), (10, 6), (11, 6), (12, 6),
]


@pytest.fixture
def planar_example():
    return PointSet([(x, y) for y, (lo, hi) in PLANAR_EXAMPLE_ROWS.items() for x in range(lo, hi + 1)])


@pytest.fixture
def unit_square():
    return PointSet([(0, 0), (1, 0), (0, 1), (1, 1)])


@pytest.fixture
def unit_cube():
    return PointSet([(x, y, z) for x in (0, 1) for y in (0, 1) for z in (0, 1)])


@pytest.fixture
def eppstein2():
    return eppstein_set(2)


@pytest.fixture
def two_step_spec():
    return StaircaseSpec.from_corners([((0, 0, 0), (2, 2, 1)), ((1, 1, 0), (3, 3, 2))])


@pytest.fixture
def two_step(two_step_spec):
    return staircase_points(two_step_spec)


@pytest.fixture
def write_points(tmp_path):
    """Write a point set to a file under tmp_path and return the path as a string."""
    def _write(points, name="points.pts", comments=()):
        path = tmp_path / name
        PointFile(points, list(comments)).save(path)
        return str(path)
    return _write


@pytest.fixture
def ring():
    """The 3x3 square without its centre."""
    return PointSet([(x, y) for x in range(3) for y in range(3) if (x, y) != (1, 1)])
