"""
Digital-plane geometry of two-dimensional antimatroidal point sets.

A 2D antimatroidal point set is exactly a parallelogram polyomino: an
orthogonally convex, 4-connected set bounded by two monotone increasing
4-paths from the origin to its maximum point. This module holds the
neighbourhood and convexity checks, the boundary extraction and the two
boundary tracing walks.
"""

import logging
from collections import defaultdict, deque
from dataclasses import dataclass
from typing import Optional, Set, Tuple

import numpy as np

from .core import Chain, Point, PointSet, join_of_chains
from .utils import InvalidInputError, ValidationError, Violation, format_point, validate_non_negative_int

logger = logging.getLogger(__name__)

_N4_OFFSETS = ((-1, 0), (0, -1), (1, 0), (0, 1))
_N8_OFFSETS = _N4_OFFSETS + ((-1, -1), (-1, 1), (1, -1), (1, 1))


def _require_planar(obj, op_name):
    dim = len(obj) if isinstance(obj, tuple) else obj.dim
    if dim != 2:
        raise ValidationError(f"{op_name} needs two-dimensional input, got dimension {dim}")


def _neighbours(p, offsets) -> Set[Point]:
    x, y = p
    return {(x + dx, y + dy) for dx, dy in offsets if x + dx >= 0 and y + dy >= 0}


def n4_neighborhood(p) -> Set[Point]:
    """Axis neighbours of ``p`` inside the non-negative quadrant."""
    _require_planar(tuple(p), "n4_neighborhood")
    return _neighbours(tuple(p), _N4_OFFSETS)


def n8_neighborhood(p) -> Set[Point]:
    """Axis and diagonal neighbours of ``p`` inside the non-negative quadrant."""
    _require_planar(tuple(p), "n8_neighborhood")
    return _neighbours(tuple(p), _N8_OFFSETS)


def is_n4_connected(S: PointSet) -> bool:
    _require_planar(S, "is_n4_connected")
    S.require_non_empty("is_n4_connected")
    start = S.sorted()[0]
    seen = {start}
    queue = deque([start])
    while queue:
        p = queue.popleft()
        for q in _neighbours(p, _N4_OFFSETS):
            if q in S and q not in seen:
                seen.add(q)
                queue.append(q)
    return len(seen) == len(S)


def _lines_are_intervals(S: PointSet, axis) -> bool:
    lines = defaultdict(list)
    for p in S.points:
        lines[p[1 - axis]].append(p[axis])
    return all(max(v) - min(v) + 1 == len(v) for v in lines.values())


def is_orthogonally_convex(S: PointSet) -> bool:
    """Every row and every column meets S in an interval."""
    _require_planar(S, "is_orthogonally_convex")
    return _lines_are_intervals(S, 0) and _lines_are_intervals(S, 1)


def boundary_point_sets(S: PointSet) -> Tuple[PointSet, PointSet]:
    """
    Lower and upper boundary members. Neighbours outside the quadrant
    count as non-members. The two sets may overlap.
    """
    _require_planar(S, "boundary_point_sets")
    S.require_non_empty("boundary_point_sets")
    lower, upper = [], []
    for x, y in S.sorted():
        if (x + 1, y) not in S or (x, y - 1) not in S or (x + 1, y - 1) not in S:
            lower.append((x, y))
        if (x - 1, y) not in S or (x, y + 1) not in S or (x - 1, y + 1) not in S:
            upper.append((x, y))
    return PointSet(lower, dim=2), PointSet(upper, dim=2)


def _trace(S: PointSet, first_axis, name) -> Chain:
    _require_planar(S, f"trace_{name}_boundary")
    S.require_non_empty(f"trace_{name}_boundary")
    top = S.max_point
    if top not in S:
        raise InvalidInputError(f"maximum point {format_point(top)} is not a member", top)
    violation = check_def4(S)
    if violation is not None:
        raise InvalidInputError(f"set is not antimatroidal: {violation.message}", violation.points[0])
    other_axis = 1 - first_axis
    p = top
    path = [p]
    while p != (0, 0):
        q = list(p)
        q[first_axis] -= 1
        q = tuple(q)
        if q[first_axis] < 0 or q not in S:
            q = list(p)
            q[other_axis] -= 1
            q = tuple(q)
            if q[other_axis] < 0 or q not in S:
                raise InvalidInputError(f"{name} boundary trace is stuck at {format_point(p)}", p)
        p = q
        path.append(p)
    logger.debug("%s boundary traced with %d points", name, len(path))
    return Chain(reversed(path))


def trace_upper_boundary(S: PointSet) -> Chain:
    """
    Walk down from the maximum preferring x-decrements; returned ascending.
    Raises InvalidInputError when S is not antimatroidal.
    """
    return _trace(S, 0, "upper")


def trace_lower_boundary(S: PointSet) -> Chain:
    """
    Walk down from the maximum preferring y-decrements; returned ascending.
    Raises InvalidInputError when S is not antimatroidal.
    """
    return _trace(S, 1, "lower")


@dataclass(frozen=True)
class BoundaryDecomposition:
    lower: Chain
    upper: Chain

    def join(self) -> PointSet:
        return join_of_chains([self.lower, self.upper])


def boundary_decomposition(S: PointSet) -> BoundaryDecomposition:
    return BoundaryDecomposition(trace_lower_boundary(S), trace_upper_boundary(S))


def check_def4(S: PointSet) -> Optional[Violation]:
    """
    The planar axioms as stated: (A1) every non-origin point has a left or
    down neighbour; (A2) for A not below B, every applicable case holds:
    A >= B needs B's right or up neighbour, x_A <= x_B with y_A >= y_B
    needs the up neighbour, x_A >= x_B with y_A <= y_B the right one.
    """
    _require_planar(S, "satisfies_def4")
    S.require_non_empty("satisfies_def4")
    arr = S.array
    left = arr - (1, 0)
    down = arr - (0, 1)
    has_pred = S.contains_many(left) | S.contains_many(down)
    has_pred |= (arr == 0).all(axis=1)
    if not has_pred.all():
        p = tuple(int(c) for c in arr[np.argmax(~has_pred)])
        return Violation("def4_a1", (p,), f"{format_point(p)} has neither a left nor a down neighbour")

    right = S.contains_many(arr + (1, 0))
    up = S.contains_many(arr + (0, 1))
    xa, ya = arr[:, None, 0], arr[:, None, 1]
    xb, yb = arr[None, :, 0], arr[None, :, 1]
    not_below = (xa > xb) | (ya > yb)
    case1 = (xa >= xb) & (ya >= yb) & ~(right | up)[None, :]
    case2 = (xa <= xb) & (ya >= yb) & ~up[None, :]
    case3 = (xa >= xb) & (ya <= yb) & ~right[None, :]
    bad = not_below & (case1 | case2 | case3)
    if not bad.any():
        return None
    i, j = np.argwhere(bad)[0]
    a = tuple(int(c) for c in arr[i])
    b = tuple(int(c) for c in arr[j])
    if case1[i, j]:
        need = f"{format_point((b[0] + 1, b[1]))} or {format_point((b[0], b[1] + 1))}"
    elif case2[i, j]:
        need = format_point((b[0], b[1] + 1))
    else:
        need = format_point((b[0] + 1, b[1]))
    return Violation("def4_a2", (a, b), f"A={format_point(a)}, B={format_point(b)} requires {need}")


def satisfies_def4(S: PointSet) -> bool:
    return check_def4(S) is None


def _is_boundary_path(points, top) -> bool:
    pts = points.sorted()
    if not pts or pts[0] != (0, 0) or pts[-1] != top:
        return False
    for (x0, y0), (x1, y1) in zip(pts, pts[1:]):
        if (x1 - x0, y1 - y0) not in ((1, 0), (0, 1)):
            return False
    return True


def characterization_check(S: PointSet) -> bool:
    """
    Orthogonally convex, 4-connected, and both boundary sets in
    lexicographic order are unit-step paths from the origin to the maximum.
    """
    _require_planar(S, "characterization_check")
    S.require_non_empty("characterization_check")
    if not (is_orthogonally_convex(S) and is_n4_connected(S)):
        return False
    lower, upper = boundary_point_sets(S)
    top = S.max_point
    return _is_boundary_path(lower, top) and _is_boundary_path(upper, top)


def random_lattice_path(rng, width, height) -> Chain:
    """Uniform monotone unit-step path from the origin to (width, height)."""
    moves = rng.permutation(np.array([0] * width + [1] * height, dtype=np.int64))
    p = (0, 0)
    steps = [p]
    for move in moves:
        p = (p[0] + 1, p[1]) if move == 0 else (p[0], p[1] + 1)
        steps.append(p)
    return Chain(steps)


def random_antimatroidal_set(seed, width, height) -> PointSet:
    """
    Join of two independent uniform lattice paths to (width, height).

    ``seed`` goes to numpy's PCG64 ``default_rng``; each path is a
    uniformly random permutation of ``width`` x-moves and ``height``
    y-moves, both drawn in turn from the same generator.
    """
    validate_non_negative_int(width, "width")
    validate_non_negative_int(height, "height")
    rng = np.random.default_rng(seed)
    first = random_lattice_path(rng, width, height)
    second = random_lattice_path(rng, width, height)
    return join_of_chains([first, second])
