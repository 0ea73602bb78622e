"""
Three-dimensional staircases.

A staircase is the union of a regular sequence of integer boxes
(cuboids): the first box starts at the origin, and from one box to the
next both the min corner and the max corner move up componentwise (each
strictly in at least one coordinate) while the next min corner stays
inside the previous box. Staircases are poly-antimatroids closed under
intersection, and three chains traced greedily from the maximum point
join back to the whole staircase.
"""

import logging
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .core import (Chain, LatticeBox, Point, PointSet, is_intersection_closed, is_poly_antimatroid,
                   join_of_chains, leq, make_point, origin, step_down)
from .utils import (InvalidInputError, SearchCapExceeded, ValidationError, format_point,
                    validate_positive_int)

logger = logging.getLogger(__name__)

AXIS_NAMES = "xyz"
# Search orders of the three greedy traces and the chain each one yields.
ORDER_B_Z = (0, 1, 2)
ORDER_B_X = (1, 2, 0)
ORDER_B_Y = (2, 0, 1)

DEFAULT_MAXIMAL_CUBOID_CAP = 64
DEFAULT_CUBOID_CAP = 4096
DEFAULT_MAX_SEQUENCE_LENGTH = 8
DEFAULT_NODE_CAP = 200_000


@dataclass(frozen=True)
class Cuboid:
    """Axis-aligned box [min_corner..max_corner] holding more than one lattice point."""

    min_corner: Point
    max_corner: Point

    def __post_init__(self):
        lo = make_point(self.min_corner, dim=3)
        hi = make_point(self.max_corner, dim=3)
        if not leq(lo, hi):
            raise ValidationError(f"Cuboid min corner {format_point(lo)} is not below max corner {format_point(hi)}")
        if lo == hi:
            raise ValidationError(f"Cuboid {format_point(lo)}-{format_point(hi)} holds a single point")
        object.__setattr__(self, "min_corner", lo)
        object.__setattr__(self, "max_corner", hi)

    def __str__(self):
        return f"{format_point(self.min_corner)}-{format_point(self.max_corner)}"

    @property
    def size(self):
        return int(np.prod([b - a + 1 for a, b in zip(self.min_corner, self.max_corner)]))

    def contains(self, p):
        return leq(self.min_corner, p) and leq(p, self.max_corner)

    def array(self) -> np.ndarray:
        axes = [np.arange(a, b + 1) for a, b in zip(self.min_corner, self.max_corner)]
        return np.stack(np.meshgrid(*axes, indexing="ij"), axis=-1).reshape(-1, 3)

    def points(self) -> PointSet:
        return PointSet.from_array(self.array(), 3)

    def mask(self, box: LatticeBox) -> int:
        return box.box_mask(self.min_corner, self.max_corner)


@dataclass(frozen=True)
class StaircaseSpec:
    """Ordered cuboid sequence C1..Cn."""

    cuboids: Tuple[Cuboid, ...]

    def __post_init__(self):
        object.__setattr__(self, "cuboids", tuple(self.cuboids))

    @classmethod
    def from_corners(cls, pairs: Iterable) -> "StaircaseSpec":
        return cls(tuple(Cuboid(tuple(lo), tuple(hi)) for lo, hi in pairs))

    def __len__(self):
        return len(self.cuboids)

    def __iter__(self):
        return iter(self.cuboids)

    def __str__(self):
        return " ".join(str(c) for c in self.cuboids)


@dataclass(frozen=True)
class RegularityViolation:
    condition: str
    index: int
    message: str

    def __str__(self):
        return self.message


def _strictly_above(a, b):
    return leq(b, a) and a != b


def validate_regular(spec: StaircaseSpec) -> Tuple[bool, List[RegularityViolation]]:
    """
    Check the regularity conditions. ``index`` is the 1-based position i
    of the pair (C_i, C_i+1) for conditions b-d, and 1 for condition a.
    """
    if not spec.cuboids:
        raise ValidationError("A staircase needs at least one cuboid")
    violations = []
    first = spec.cuboids[0]
    if first.min_corner != origin(3):
        violations.append(RegularityViolation(
            "a", 1, f"(a) C1 min corner {format_point(first.min_corner)} is not the origin"))
    for i, (prev, cur) in enumerate(zip(spec.cuboids, spec.cuboids[1:]), start=1):
        if not _strictly_above(cur.min_corner, prev.min_corner):
            violations.append(RegularityViolation(
                "b", i, f"(b) min corner of C{i + 1} {format_point(cur.min_corner)} does not strictly "
                        f"dominate {format_point(prev.min_corner)}"))
        if not leq(cur.min_corner, prev.max_corner):
            violations.append(RegularityViolation(
                "c", i, f"(c) min corner of C{i + 1} {format_point(cur.min_corner)} exceeds max corner "
                        f"of C{i} {format_point(prev.max_corner)}"))
        if not _strictly_above(cur.max_corner, prev.max_corner):
            violations.append(RegularityViolation(
                "d", i, f"(d) max corner of C{i + 1} {format_point(cur.max_corner)} does not strictly "
                        f"dominate {format_point(prev.max_corner)}"))
    return not violations, violations


def staircase_points(spec: StaircaseSpec) -> PointSet:
    ok, violations = validate_regular(spec)
    if not ok:
        raise InvalidInputError(f"cuboid sequence is not regular: {violations[0]}")
    arr = np.unique(np.vstack([c.array() for c in spec.cuboids]), axis=0)
    return PointSet.from_array(arr, 3)


def _normalize_order(axis_order) -> Tuple[int, int, int]:
    if isinstance(axis_order, str):
        order = tuple(AXIS_NAMES.index(a) for a in axis_order.lower() if a in AXIS_NAMES)
    else:
        order = tuple(int(a) for a in axis_order)
    if sorted(order) != [0, 1, 2]:
        raise ValidationError(f"axis order must be a permutation of x, y, z, got {axis_order!r}")
    return order


def trace_chain_3d(S: PointSet, axis_order, start) -> Chain:
    """
    Greedy descent from ``start`` to the origin: at each point take the
    first decrement in ``axis_order`` that stays inside S. Returned ascending.
    """
    if S.dim != 3:
        raise ValidationError("trace_chain_3d needs a three-dimensional point set")
    order = _normalize_order(axis_order)
    p = make_point(start, dim=3)
    if p not in S:
        raise InvalidInputError(f"start point {format_point(p)} is not a member", p)
    path = [p]
    target = origin(3)
    while p != target:
        for axis in order:
            if p[axis] > 0 and step_down(p, axis) in S:
                p = step_down(p, axis)
                break
        else:
            raise InvalidInputError(f"trace is stuck at {format_point(p)}", p)
        path.append(p)
    return Chain(reversed(path))


def three_chain_decomposition(S: PointSet) -> Tuple[Chain, Chain, Chain]:
    """(B_X, B_Y, B_Z) traced from the maximum point."""
    top = S.max_point
    if top not in S:
        raise InvalidInputError(f"maximum point {format_point(top)} is not a member", top)
    b_x = trace_chain_3d(S, ORDER_B_X, top)
    b_y = trace_chain_3d(S, ORDER_B_Y, top)
    b_z = trace_chain_3d(S, ORDER_B_Z, top)
    return b_x, b_y, b_z


def h_chain_decomposition(S: PointSet, start_x, start_y, start_z) -> Tuple[Chain, Chain, Chain]:
    """
    Traces started on the maximal faces: H_X from a point with x = x_max
    (order y, z, x), H_Y from y = y_max (order z, x, y), H_Z from
    z = z_max (order x, y, z).
    """
    top = S.max_point
    for axis, start in enumerate((start_x, start_y, start_z)):
        if start[axis] != top[axis]:
            raise ValidationError(
                f"start {format_point(start)} is not on the {AXIS_NAMES[axis]} = {top[axis]} face")
    return (trace_chain_3d(S, ORDER_B_X, start_x),
            trace_chain_3d(S, ORDER_B_Y, start_y),
            trace_chain_3d(S, ORDER_B_Z, start_z))


def random_face_starts(S: PointSet, rng) -> Tuple[Point, Point, Point]:
    """One member drawn uniformly from each maximal face (x, then y, then z)."""
    rng = np.random.default_rng(rng)
    top = S.max_point
    starts = []
    for axis in range(3):
        face = [p for p in S.sorted() if p[axis] == top[axis]]
        starts.append(face[int(rng.integers(len(face)))])
    return tuple(starts)


def verify_staircase_join(S: PointSet) -> bool:
    return join_of_chains(three_chain_decomposition(S)) == S


def eppstein_set(N) -> PointSet:
    """Base square [0..N]^2 at z = 0 plus the points with x + y >= N at z = 1."""
    validate_positive_int(N, "N")
    pts = [(x, y, z) for x in range(N + 1) for y in range(N + 1) for z in (0, 1)
           if z == 0 or x + y >= N]
    return PointSet(pts, dim=3)


def is_poset_poly_antimatroid(S: PointSet) -> bool:
    return is_poly_antimatroid(S) and is_intersection_closed(S)


def random_regular_spec(seed, max_steps=5, max_coord=8) -> StaircaseSpec:
    """
    Seeded random regular sequence. C1 runs from the origin to a random
    corner; each next min corner is drawn inside the previous cuboid and
    forced strictly up in one coordinate, each next max corner grows and
    is forced strictly up in one coordinate. Stops early once the max
    corner reaches ``max_coord`` everywhere.
    """
    validate_positive_int(max_steps, "max steps")
    validate_positive_int(max_coord, "max coordinate")
    rng = np.random.default_rng(seed)
    hi = (0, 0, 0)
    while hi == (0, 0, 0):
        hi = tuple(int(v) for v in rng.integers(0, max_coord + 1, size=3))
    cuboids = [Cuboid((0, 0, 0), hi)]
    steps = int(rng.integers(1, max_steps + 1))
    while len(cuboids) < steps:
        prev = cuboids[-1]
        lo0, hi0 = prev.min_corner, prev.max_corner
        can_move = [a for a in range(3) if hi0[a] > lo0[a]]
        can_grow = [a for a in range(3) if hi0[a] < max_coord]
        if not can_grow:
            break
        new_lo = [int(rng.integers(lo0[a], hi0[a] + 1)) for a in range(3)]
        strict = can_move[int(rng.integers(len(can_move)))]
        if new_lo[strict] == lo0[strict]:
            new_lo[strict] = int(rng.integers(lo0[strict] + 1, hi0[strict] + 1))
        new_hi = [int(rng.integers(hi0[a], max_coord + 1)) for a in range(3)]
        grow = can_grow[int(rng.integers(len(can_grow)))]
        if new_hi[grow] == hi0[grow]:
            new_hi[grow] = int(rng.integers(hi0[grow] + 1, max_coord + 1))
        cuboids.append(Cuboid(tuple(new_lo), tuple(new_hi)))
    return StaircaseSpec(tuple(cuboids))


@dataclass(frozen=True)
class _Candidate:
    cuboid: Cuboid
    mask: int
    dominating: int


def _sub_cuboids(S: PointSet, box: LatticeBox, cap) -> List[_Candidate]:
    """Every cuboid contained in S, found with a summed-volume table."""
    grid = S.grid
    if grid is None:
        raise SearchCapExceeded("bounding box size", len(S))
    table = np.zeros(tuple(n + 1 for n in grid.shape), dtype=np.int64)
    table[1:, 1:, 1:] = grid.astype(np.int64).cumsum(0).cumsum(1).cumsum(2)
    arr = S.array
    found = []
    for lo in arr:
        his = arr[(arr >= lo).all(axis=1)]
        x0, y0, z0 = lo
        x1, y1, z1 = (his + 1).T
        count = (table[x1, y1, z1] - table[x0, y1, z1] - table[x1, y0, z1] - table[x1, y1, z0]
                 + table[x0, y0, z1] + table[x0, y1, z0] + table[x1, y0, z0] - table[x0, y0, z0])
        volume = np.prod(his - lo + 1, axis=1)
        for hi in his[(count == volume) & (volume > 1)]:
            found.append((tuple(int(c) for c in lo), tuple(int(c) for c in hi)))
            if len(found) > cap:
                raise SearchCapExceeded("cuboid cap", cap)
    # Larger cuboids first so the depth-first search tries them early.
    found.sort(key=lambda c: (-int(np.prod([b - a + 1 for a, b in zip(*c)])), c))
    return [_Candidate(Cuboid(lo, hi), box.box_mask(lo, hi), box.dominating_mask(lo)) for lo, hi in found]


def _maximal(candidates: Sequence[_Candidate]) -> List[_Candidate]:
    if not candidates:
        return []
    lows = np.array([c.cuboid.min_corner for c in candidates])
    highs = np.array([c.cuboid.max_corner for c in candidates])
    keep = []
    for i, c in enumerate(candidates):
        covers = (lows <= lows[i]).all(axis=1) & (highs >= highs[i]).all(axis=1)
        covers[i] = False
        if not covers.any():
            keep.append(c)
    return keep


class _SequenceSearch:
    """Depth-first search for a regular sequence of candidates covering a target mask."""

    def __init__(self, candidates, target, max_length, node_cap):
        self.candidates = candidates
        self.target = target
        self.max_length = max_length
        self.node_cap = node_cap
        self.nodes = 0
        self.truncated = False
        self._lows = np.array([c.cuboid.min_corner for c in candidates]).reshape(-1, 3)
        self._highs = np.array([c.cuboid.max_corner for c in candidates]).reshape(-1, 3)
        self._successors = {}
        self._failed = set()

    def successors(self, i):
        if i not in self._successors:
            lows, highs = self._lows, self._highs
            ok = ((lows >= lows[i]).all(axis=1) & (lows != lows[i]).any(axis=1)
                  & (lows <= highs[i]).all(axis=1)
                  & (highs >= highs[i]).all(axis=1) & (highs != highs[i]).any(axis=1))
            self._successors[i] = [int(j) for j in np.flatnonzero(ok)]
        return self._successors[i]

    def run(self) -> Optional[List[int]]:
        for i, c in enumerate(self.candidates):
            if c.cuboid.min_corner != (0, 0, 0):
                continue
            seq = [i]
            if self._extend(seq, c.mask):
                return seq
        return None

    def _extend(self, seq, covered) -> bool:
        self.nodes += 1
        if self.nodes > self.node_cap:
            raise SearchCapExceeded("node cap", self.node_cap)
        if covered == self.target:
            return True
        last = seq[-1]
        # Later cuboids only hold points above the current min corner.
        if self.target & ~covered & ~self.candidates[last].dominating:
            return False
        key = (last, covered, len(seq))
        if key in self._failed:
            return False
        nexts = self.successors(last)
        if len(seq) >= self.max_length:
            if nexts:
                self.truncated = True
            return False
        for j in nexts:
            seq.append(j)
            if self._extend(seq, covered | self.candidates[j].mask):
                return True
            seq.pop()
        self._failed.add(key)
        return False


def is_step_staircase(S: PointSet,
                      maximal_cuboid_cap=DEFAULT_MAXIMAL_CUBOID_CAP,
                      cuboid_cap=DEFAULT_CUBOID_CAP,
                      max_length=DEFAULT_MAX_SEQUENCE_LENGTH,
                      node_cap=DEFAULT_NODE_CAP) -> Optional[StaircaseSpec]:
    """
    A regular cuboid sequence whose union is S, or None when none exists.

    Sets that are not poset poly-antimatroids are rejected at once. The
    search first tries sequences of inclusion-maximal sub-cuboids, then
    all sub-cuboids; only the second pass can answer "no". Any cap hit
    raises SearchCapExceeded (an indeterminate verdict).
    """
    if S.dim != 3:
        raise ValidationError("is_step_staircase needs a three-dimensional point set")
    if len(S) <= 1:
        raise InvalidInputError("is_step_staircase needs more than one point")
    if not is_poset_poly_antimatroid(S):
        return None
    box = LatticeBox(S.max_point)
    target = box.mask(S.points)
    candidates = _sub_cuboids(S, box, cuboid_cap)

    maximal = _maximal(candidates)
    if len(maximal) <= maximal_cuboid_cap:
        quick = _SequenceSearch(maximal, target, max_length, node_cap)
        try:
            seq = quick.run()
        except SearchCapExceeded:
            seq = None
        if seq is not None:
            return StaircaseSpec(tuple(maximal[i].cuboid for i in seq))

    full = _SequenceSearch(candidates, target, max_length, node_cap)
    seq = full.run()
    logger.debug("staircase search visited %d nodes over %d cuboids", full.nodes, len(candidates))
    if seq is not None:
        return StaircaseSpec(tuple(candidates[i].cuboid for i in seq))
    if full.truncated:
        raise SearchCapExceeded("sequence length", max_length)
    return None
