"""
Points, point sets and chains, and the antimatroid axiom predicates.

A point of dimension d is a tuple of d non-negative integers read as a
multiset over a d-element ground set: coordinate i is the multiplicity of
element i. Union of multisets is the componentwise maximum (join) and
intersection the componentwise minimum (meet).
"""

from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .utils import ValidationError, Violation, format_point, validate_matching_dims

Point = Tuple[int, ...]

SUPPORTED_DIMS = (2, 3)
MAX_COORD = 65535
# Bounding boxes up to this many cells get a dense boolean membership table.
GRID_CELL_LIMIT = 1 << 22
# Rows per block when broadcasting pairwise operations.
PAIR_BLOCK = 1 << 20


def make_point(coords, dim=None) -> Point:
    """Validate coordinates and return them as a point tuple."""
    try:
        raw = list(coords)
        p = tuple(int(c) for c in raw)
    except (TypeError, ValueError):
        raise ValidationError(f"Point coordinates must be integers: {coords!r}")
    if any(isinstance(c, bool) or c != int(c) for c in raw):
        raise ValidationError(f"Point coordinates must be integers: {coords!r}")
    if len(p) not in SUPPORTED_DIMS:
        raise ValidationError(f"Point dimension must be 2 or 3, got {len(p)}")
    if dim is not None and len(p) != dim:
        raise ValidationError(f"Point {format_point(p)} has dimension {len(p)}, expected {dim}")
    if any(c < 0 for c in p):
        raise ValidationError(f"Point coordinates must be non-negative: {format_point(p)}")
    if any(c > MAX_COORD for c in p):
        raise ValidationError(f"Point coordinates must not exceed {MAX_COORD}: {format_point(p)}")
    return p


def origin(dim) -> Point:
    return (0,) * dim


def unit(dim, axis) -> Point:
    return tuple(1 if i == axis else 0 for i in range(dim))


def step_up(p, axis) -> Point:
    return p[:axis] + (p[axis] + 1,) + p[axis + 1:]


def step_down(p, axis) -> Point:
    return p[:axis] + (p[axis] - 1,) + p[axis + 1:]


def join(a, b) -> Point:
    """Componentwise maximum (multiset union)."""
    validate_matching_dims(a, b)
    return tuple(max(x, y) for x, y in zip(a, b))


def meet(a, b) -> Point:
    """Componentwise minimum (multiset intersection)."""
    validate_matching_dims(a, b)
    return tuple(min(x, y) for x, y in zip(a, b))


def leq(a, b) -> bool:
    """Dominance order: a is a sub-multiset of b."""
    return all(x <= y for x, y in zip(a, b))


def comparable(a, b) -> bool:
    return leq(a, b) or leq(b, a)


def _as_point(row) -> Point:
    return tuple(int(c) for c in row)


class PointSet:
    """
    Finite set of distinct lattice points of a common dimension.

    Instances are immutable. Membership is exact; a dense boolean table
    over the bounding box backs the vectorised predicates when the box is
    small enough, otherwise lookups go through the frozenset.
    """

    def __init__(self, points: Iterable = (), dim=None):
        pts = [make_point(p) for p in points]
        if dim is None:
            if not pts:
                raise ValidationError("Cannot infer the dimension of an empty point set")
            dim = len(pts[0])
        if dim not in SUPPORTED_DIMS:
            raise ValidationError(f"Point set dimension must be 2 or 3, got {dim}")
        for p in pts:
            if len(p) != dim:
                raise ValidationError(f"Point {format_point(p)} does not have dimension {dim}")
        self._dim = dim
        self._points = frozenset(pts)
        self._sorted = None
        self._array = None
        self._grid = None
        self._grid_built = False

    @classmethod
    def from_array(cls, arr, dim):
        return cls((_as_point(row) for row in np.asarray(arr)), dim=dim)

    @property
    def dim(self):
        return self._dim

    @property
    def points(self):
        return self._points

    def __len__(self):
        return len(self._points)

    def __iter__(self):
        return iter(self.sorted())

    def __contains__(self, p):
        return tuple(p) in self._points

    def __eq__(self, other):
        if not isinstance(other, PointSet):
            return NotImplemented
        return self._dim == other._dim and self._points == other._points

    def __hash__(self):
        return hash((self._dim, self._points))

    def __repr__(self):
        return f"PointSet(dim={self._dim}, size={len(self)})"

    def sorted(self) -> List[Point]:
        """Members in lexicographic order."""
        if self._sorted is None:
            self._sorted = sorted(self._points)
        return self._sorted

    @property
    def array(self) -> np.ndarray:
        """Members as an (n, d) integer array in lexicographic order."""
        if self._array is None:
            self._array = np.array(self.sorted(), dtype=np.int64).reshape(-1, self._dim)
        return self._array

    @property
    def origin(self) -> Point:
        return origin(self._dim)

    @property
    def max_point(self) -> Point:
        """Join of all members (the origin for an empty set)."""
        if not self._points:
            return self.origin
        return _as_point(self.array.max(axis=0))

    def is_empty(self):
        return not self._points

    def require_non_empty(self, op_name):
        if not self._points:
            raise ValidationError(f"{op_name} requires a non-empty point set")

    @property
    def grid(self) -> Optional[np.ndarray]:
        """Boolean membership table over [0..max_point], or None if too large."""
        if not self._grid_built:
            self._grid_built = True
            shape = tuple(c + 1 for c in self.max_point)
            if self._points and int(np.prod(shape)) <= GRID_CELL_LIMIT:
                grid = np.zeros(shape, dtype=bool)
                grid[tuple(self.array.T)] = True
                self._grid = grid
        return self._grid

    def contains_many(self, coords) -> np.ndarray:
        """Vectorised membership for an (m, d) array of coordinates."""
        coords = np.asarray(coords, dtype=np.int64).reshape(-1, self._dim)
        grid = self.grid
        if grid is None:
            return np.fromiter((_as_point(row) in self._points for row in coords),
                               dtype=bool, count=len(coords))
        upper = np.array(grid.shape, dtype=np.int64) - 1
        inside = (coords >= 0).all(axis=1) & (coords <= upper).all(axis=1)
        result = np.zeros(len(coords), dtype=bool)
        if inside.any():
            result[inside] = grid[tuple(coords[inside].T)]
        return result


class Chain:
    """
    Monotone unit-step lattice path starting at the origin.

    ``steps`` holds the points P0..Pk; ``length`` is k, which equals the
    coordinate sum of the last point.
    """

    def __init__(self, steps: Sequence):
        pts = tuple(make_point(p) for p in steps)
        if not pts:
            raise ValidationError("A chain needs at least one point")
        dim = len(pts[0])
        if pts[0] != origin(dim):
            raise ValidationError(f"A chain must start at the origin, got {format_point(pts[0])}")
        for a, b in zip(pts, pts[1:]):
            if len(b) != dim:
                raise ValidationError("All chain points must share a dimension")
            diff = [y - x for x, y in zip(a, b)]
            if sorted(diff) != [0] * (dim - 1) + [1]:
                raise ValidationError(
                    f"Chain step {format_point(a)} -> {format_point(b)} is not a unit increase")
        self._steps = pts

    @property
    def steps(self) -> Tuple[Point, ...]:
        return self._steps

    @property
    def dim(self):
        return len(self._steps[0])

    @property
    def length(self):
        return len(self._steps) - 1

    @property
    def end(self) -> Point:
        return self._steps[-1]

    def __len__(self):
        return len(self._steps)

    def __iter__(self):
        return iter(self._steps)

    def __getitem__(self, i):
        return self._steps[i]

    def __eq__(self, other):
        if not isinstance(other, Chain):
            return NotImplemented
        return self._steps == other._steps

    def __hash__(self):
        return hash(self._steps)

    def __repr__(self):
        return "Chain(" + " ".join(format_point(p) for p in self._steps) + ")"

    def point_set(self) -> PointSet:
        return PointSet(self._steps, dim=self.dim)


def _first_pairwise_failure(S: PointSet, combine):
    """First (a, b, combine(a, b)) whose result is not in S, scanning pairs lexicographically."""
    arr = S.array
    n, d = arr.shape
    block = max(1, PAIR_BLOCK // max(n, 1))
    for start in range(0, n, block):
        rows = arr[start:start + block]
        combined = combine(rows[:, None, :], arr[None, :, :])
        member = S.contains_many(combined.reshape(-1, d)).reshape(len(rows), n)
        if not member.all():
            i, j = np.argwhere(~member)[0]
            return _as_point(rows[i]), _as_point(arr[j]), _as_point(combined[i, j])
    return None


def check_accessible(S: PointSet) -> Optional[Violation]:
    """(A1): the origin is feasible and every other member has a feasible decrement."""
    S.require_non_empty("is_accessible")
    o = S.origin
    if o not in S:
        return Violation("accessible", (o,), f"origin {format_point(o)} is not a member")
    arr = S.array
    ok = (arr == 0).all(axis=1)
    for axis in range(S.dim):
        pred = arr.copy()
        pred[:, axis] -= 1
        ok |= (arr[:, axis] > 0) & S.contains_many(pred)
    if ok.all():
        return None
    p = _as_point(arr[np.argmax(~ok)])
    return Violation("accessible", (p,), f"{format_point(p)} has no feasible decrement")


def is_accessible(S: PointSet) -> bool:
    return check_accessible(S) is None


def check_union_closed(S: PointSet) -> Optional[Violation]:
    S.require_non_empty("is_union_closed")
    failure = _first_pairwise_failure(S, np.maximum)
    if failure is None:
        return None
    a, b, j = failure
    return Violation("union_closed", (a, b),
                     f"{format_point(a)} ∪ {format_point(b)} = {format_point(j)} is not a member")


def is_union_closed(S: PointSet) -> bool:
    return check_union_closed(S) is None


def check_intersection_closed(S: PointSet) -> Optional[Violation]:
    S.require_non_empty("is_intersection_closed")
    failure = _first_pairwise_failure(S, np.minimum)
    if failure is None:
        return None
    a, b, m = failure
    return Violation("intersection_closed", (a, b),
                     f"{format_point(a)} ∩ {format_point(b)} = {format_point(m)} is not a member")


def is_intersection_closed(S: PointSet) -> bool:
    return check_intersection_closed(S) is None


def check_exchange_strict(S: PointSet) -> Optional[Violation]:
    """
    (A2) in multiset form: for A not below B some coordinate i has
    A_i > B_i and B + e_i in S.
    """
    S.require_non_empty("satisfies_exchange_strict")
    arr = S.array
    n, d = arr.shape
    succ = np.zeros((n, d), dtype=bool)
    for axis in range(d):
        nxt = arr.copy()
        nxt[:, axis] += 1
        succ[:, axis] = S.contains_many(nxt)
    block = max(1, PAIR_BLOCK // max(n * d, 1))
    for start in range(0, n, block):
        rows = arr[start:start + block]
        greater = rows[:, None, :] > arr[None, :, :]
        not_below = greater.any(axis=2)
        extendable = (greater & succ[None, :, :]).any(axis=2)
        bad = not_below & ~extendable
        if bad.any():
            i, j = np.argwhere(bad)[0]
            a, b = _as_point(rows[i]), _as_point(arr[j])
            return Violation("exchange_strict", (a, b),
                             f"A={format_point(a)}, B={format_point(b)}: no coordinate where A "
                             f"exceeds B extends B inside S")
    return None


def satisfies_exchange_strict(S: PointSet) -> bool:
    return check_exchange_strict(S) is None


def _upward_reachability(S: PointSet) -> np.ndarray:
    """reach[i, j] is True when member j is reachable from member i by +e steps inside S."""
    pts = S.sorted()
    index = {p: i for i, p in enumerate(pts)}
    n = len(pts)
    reach = np.zeros((n, n), dtype=bool)
    for p in sorted(pts, key=sum, reverse=True):
        i = index[p]
        reach[i, i] = True
        for axis in range(S.dim):
            q = index.get(step_up(p, axis))
            if q is not None:
                reach[i] |= reach[q]
    return reach


def check_chain_property(S: PointSet) -> Optional[Violation]:
    """Every nested pair A < B is joined by a unit-step monotone path inside S."""
    S.require_non_empty("satisfies_chain_property")
    arr = S.array
    below = (arr[:, None, :] <= arr[None, :, :]).all(axis=2)
    bad = below & ~_upward_reachability(S)
    if not bad.any():
        return None
    i, j = np.argwhere(bad)[0]
    a, b = _as_point(arr[i]), _as_point(arr[j])
    return Violation("chain_property", (a, b),
                     f"no unit-step path from {format_point(a)} to {format_point(b)} inside S")


def satisfies_chain_property(S: PointSet) -> bool:
    return check_chain_property(S) is None


def is_poly_antimatroid(S: PointSet) -> bool:
    """Accessible and closed under union."""
    return is_accessible(S) and is_union_closed(S)


def is_chain_set(S: PointSet) -> bool:
    """True when the members are pairwise comparable."""
    pts = sorted(S.points, key=lambda p: (sum(p), p))
    return all(leq(a, b) for a, b in zip(pts, pts[1:]))


def join_of_chains(chains: Sequence[Chain]) -> PointSet:
    """All joins picking one point from each chain."""
    chains = list(chains)
    if not chains:
        raise ValidationError("join_of_chains needs at least one chain")
    dim = chains[0].dim
    for ch in chains[1:]:
        if ch.dim != dim:
            raise ValidationError(f"Chain dimensions differ ({ch.dim} vs {dim})")
    acc = np.array(chains[0].steps, dtype=np.int64)
    for ch in chains[1:]:
        steps = np.array(ch.steps, dtype=np.int64)
        acc = np.maximum(acc[:, None, :], steps[None, :, :]).reshape(-1, dim)
        acc = np.unique(acc, axis=0)
    return PointSet.from_array(acc, dim)


class LatticeBox:
    """
    Cells of the box [0..corner] indexed in row-major order (last
    coordinate fastest), with helpers to move between point sets and
    integer bitmasks.
    """

    def __init__(self, corner):
        self.corner = make_point(corner)
        self.dim = len(self.corner)
        self.shape = tuple(c + 1 for c in self.corner)
        self.size = int(np.prod(self.shape))
        self.coords = np.stack(np.unravel_index(np.arange(self.size), self.shape), axis=1)
        self.strides = tuple(int(np.prod(self.shape[axis + 1:])) for axis in range(self.dim))

    def index(self, p) -> int:
        return int(np.ravel_multi_index(tuple(p), self.shape))

    def point(self, i) -> Point:
        return _as_point(self.coords[i])

    def contains(self, p) -> bool:
        return len(p) == self.dim and all(0 <= c <= m for c, m in zip(p, self.corner))

    def mask(self, points) -> int:
        m = 0
        for p in points:
            if not self.contains(p):
                raise ValidationError(f"Point {format_point(p)} lies outside box {format_point(self.corner)}")
            m |= 1 << self.index(p)
        return m

    def bits(self, mask) -> List[int]:
        out = []
        i = 0
        while mask:
            if mask & 1:
                out.append(i)
            mask >>= 1
            i += 1
        return out

    def points(self, mask) -> PointSet:
        return PointSet((self.point(i) for i in self.bits(mask)), dim=self.dim)

    def axis_positive_mask(self, axis) -> int:
        """Cells whose coordinate on ``axis`` is positive."""
        m = 0
        for i in np.flatnonzero(self.coords[:, axis] > 0):
            m |= 1 << int(i)
        return m

    def box_mask(self, lo, hi) -> int:
        """Cells of the sub-box [lo..hi]."""
        inside = (self.coords >= np.array(lo)).all(axis=1) & (self.coords <= np.array(hi)).all(axis=1)
        m = 0
        for i in np.flatnonzero(inside):
            m |= 1 << int(i)
        return m

    def dominating_mask(self, lo) -> int:
        """Cells that dominate ``lo`` componentwise."""
        return self.box_mask(lo, self.corner)
