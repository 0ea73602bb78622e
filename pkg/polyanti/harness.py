"""
Search harness for the three-dimensional conjectures.

Enumerates (or samples) poly-antimatroids inside a small box and tests
two claims on every poset poly-antimatroid found: that it is a step
staircase, and that its convex dimension stays within a bound. Subsets
of the box are integers over row-major cell indices; the origin is cell
0, so the origin-containing subsets are ``(s << 1) | 1`` for ascending s.
"""

import logging
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, Iterator, List, Optional

import numpy as np
from tqdm import tqdm

from .cdim import convex_dimension_exact
from .config import SearchLimits
from .core import LatticeBox, Point, PointSet, is_accessible, is_intersection_closed, is_union_closed
from .pointfile import PointFile
from .staircase import is_poset_poly_antimatroid, is_step_staircase
from .utils import BoxTooLargeError, SearchCapExceeded, ValidationError, format_point, validate_positive_int

logger = logging.getLogger(__name__)

MAX_EXHAUSTIVE_CELLS = 20
CLAIMS = ("staircase", "cdim")
DEFAULT_BOUND = 3
CLASS_KEYS = ("scanned", "accessible", "poly_antimatroid", "intersection_closed", "poset_poly_antimatroid")
CLAIM_KEYS = {"staircase": "step_staircase", "cdim": "cdim_within_bound"}


@dataclass(frozen=True)
class Counterexample:
    claim: str
    mask: int
    points: PointSet
    detail: str = ""


@dataclass(frozen=True)
class Indeterminate:
    claim: str
    mask: int
    points: PointSet
    reason: str


@dataclass
class SearchReport:
    """
    Outcome of one conjecture run. ``counts`` are cumulative class sizes:
    poly_antimatroid counts the accessible sets that are also union-closed,
    intersection_closed the accessible sets closed under intersection.
    """

    box: Point
    claim: str
    mode: str = "exhaustive"
    bound: Optional[int] = None
    seed: Optional[int] = None
    counts: Dict[str, int] = field(default_factory=dict)
    counterexamples: List[Counterexample] = field(default_factory=list)
    indeterminates: List[Indeterminate] = field(default_factory=list)
    duration: float = 0.0

    @property
    def claim_key(self):
        return CLAIM_KEYS[self.claim]

    def consistency_errors(self) -> List[str]:
        c = self.counts
        orderings = [
            ("scanned", "accessible"),
            ("accessible", "poly_antimatroid"),
            ("accessible", "intersection_closed"),
            ("poly_antimatroid", "poset_poly_antimatroid"),
            ("intersection_closed", "poset_poly_antimatroid"),
            ("poset_poly_antimatroid", self.claim_key),
        ]
        return [f"{small} ({c.get(small, 0)}) exceeds {big} ({c.get(big, 0)})"
                for big, small in orderings if c.get(small, 0) > c.get(big, 0)]

    @property
    def is_consistent(self):
        return not self.consistency_errors()


class _BoxTables:
    """Bit tricks and join/meet index tables for one box."""

    def __init__(self, corner):
        self.box = LatticeBox(corner)
        box = self.box
        self.shifts = [(box.strides[a], box.axis_positive_mask(a)) for a in range(box.dim)]
        coords = box.coords
        joined = np.maximum(coords[:, None, :], coords[None, :, :])
        met = np.minimum(coords[:, None, :], coords[None, :, :])
        self.join = np.ravel_multi_index(tuple(np.moveaxis(joined, -1, 0)), box.shape).tolist()
        self.meet = np.ravel_multi_index(tuple(np.moveaxis(met, -1, 0)), box.shape).tolist()
        self.preds = []
        for i in range(box.size):
            m = 0
            for axis, (stride, _) in enumerate(self.shifts):
                if coords[i, axis] > 0:
                    m |= 1 << (i - stride)
            self.preds.append(m)

    def accessible(self, m) -> bool:
        reach = 0
        for stride, positive in self.shifts:
            reach |= (m << stride) & positive
        return (m & 1) == 1 and (m & ~1 & ~reach) == 0

    def _closed(self, m, table) -> bool:
        bits = self.box.bits(m)
        for k, i in enumerate(bits):
            row = table[i]
            for j in bits[k + 1:]:
                if not (m >> row[j]) & 1:
                    return False
        return True

    def union_closed(self, m) -> bool:
        return self._closed(m, self.join)

    def intersection_closed(self, m) -> bool:
        return self._closed(m, self.meet)

    def grow(self, rng) -> int:
        """
        Random growth from the origin: each step adds a cell chosen
        uniformly among those with a predecessor in the set whose addition
        keeps the set union-closed, until a uniformly drawn target size.
        """
        target = int(rng.integers(1, self.box.size + 1))
        m = 1
        size = 1
        while size < target:
            feasible = []
            members = self.box.bits(m)
            for c in range(1, self.box.size):
                if (m >> c) & 1 or not (self.preds[c] & m):
                    continue
                row = self.join[c]
                if all((m >> row[j]) & 1 or row[j] == c for j in members):
                    feasible.append(c)
            if not feasible:
                break
            m |= 1 << feasible[int(rng.integers(len(feasible)))]
            size += 1
        return m


def _box_corner(box) -> Point:
    corner = tuple(int(c) for c in box)
    if len(corner) != 3:
        raise ValidationError(f"search box must be three-dimensional, got {format_point(corner)}")
    return LatticeBox(corner).corner


def _require_exhaustive(corner):
    cells = int(np.prod([c + 1 for c in corner]))
    if cells > MAX_EXHAUSTIVE_CELLS:
        raise BoxTooLargeError(
            f"box {format_point(corner)} has {cells} cells; exhaustive search allows at most "
            f"{MAX_EXHAUSTIVE_CELLS}, use random sampling instead")
    return cells


def enumerate_poly_antimatroids(box, require_intersection_closed=False) -> Iterator[PointSet]:
    """
    Every poly-antimatroid inside [0..box] once, in ascending subset order.

    Raises BoxTooLargeError above the exhaustive cell limit.
    """
    corner = _box_corner(box)
    cells = _require_exhaustive(corner)
    tables = _BoxTables(corner)

    def generate():
        for s in range(1 << (cells - 1)):
            m = (s << 1) | 1
            if not (tables.accessible(m) and tables.union_closed(m)):
                continue
            if require_intersection_closed and not tables.intersection_closed(m):
                continue
            yield tables.box.points(m)

    return generate()


def sample_poly_antimatroids(box, samples, seed=0, require_intersection_closed=False) -> Iterator[PointSet]:
    """Seeded random growth; sample i draws from ``default_rng([seed, i])``."""
    corner = _box_corner(box)
    validate_positive_int(samples, "samples")
    tables = _BoxTables(corner)

    def generate():
        for i in range(samples):
            m = tables.grow(np.random.default_rng([seed, i]))
            if not (tables.accessible(m) and tables.union_closed(m)):
                continue
            if require_intersection_closed and not tables.intersection_closed(m):
                continue
            yield tables.box.points(m)

    return generate()


def _violation(claim, S: PointSet, bound, limits: SearchLimits):
    """
    (holds, detail) for one poset poly-antimatroid. Raises
    SearchCapExceeded when no definite verdict was reached.
    """
    if claim == "staircase":
        spec = is_step_staircase(S, **limits.staircase_kwargs())
        return spec is not None, "" if spec else "no regular cuboid sequence"
    result = convex_dimension_exact(S, limits.chain_cap, limits.subset_cap)
    if result.lower > bound:
        return False, f"convex dimension at least {result.lower} > {bound}"
    if result.upper <= bound:
        return True, ""
    raise SearchCapExceeded("chain or subset cap", f"{limits.chain_cap}/{limits.subset_cap}")


@dataclass(frozen=True)
class _Job:
    corner: Point
    claim: str
    bound: Optional[int]
    limits: SearchLimits
    start: int
    stop: int
    random: bool = False
    save_dir: Optional[str] = None


@dataclass
class _Partial:
    counts: Dict[str, int]
    counterexamples: List[Counterexample]
    indeterminates: List[Indeterminate]


def _save_counterexample(job: _Job, ce: Counterexample):
    comments = [f"claim: {ce.claim}", f"box: {format_point(job.corner)}", f"mask: {ce.mask}"]
    if ce.claim == "cdim":
        comments.append(f"bound: {job.bound}")
    if ce.detail:
        comments.append(f"detail: {ce.detail}")
    path = Path(job.save_dir) / f"{ce.claim}-{ce.mask}.pts"
    PointFile(ce.points, comments).save(path)
    logger.info("counterexample saved to %s", path)


def _scan_chunk(job: _Job) -> _Partial:
    tables = _BoxTables(job.corner)
    claim_key = CLAIM_KEYS[job.claim]
    counts = dict.fromkeys(CLASS_KEYS + (claim_key,), 0)
    counterexamples, indeterminates = [], []
    for s in range(job.start, job.stop):
        if job.random:
            m = tables.grow(np.random.default_rng([job.limits.seed, s]))
        else:
            m = (s << 1) | 1
        counts["scanned"] += 1
        if not tables.accessible(m):
            continue
        counts["accessible"] += 1
        union = tables.union_closed(m)
        inter = tables.intersection_closed(m)
        counts["poly_antimatroid"] += union
        counts["intersection_closed"] += inter
        if not (union and inter):
            continue
        counts["poset_poly_antimatroid"] += 1
        S = tables.box.points(m)
        if job.claim == "staircase" and len(S) <= 1:
            counts[claim_key] += 1
            continue
        try:
            holds, detail = _violation(job.claim, S, job.bound, job.limits)
        except SearchCapExceeded as exc:
            indeterminates.append(Indeterminate(job.claim, m, S, str(exc)))
            continue
        if holds:
            counts[claim_key] += 1
            continue
        ce = Counterexample(job.claim, m, S, detail)
        counterexamples.append(ce)
        if job.save_dir:
            _save_counterexample(job, ce)
    logger.debug("chunk [%d, %d) done: %s", job.start, job.stop, counts)
    return _Partial(counts, counterexamples, indeterminates)


def _merge(partials) -> _Partial:
    counts: Dict[str, int] = {}
    counterexamples, indeterminates = [], []
    for part in partials:
        for key, value in part.counts.items():
            counts[key] = counts.get(key, 0) + value
        counterexamples.extend(part.counterexamples)
        indeterminates.extend(part.indeterminates)
    counterexamples.sort(key=lambda c: (c.claim, c.mask))
    indeterminates.sort(key=lambda c: (c.claim, c.mask))
    if counterexamples:
        # Sampling can draw the same set twice.
        unique = [counterexamples[0]]
        for ce in counterexamples[1:]:
            if ce.mask != unique[-1].mask:
                unique.append(ce)
        counterexamples = unique
    return _Partial(counts, counterexamples, indeterminates)


def run_search(box, claim, limits: Optional[SearchLimits] = None, bound=DEFAULT_BOUND, samples=None,
               save_dir=None, progress=False) -> SearchReport:
    """
    Scan the box for one claim. Without ``samples`` every origin-containing
    subset is visited; with ``samples`` that many seeded random growths are
    tested instead. Work is split into contiguous index ranges; results
    merge in range order, so the report does not depend on the worker count.
    """
    if claim not in CLAIMS:
        raise ValidationError(f"unknown claim {claim!r}, expected one of {', '.join(CLAIMS)}")
    limits = limits or SearchLimits()
    corner = _box_corner(box)
    if claim == "cdim":
        validate_positive_int(bound, "bound")
    else:
        bound = None
    if samples is None:
        total = 1 << (_require_exhaustive(corner) - 1)
        mode = "exhaustive"
    else:
        total = validate_positive_int(samples, "samples")
        mode = "random"
    if save_dir:
        Path(save_dir).mkdir(parents=True, exist_ok=True)

    n_chunks = min(total, 16 * limits.workers)
    size = math.ceil(total / n_chunks)
    jobs = [_Job(corner, claim, bound, limits, start, min(start + size, total), mode == "random",
                 str(save_dir) if save_dir else None)
            for start in range(0, total, size)]
    logger.info("%s search over box %s: %d subsets in %d chunks on %d workers",
                mode, format_point(corner), total, len(jobs), limits.workers)

    began = time.perf_counter()
    if limits.workers == 1:
        partials = [_scan_chunk(job) for job in tqdm(jobs, disable=not progress, desc="chunks")]
    else:
        with ProcessPoolExecutor(max_workers=limits.workers) as pool:
            partials = list(tqdm(pool.map(_scan_chunk, jobs), total=len(jobs), disable=not progress,
                                 desc="chunks"))
    merged = _merge(partials)
    report = SearchReport(box=corner, claim=claim, mode=mode, bound=bound,
                          seed=limits.seed if mode == "random" else None,
                          counts=merged.counts, counterexamples=merged.counterexamples,
                          indeterminates=merged.indeterminates,
                          duration=time.perf_counter() - began)
    if not report.is_consistent:
        raise ValidationError("inconsistent class counts: " + "; ".join(report.consistency_errors()))
    return report


def test_conjecture_staircase(box, limits=None, **kwargs) -> SearchReport:
    """Is every poset poly-antimatroid in the box with more than one point a step staircase?"""
    return run_search(box, "staircase", limits, **kwargs)


def test_cdim_bound(box, bound=DEFAULT_BOUND, limits=None, **kwargs) -> SearchReport:
    """Is the convex dimension of every poset poly-antimatroid in the box at most ``bound``?"""
    return run_search(box, "cdim", limits, bound=bound, **kwargs)


# Not pytest tests.
test_conjecture_staircase.__test__ = False
test_cdim_bound.__test__ = False


def classify(S: PointSet) -> Dict[str, bool]:
    """Class membership of one set, through the same predicates the scanner uses."""
    accessible = is_accessible(S)
    return {
        "accessible": accessible,
        "poly_antimatroid": accessible and is_union_closed(S),
        "intersection_closed": accessible and is_intersection_closed(S),
        "poset_poly_antimatroid": is_poset_poly_antimatroid(S),
    }


def reproduces_violation(claim, S: PointSet, bound=DEFAULT_BOUND, limits=None) -> bool:
    """True when S is a poset poly-antimatroid that definitely violates ``claim``."""
    if claim not in CLAIMS:
        raise ValidationError(f"unknown claim {claim!r}")
    if not is_poset_poly_antimatroid(S):
        return False
    if claim == "staircase" and len(S) <= 1:
        return False
    try:
        holds, _ = _violation(claim, S, bound, limits or SearchLimits())
    except SearchCapExceeded:
        return False
    return not holds


def replay_counterexample(path, limits=None) -> bool:
    """Reload a saved counterexample file and check that it still violates its claim."""
    parsed = PointFile.load(path)
    claim = parsed.comment_value("claim")
    if claim is None:
        raise ValidationError(f"{path} has no '# claim:' line")
    bound = parsed.comment_value("bound")
    return reproduces_violation(claim, parsed.points, int(bound) if bound else DEFAULT_BOUND, limits)
