"""
Convex dimension of poly-antimatroids.

The convex dimension of S is the least number of maximal chains whose
join (every choice of one point per chain, joined) reproduces S. The
lower bound comes from antichains of join-irreducible points: a chain
holds at most one point of an antichain, and every join-irreducible
must sit on one of the chains.
"""

import logging
from bisect import bisect_left
from dataclasses import dataclass
from itertools import combinations
from typing import List, Tuple, Union

import networkx as nx
import numpy as np

from .core import Chain, PointSet, is_chain_set, is_poly_antimatroid, join_of_chains, step_up
from .planar import satisfies_def4, trace_lower_boundary, trace_upper_boundary
from .utils import InvalidInputError, SearchCapExceeded, ValidationError, format_point, validate_positive_int

logger = logging.getLogger(__name__)

DEFAULT_CHAIN_CAP = 10_000
DEFAULT_SUBSET_CAP = 2_000_000


@dataclass(frozen=True)
class CdimResult:
    """
    Exact convex dimension (lower == upper, witnesses present) or an
    interval when a search cap was hit.
    """

    lower: int
    upper: int
    witness_chains: Tuple[Chain, ...]
    irreducible_antichain: PointSet
    exhausted: bool = False
    method: str = "search"

    def __post_init__(self):
        if self.lower > self.upper:
            raise ValidationError(f"Convex dimension interval [{self.lower}, {self.upper}] is empty")

    @property
    def is_exact(self):
        return not self.exhausted and self.lower == self.upper

    @property
    def value(self) -> Union[int, Tuple[int, int]]:
        return self.lower if self.is_exact else (self.lower, self.upper)


def enumerate_maximal_chains(S: PointSet, cap=DEFAULT_CHAIN_CAP) -> List[Chain]:
    """
    All unit-step paths inside S from the origin to the maximum member,
    depth first with axes tried in ascending order.

    Raises SearchCapExceeded once more than ``cap`` chains exist.
    """
    validate_positive_int(cap, "chain cap")
    S.require_non_empty("enumerate_maximal_chains")
    top = S.max_point
    if top not in S:
        raise InvalidInputError(f"maximum point {format_point(top)} is not a member", top)
    if S.origin not in S:
        raise InvalidInputError("origin is not a member", S.origin)

    chains = []
    path = [S.origin]
    next_axis = [0]
    while path:
        p = path[-1]
        if p == top:
            chains.append(Chain(path))
            if len(chains) > cap:
                raise SearchCapExceeded("chain cap", cap)
            path.pop()
            next_axis.pop()
            continue
        axis = next_axis[-1]
        if axis == S.dim:
            path.pop()
            next_axis.pop()
            continue
        next_axis[-1] += 1
        q = step_up(p, axis)
        if q in S:
            path.append(q)
            next_axis.append(0)
    logger.debug("enumerated %d maximal chains", len(chains))
    return chains


def join_irreducibles(S: PointSet) -> PointSet:
    """Non-origin members strictly above the join of the members below them."""
    S.require_non_empty("join_irreducibles")
    arr = S.array
    out = []
    for row in arr:
        if not row.any():
            continue
        below = (arr <= row).all(axis=1) & (arr != row).any(axis=1)
        lower_join = arr[below].max(axis=0) if below.any() else np.zeros_like(row)
        if (lower_join != row).any():
            out.append(row)
    return PointSet.from_array(np.array(out, dtype=np.int64).reshape(-1, S.dim), S.dim)


def max_antichain(points: PointSet) -> Tuple[int, PointSet]:
    """
    Largest pairwise-incomparable subset under dominance.

    Minimum chain cover through maximum bipartite matching (Hopcroft-Karp);
    the antichain is read off the König vertex cover: elements with
    neither copy in the cover.
    """
    pts = points.sorted()
    n = len(pts)
    if n == 0:
        return 0, PointSet([], dim=points.dim)
    arr = points.array
    strictly_below = (arr[:, None, :] <= arr[None, :, :]).all(axis=2) & ~np.eye(n, dtype=bool)

    graph = nx.Graph()
    left = [("u", i) for i in range(n)]
    graph.add_nodes_from(left, bipartite=0)
    graph.add_nodes_from((("v", i) for i in range(n)), bipartite=1)
    graph.add_edges_from((("u", int(i)), ("v", int(j))) for i, j in np.argwhere(strictly_below))

    matching = nx.bipartite.hopcroft_karp_matching(graph, top_nodes=left)
    cover = nx.bipartite.to_vertex_cover(graph, matching, top_nodes=left)
    size = n - len(matching) // 2
    witness = [pts[i] for i in range(n) if ("u", i) not in cover and ("v", i) not in cover]
    return size, PointSet(witness, dim=points.dim)


def max_antichain_2d(points: PointSet) -> Tuple[int, PointSet]:
    """
    Planar shortcut: with points sorted by (x, y), an antichain is a
    strictly decreasing run of y values.
    """
    if points.dim != 2:
        raise ValidationError("max_antichain_2d needs two-dimensional points")
    pts = points.sorted()
    if not pts:
        return 0, PointSet([], dim=2)
    tails, tail_idx = [], []
    prev = [-1] * len(pts)
    for i, (_, y) in enumerate(pts):
        pos = bisect_left(tails, -y)
        if pos == len(tails):
            tails.append(-y)
            tail_idx.append(i)
        else:
            tails[pos] = -y
            tail_idx[pos] = i
        prev[i] = tail_idx[pos - 1] if pos > 0 else -1
    witness = []
    i = tail_idx[-1]
    while i >= 0:
        witness.append(pts[i])
        i = prev[i]
    return len(tails), PointSet(witness, dim=2)


def cdim_lower_bound(S: PointSet) -> int:
    return max(1, max_antichain(join_irreducibles(S))[0])


def convex_dimension_exact(S: PointSet, chain_cap=DEFAULT_CHAIN_CAP,
                           subset_cap=DEFAULT_SUBSET_CAP) -> CdimResult:
    """
    Smallest k such that some k maximal chains join to S.

    k starts at the antichain lower bound; k-subsets are tried in
    lexicographic order of chain index and the first success is returned.
    A subset joins to S exactly when every join-irreducible lies on one of
    its chains, so subsets are screened with an integer OR before the join
    is formed. Hitting a cap yields an interval, never a guessed value.
    """
    validate_positive_int(subset_cap, "subset cap")
    if not is_poly_antimatroid(S):
        raise InvalidInputError("convex_dimension_exact needs a poly-antimatroid")
    irreducibles = join_irreducibles(S)
    width, antichain = max_antichain(irreducibles)
    lower = max(1, width)
    # One chain through each join-irreducible always suffices.
    fallback_upper = max(lower, len(irreducibles))

    try:
        chains = enumerate_maximal_chains(S, chain_cap)
    except SearchCapExceeded as exc:
        logger.info("convex dimension left as an interval: %s", exc)
        return CdimResult(lower, fallback_upper, (), antichain, exhausted=True)

    bit = {p: 1 << i for i, p in enumerate(irreducibles.sorted())}
    everything = (1 << len(bit)) - 1
    covers = [sum(bit.get(p, 0) for p in set(ch)) for ch in chains]
    upper = max(lower, min(fallback_upper, len(chains)))

    tests = 0
    for k in range(lower, len(chains) + 1):
        for combo in combinations(range(len(chains)), k):
            tests += 1
            if tests > subset_cap:
                logger.info("subset cap %d reached at k=%d", subset_cap, k)
                return CdimResult(k, max(k, upper), (), antichain, exhausted=True)
            acc = 0
            for i in combo:
                acc |= covers[i]
            if acc != everything:
                continue
            witnesses = tuple(chains[i] for i in combo)
            if join_of_chains(witnesses) == S:
                logger.debug("convex dimension %d found after %d subset tests", k, tests)
                return CdimResult(k, k, witnesses, antichain)
    raise InvalidInputError("maximal chains do not join to the input set")


def cdim_2d(S: PointSet) -> CdimResult:
    """Closed form for planar antimatroidal sets: 1 for a chain, else 2."""
    if S.dim != 2 or not satisfies_def4(S):
        raise InvalidInputError("cdim_2d needs a two-dimensional antimatroidal point set")
    _, antichain = max_antichain(join_irreducibles(S))
    if is_chain_set(S):
        chain = Chain(sorted(S.points, key=sum))
        return CdimResult(1, 1, (chain,), antichain, method="closed-form-2d")
    witnesses = (trace_lower_boundary(S), trace_upper_boundary(S))
    return CdimResult(2, 2, witnesses, antichain, method="closed-form-2d")
