#!/usr/bin/env python3
"""
Isomorphism machinery: explicit bijections, a verifier, a backtracking
search for small graphs, and the distance-regularity checker.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from .config import DEFAULT_NODE_BUDGET
from .errors import (
    CertificateError,
    GraphError,
    HypothesisError,
    SearchBudgetExceeded,
)
from .graph import Graph, all_pairs_distances, reachability_distances

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class VertexBijection:
    """Vertex map v -> forward[v] between two graphs of equal order."""

    forward: Tuple[int, ...]

    def __post_init__(self):
        forward = tuple(int(v) for v in self.forward)
        if sorted(forward) != list(range(len(forward))):
            raise GraphError(f"not a permutation of 0..{len(forward) - 1}")
        object.__setattr__(self, "forward", forward)

    @property
    def order(self) -> int:
        return len(self.forward)

    def __call__(self, v: int) -> int:
        return self.forward[v]

    def inverse(self) -> "VertexBijection":
        backward = [0] * self.order
        for v, image in enumerate(self.forward):
            backward[image] = v
        return VertexBijection(tuple(backward))

    def compose(self, other: "VertexBijection") -> "VertexBijection":
        """self after other: v -> self(other(v))."""
        if other.order != self.order:
            raise GraphError(f"cannot compose maps of orders {self.order} and {other.order}")
        return VertexBijection(tuple(self.forward[other.forward[v]] for v in range(self.order)))

    def is_identity(self) -> bool:
        return all(v == image for v, image in enumerate(self.forward))


def identity_map(order: int) -> VertexBijection:
    return VertexBijection(tuple(range(order)))


def f_n_map(n: int) -> VertexBijection:
    """The map C_n □ C_n -> C_n ⊗ C_n, (l, m) -> (l+m, m-l) mod n.

    Raises:
        HypothesisError: n even or n < 3; the map is not injective then.
    """
    if n < 3 or n % 2 == 0:
        raise HypothesisError(f"f_n needs an odd n >= 3, got n={n}")
    forward = [0] * (n * n)
    for l in range(n):
        for m in range(n):
            forward[l * n + m] = ((l + m) % n) * n + (m - l) % n
    return VertexBijection(tuple(forward))


@dataclass(frozen=True)
class IsomorphismCheck:
    """Verifier result; falsy with the first failing (u, v) pair."""

    ok: bool
    failing_pair: Optional[Tuple[int, int]] = None

    def __bool__(self) -> bool:
        return self.ok


def verify_isomorphism(g1: Graph, g2: Graph, phi: VertexBijection) -> IsomorphismCheck:
    """Check {u, v} in E1 iff {phi(u), phi(v)} in E2 over every vertex pair."""
    if g1.n != g2.n:
        raise GraphError(f"graph orders differ: {g1.n} vs {g2.n}")
    if phi.order != g1.n:
        raise GraphError(f"map has order {phi.order}, graphs have order {g1.n}")
    images = np.asarray(phi.forward, dtype=np.int64)
    mapped = g2.adjacency[np.ix_(images, images)]
    bad = np.argwhere(np.triu(mapped != g1.adjacency, k=1))
    if bad.size:
        u, v = bad[0]
        return IsomorphismCheck(False, (int(u), int(v)))
    return IsomorphismCheck(True)


# ---------------------------------------------------------------------------
# Backtracking search
# ---------------------------------------------------------------------------


class SearchStatus(Enum):
    FOUND = "found"
    ABSENT = "absent"
    BUDGET_EXCEEDED = "budget_exceeded"


@dataclass(frozen=True)
class SearchOutcome:
    status: SearchStatus
    bijection: Optional[VertexBijection] = None
    nodes: int = 0

    @property
    def found(self) -> bool:
        return self.status is SearchStatus.FOUND


def _initial_keys(g: Graph, dist: np.ndarray) -> List[tuple]:
    degrees = g.degrees
    keys = []
    for v in range(g.n):
        neighbor_degrees = tuple(sorted(int(degrees[w]) for w in g.neighbors(v)))
        # shift by one so unreachable (-1) lands in bin 0
        profile = tuple(np.bincount(dist[v] + 1, minlength=g.n + 1).tolist())
        keys.append((int(degrees[v]), neighbor_degrees, profile))
    return keys


def _joint_colors(keys1: Sequence, keys2: Sequence) -> Tuple[List[int], List[int]]:
    palette = {key: color for color, key in enumerate(sorted(set(keys1) | set(keys2)))}
    return [palette[k] for k in keys1], [palette[k] for k in keys2]


def _histogram(colors: Sequence[int]) -> Dict[int, int]:
    counts: Dict[int, int] = {}
    for color in colors:
        counts[color] = counts.get(color, 0) + 1
    return counts


def refine_colors(
    g1: Graph, g2: Graph, dist1: np.ndarray, dist2: np.ndarray
) -> Optional[Tuple[List[int], List[int]]]:
    """Joint color refinement of both graphs.

    Starts from (degree, neighbor degrees, distance profile) and refines by
    neighbor color multisets until stable. Returns None as soon as the color
    class sizes of the two graphs differ.
    """
    c1, c2 = _joint_colors(_initial_keys(g1, dist1), _initial_keys(g2, dist2))
    while True:
        if _histogram(c1) != _histogram(c2):
            return None
        classes = len(set(c1))
        keys1 = [(c1[v], tuple(sorted(c1[w] for w in g1.neighbors(v)))) for v in range(g1.n)]
        keys2 = [(c2[v], tuple(sorted(c2[w] for w in g2.neighbors(v)))) for v in range(g2.n)]
        c1, c2 = _joint_colors(keys1, keys2)
        if len(set(c1)) == classes:
            return (c1, c2) if _histogram(c1) == _histogram(c2) else None


def _search_order(g: Graph, colors: Sequence[int]) -> List[int]:
    # connectivity-first: prefer vertices adjacent to many already placed
    class_size = _histogram(colors)
    placed_neighbors = [0] * g.n
    remaining = set(range(g.n))
    order = []
    while remaining:
        v = min(
            remaining,
            key=lambda u: (-placed_neighbors[u], class_size[colors[u]], u),
        )
        remaining.remove(v)
        order.append(v)
        for w in g.neighbors(v):
            placed_neighbors[w] += 1
    return order


class _BudgetHit(Exception):
    pass


@dataclass
class _Backtracker:
    g1: Graph
    g2: Graph
    dist1: np.ndarray
    dist2: np.ndarray
    colors1: List[int]
    colors2: List[int]
    budget: int
    nodes: int = 0
    order: List[int] = field(default_factory=list)

    def run(self) -> Optional[List[int]]:
        n = self.g1.n
        self.order = _search_order(self.g1, self.colors1)
        position = {v: k for k, v in enumerate(self.order)}
        # earliest placed neighbor of each vertex, used to narrow candidates
        self.anchor = []
        for k, v in enumerate(self.order):
            earlier = [w for w in self.g1.neighbors(v) if position[w] < k]
            self.anchor.append(min(earlier, key=position.get) if earlier else None)
        self.by_color: Dict[int, List[int]] = {}
        for w in range(n):
            self.by_color.setdefault(self.colors2[w], []).append(w)

        self.mapping = [-1] * n
        self.used = [False] * n
        self.images: List[int] = []
        return list(self.mapping) if self._extend(0) else None

    def _candidates(self, k: int, u: int) -> Sequence[int]:
        anchor = self.anchor[k]
        if anchor is None:
            return self.by_color[self.colors1[u]]
        return self.g2.neighbors(self.mapping[anchor])

    def _frame(self, k: int) -> Tuple[int, np.ndarray, np.ndarray, Iterator[int]]:
        u = self.order[k]
        placed = np.asarray(self.order[:k], dtype=np.int64)
        images = np.asarray(self.images, dtype=np.int64)
        return u, self.dist1[u, placed], images, iter(self._candidates(k, u))

    def _extend(self, start: int) -> bool:
        # one stack frame per placed vertex
        depth = len(self.order)
        if start == depth:
            return True
        stack = [self._frame(start)]
        while stack:
            u, wanted, images, candidates = stack[-1]
            if self.mapping[u] != -1:
                self.used[self.mapping[u]] = False
                self.mapping[u] = -1
                self.images.pop()

            chosen = None
            for c in candidates:
                if self.used[c] or self.colors2[c] != self.colors1[u]:
                    continue
                self.nodes += 1
                if self.nodes > self.budget:
                    raise _BudgetHit()
                if np.array_equal(self.dist2[c, images], wanted):
                    chosen = c
                    break
            if chosen is None:
                stack.pop()
                continue

            self.mapping[u] = chosen
            self.used[chosen] = True
            self.images.append(chosen)
            k = start + len(stack)
            if k == depth:
                return True
            stack.append(self._frame(k))
        return False


def search_isomorphism(
    g1: Graph, g2: Graph, node_budget: Optional[int] = None
) -> SearchOutcome:
    """Exhaustive isomorphism search over refined color classes.

    A found bijection is always re-verified before it is returned.
    """
    budget = DEFAULT_NODE_BUDGET if node_budget is None else node_budget
    if g1.n != g2.n or g1.edge_count != g2.edge_count:
        return SearchOutcome(SearchStatus.ABSENT)

    dist1 = reachability_distances(g1)
    dist2 = reachability_distances(g2)
    colors = refine_colors(g1, g2, dist1, dist2)
    if colors is None:
        logger.debug("color refinement separates %r and %r", g1, g2)
        return SearchOutcome(SearchStatus.ABSENT)

    tracker = _Backtracker(g1, g2, dist1, dist2, colors[0], colors[1], budget)
    try:
        mapping = tracker.run()
    except _BudgetHit:
        logger.debug("search aborted at %d nodes", tracker.nodes)
        return SearchOutcome(SearchStatus.BUDGET_EXCEEDED, nodes=tracker.nodes)

    logger.debug("search finished after %d nodes", tracker.nodes)
    if mapping is None:
        return SearchOutcome(SearchStatus.ABSENT, nodes=tracker.nodes)

    phi = VertexBijection(tuple(mapping))
    check = verify_isomorphism(g1, g2, phi)
    if not check:
        raise CertificateError(f"search produced a bad map, pair {check.failing_pair} fails")
    return SearchOutcome(SearchStatus.FOUND, phi, tracker.nodes)


def find_isomorphism(
    g1: Graph, g2: Graph, node_budget: Optional[int] = None
) -> Optional[VertexBijection]:
    """Bijection g1 -> g2 or None.

    Raises:
        SearchBudgetExceeded: the search gave up; isomorphism is unknown.
    """
    outcome = search_isomorphism(g1, g2, node_budget)
    if outcome.status is SearchStatus.BUDGET_EXCEEDED:
        budget = DEFAULT_NODE_BUDGET if node_budget is None else node_budget
        raise SearchBudgetExceeded(outcome.nodes, budget)
    return outcome.bijection


# ---------------------------------------------------------------------------
# Distance regularity
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class IntersectionWitness:
    """Pairs (x, y) and (z_base, z) at distance i with different c_i or b_i.

    family is "c" (neighbors one step closer to the base) or "b" (one step
    farther). At i = 0, b_0 is the degree.
    """

    x: int
    y: int
    z: int
    i: int
    family: str
    y_value: int
    z_value: int
    z_base: Optional[int] = None

    @property
    def base_of_z(self) -> int:
        return self.x if self.z_base is None else self.z_base

    def recheck(self, g: Graph) -> bool:
        """Recompute distances and counts by direct neighborhood scan."""
        dm = all_pairs_distances(g)
        if dm.distance(self.x, self.y) != self.i:
            return False
        if dm.distance(self.base_of_z, self.z) != self.i:
            return False
        step = -1 if self.family == "c" else 1
        y_count = sum(
            1 for w in g.neighbors(self.y) if dm.distance(self.x, w) == self.i + step
        )
        z_count = sum(
            1
            for w in g.neighbors(self.z)
            if dm.distance(self.base_of_z, w) == self.i + step
        )
        return (y_count, z_count) == (self.y_value, self.z_value) and y_count != z_count

    def to_dict(self) -> dict:
        return {
            "x": self.x,
            "y": self.y,
            "z": self.z,
            "z_base": self.base_of_z,
            "distance": self.i,
            "family": self.family,
            "y_value": self.y_value,
            "z_value": self.z_value,
        }


IntersectionArray = Tuple[Tuple[int, ...], Tuple[int, ...]]


@dataclass(frozen=True)
class DistanceRegularity:
    regular: bool
    diameter: int
    intersection_array: Optional[IntersectionArray] = None
    witness: Optional[IntersectionWitness] = None

    def to_dict(self) -> dict:
        data: dict = {"regular": self.regular, "diameter": self.diameter}
        if self.intersection_array is not None:
            b, c = self.intersection_array
            data["intersection_array"] = {"b": list(b), "c": list(c)}
        if self.witness is not None:
            data["witness"] = self.witness.to_dict()
        return data


def _witness(x, y, z, i, counts_y, counts_z, z_base=None) -> IntersectionWitness:
    c_y, b_y = counts_y
    c_z, b_z = counts_z
    if c_y != c_z:
        return IntersectionWitness(x, y, z, i, "c", c_y, c_z, z_base)
    return IntersectionWitness(x, y, z, i, "b", b_y, b_z, z_base)


def distance_regularity_check(g: Graph) -> DistanceRegularity:
    """Decide distance-regularity, with a witness when it fails.

    Bases x and distances i are scanned in increasing order. Within a base,
    y is the first vertex at distance i and z the last one whose (c_i, b_i)
    differs from y's. A disagreement between bases is reported with
    z_base set to the later base.

    Raises:
        NotConnectedError: g is disconnected.
    """
    dm = all_pairs_distances(g)
    dist = dm.matrix
    adj = g.adjacency
    reference: Dict[int, Tuple[Tuple[int, int], int, int]] = {}

    for x in range(g.n):
        dx = dist[x]
        closer = (adj & (dx[None, :] == dx[:, None] - 1)).sum(axis=1)
        farther = (adj & (dx[None, :] == dx[:, None] + 1)).sum(axis=1)
        for i in range(dm.diameter + 1):
            at = np.flatnonzero(dx == i)
            if at.size == 0:
                break
            y = int(at[0])
            counts_y = (int(closer[y]), int(farther[y]))
            differing = [int(v) for v in at if (int(closer[v]), int(farther[v])) != counts_y]
            if differing:
                z = differing[-1]
                counts_z = (int(closer[z]), int(farther[z]))
                return DistanceRegularity(
                    False, dm.diameter, witness=_witness(x, y, z, i, counts_y, counts_z)
                )
            if i not in reference:
                reference[i] = (counts_y, x, y)
                continue
            counts_ref, ref_x, ref_y = reference[i]
            if counts_ref != counts_y:
                return DistanceRegularity(
                    False,
                    dm.diameter,
                    witness=_witness(ref_x, ref_y, y, i, counts_ref, counts_y, z_base=x),
                )

    b = tuple(reference[i][0][1] for i in range(dm.diameter))
    c = tuple(reference[i][0][0] for i in range(1, dm.diameter + 1))
    return DistanceRegularity(True, dm.diameter, intersection_array=(b, c))
