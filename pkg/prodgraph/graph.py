#!/usr/bin/env python3
"""
Simple undirected graphs and the metric primitives every other module uses.

Vertices are always 0..n-1. Adjacency is kept as a read-only symmetric
boolean matrix (O(1) edge queries, Kronecker-friendly) and, lazily, as
neighbor tuples for breadth-first traversals.
"""

import logging
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .errors import GraphError, NotConnectedError

logger = logging.getLogger(__name__)

Edge = Tuple[int, int]


def _read_only(array: np.ndarray) -> np.ndarray:
    array.setflags(write=False)
    return array


@dataclass(frozen=True, eq=False)
class Graph:
    """Immutable simple undirected graph on vertices 0..n-1."""

    n: int
    adjacency: np.ndarray
    name: str = ""

    def __post_init__(self):
        if self.n < 1:
            raise GraphError("graph must have at least one vertex (n = 0)")
        adj = np.array(self.adjacency, dtype=bool)
        if adj.shape != (self.n, self.n):
            raise GraphError(
                f"adjacency shape {adj.shape} does not match n = {self.n}"
            )
        loops = np.flatnonzero(adj.diagonal())
        if loops.size:
            raise GraphError(f"self-loop at vertex {int(loops[0])}")
        if not np.array_equal(adj, adj.T):
            raise GraphError("adjacency is not symmetric")
        object.__setattr__(self, "adjacency", _read_only(adj))

    @classmethod
    def from_adjacency(cls, matrix: Sequence[Sequence[int]], name: str = "") -> "Graph":
        """Build a graph from a square 0/1 (or boolean) matrix."""
        adj = np.asarray(matrix)
        if adj.ndim != 2 or adj.shape[0] != adj.shape[1]:
            raise GraphError(f"adjacency must be square, got shape {adj.shape}")
        if not np.isin(adj, (0, 1)).all():
            raise GraphError("adjacency entries must be 0 or 1")
        return cls(n=adj.shape[0], adjacency=adj.astype(bool), name=name)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.adjacency, other.adjacency)

    def __hash__(self) -> int:
        return hash((self.n, self.adjacency.tobytes()))

    def __repr__(self) -> str:
        label = f"{self.name!r}, " if self.name else ""
        return f"Graph({label}n={self.n}, m={self.edge_count})"

    @cached_property
    def edges(self) -> Tuple[Edge, ...]:
        """Edges as (u, v) with u < v, in lexicographic order."""
        upper = np.argwhere(np.triu(self.adjacency, k=1))
        return tuple((int(u), int(v)) for u, v in upper)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def _neighbor_lists(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(
            tuple(int(w) for w in np.flatnonzero(row)) for row in self.adjacency
        )

    def neighbors(self, v: int) -> Tuple[int, ...]:
        """Neighbors of v in increasing order."""
        return self._neighbor_lists[v]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adjacency[u, v])

    @cached_property
    def degrees(self) -> np.ndarray:
        """Degree of every vertex, indexed by vertex."""
        return _read_only(self.adjacency.sum(axis=1).astype(np.int64))

    def adjacency_matrix(self, dtype=float) -> np.ndarray:
        """Fresh, writable 0/1 adjacency matrix."""
        return self.adjacency.astype(dtype)

    def relabel(self, permutation: Sequence[int], name: str = "") -> "Graph":
        """Graph with vertex v renamed to permutation[v]."""
        perm = np.asarray(permutation, dtype=np.int64)
        if perm.shape != (self.n,) or not np.array_equal(
            np.sort(perm), np.arange(self.n)
        ):
            raise GraphError(f"not a permutation of 0..{self.n - 1}")
        inverse = np.argsort(perm)
        return Graph(self.n, self.adjacency[np.ix_(inverse, inverse)], name=name)

    def with_name(self, name: str) -> "Graph":
        return Graph(self.n, self.adjacency, name=name)


def from_edge_list(n: int, edges: Iterable[Sequence[int]], name: str = "") -> Graph:
    """Graph on 0..n-1 with the given edges.

    Duplicates (in either orientation) collapse to one edge.

    Raises:
        GraphError: n < 1, an endpoint outside 0..n-1, or a self-loop.
    """
    if n < 1:
        raise GraphError("graph must have at least one vertex (n = 0)")
    adj = np.zeros((n, n), dtype=bool)
    for edge in edges:
        if len(edge) != 2:
            raise GraphError(f"edge {tuple(edge)!r} does not have two endpoints")
        u, v = int(edge[0]), int(edge[1])
        for endpoint in (u, v):
            if not 0 <= endpoint < n:
                raise GraphError(
                    f"endpoint {endpoint} of edge ({u}, {v}) is outside 0..{n - 1}"
                )
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        adj[u, v] = adj[v, u] = True
    return Graph(n, adj, name=name)


@dataclass(frozen=True, eq=False)
class DistanceMatrix:
    """Hop distances of a connected graph."""

    matrix: np.ndarray

    @property
    def n(self) -> int:
        return self.matrix.shape[0]

    @property
    def diameter(self) -> int:
        return int(self.matrix.max())

    def row(self, v: int) -> np.ndarray:
        return self.matrix[v]

    def distance(self, u: int, v: int) -> int:
        return int(self.matrix[u, v])

    def vertices_at(self, x: int, i: int) -> Tuple[int, ...]:
        """Vertices at distance exactly i from x, increasing."""
        return tuple(int(v) for v in np.flatnonzero(self.matrix[x] == i))

    def transmissions(self) -> np.ndarray:
        return self.matrix.sum(axis=1)


def reachability_distances(g: Graph) -> np.ndarray:
    """Hop distances for any graph, -1 marking unreachable pairs.

    Level-synchronous BFS from all sources at once; each level is one
    matrix product.
    """
    n = g.n
    adj = g.adjacency.astype(np.float32)
    dist = np.full((n, n), -1, dtype=np.int64)
    np.fill_diagonal(dist, 0)
    frontier = np.eye(n, dtype=bool)
    reached = frontier.copy()
    level = 0
    while frontier.any():
        level += 1
        nxt = (frontier.astype(np.float32) @ adj) > 0
        nxt &= ~reached
        dist[nxt] = level
        reached |= nxt
        frontier = nxt
    logger.debug("BFS levels for n=%d finished after %d sweeps", n, level)
    return dist


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    """Distance matrix of a connected graph.

    Raises:
        NotConnectedError: g is disconnected.
    """
    dist = reachability_distances(g)
    if (dist < 0).any():
        raise NotConnectedError("all_pairs_distances", len(connected_components(g)))
    return DistanceMatrix(_read_only(dist))


def connected_components(g: Graph) -> Tuple[Tuple[int, ...], ...]:
    """Maximal connected vertex sets, each sorted, ordered by smallest vertex."""
    seen = [False] * g.n
    components = []
    for root in range(g.n):
        if seen[root]:
            continue
        seen[root] = True
        queue = deque([root])
        members = [root]
        while queue:
            v = queue.popleft()
            for w in g.neighbors(v):
                if not seen[w]:
                    seen[w] = True
                    members.append(w)
                    queue.append(w)
        components.append(tuple(sorted(members)))
    return tuple(components)


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) == 1


@dataclass(frozen=True)
class Bipartition:
    """2-coloring result; odd_cycle certifies failure."""

    is_bipartite: bool
    coloring: Optional[Tuple[int, ...]] = None
    odd_cycle: Optional[Tuple[int, ...]] = None


def bipartition(g: Graph) -> Bipartition:
    """2-color every component by BFS.

    On failure the returned odd_cycle lists vertices in cyclic order; the
    last vertex is adjacent to the first.
    """
    color = [-1] * g.n
    parent = [-1] * g.n
    depth = [0] * g.n

    for root in range(g.n):
        if color[root] != -1:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for w in g.neighbors(v):
                if color[w] == -1:
                    color[w] = 1 - color[v]
                    parent[w] = v
                    depth[w] = depth[v] + 1
                    queue.append(w)
                elif color[w] == color[v]:
                    cycle = _odd_cycle_through(v, w, parent, depth)
                    return Bipartition(False, odd_cycle=cycle)

    return Bipartition(True, coloring=tuple(color))


def _odd_cycle_through(
    u: int, w: int, parent: List[int], depth: List[int]
) -> Tuple[int, ...]:
    # u ~ w with equal depth parity: tree paths to the common ancestor plus
    # the edge (w, u) close an odd cycle.
    up_u, up_w = [u], [w]
    a, b = u, w
    while depth[a] > depth[b]:
        a = parent[a]
        up_u.append(a)
    while depth[b] > depth[a]:
        b = parent[b]
        up_w.append(b)
    while a != b:
        a, b = parent[a], parent[b]
        up_u.append(a)
        up_w.append(b)
    # both paths now end at the common ancestor; keep it once
    return tuple(up_u + up_w[-2::-1])


def is_bipartite(g: Graph) -> bool:
    return bipartition(g).is_bipartite


def diameter(g: Graph) -> int:
    """Largest hop distance; raises NotConnectedError when disconnected."""
    return all_pairs_distances(g).diameter


def degree_sequence(g: Graph) -> List[int]:
    """Vertex degrees in nondecreasing order."""
    return sorted(int(d) for d in g.degrees)


def min_degree(g: Graph) -> int:
    return int(g.degrees.min())


def max_degree(g: Graph) -> int:
    return int(g.degrees.max())


def is_regular(g: Graph) -> bool:
    return min_degree(g) == max_degree(g)


def is_complete(g: Graph) -> bool:
    return g.edge_count == g.n * (g.n - 1) // 2


@dataclass(frozen=True)
class TransmissionProfile:
    """Per-vertex transmission Tr(v) = sum of distances from v."""

    transmissions: Tuple[int, ...]

    @property
    def is_regular(self) -> bool:
        return len(set(self.transmissions)) == 1

    @property
    def s(self) -> Optional[int]:
        """Common transmission when regular, else None."""
        return self.transmissions[0] if self.is_regular else None


def transmission_profile(g: Graph) -> TransmissionProfile:
    """Row sums of the distance matrix; raises NotConnectedError."""
    dm = all_pairs_distances(g)
    return TransmissionProfile(tuple(int(t) for t in dm.transmissions()))


def detect_cycle_graph(g: Graph) -> Optional[int]:
    """n if g is a cycle C_n (connected, 2-regular, n >= 3), else None."""
    if g.n < 3 or not np.all(g.degrees == 2):
        return None
    if not is_connected(g):
        return None
    return g.n
