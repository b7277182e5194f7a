#!/usr/bin/env python3
"""
Named graph families and the small-graph corpus used by property sweeps.
"""

import itertools
from functools import lru_cache
from typing import Dict, List, Tuple

import numpy as np

from .errors import GraphError
from .graph import Graph, from_edge_list, is_connected
from .graph_io import encode_graph6


def path_graph(n: int) -> Graph:
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)], name=f"P{n}")


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"a cycle needs at least 3 vertices, got {n}")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)], name=f"C{n}")


def complete_graph(n: int) -> Graph:
    return from_edge_list(n, itertools.combinations(range(n), 2), name=f"K{n}")


def empty_graph(n: int) -> Graph:
    return from_edge_list(n, [], name=f"E{n}")


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves}: vertex 0 joined to 1..leaves."""
    return from_edge_list(
        leaves + 1, [(0, i) for i in range(1, leaves + 1)], name=f"K1,{leaves}"
    )


def complete_bipartite_graph(a: int, b: int) -> Graph:
    edges = [(i, a + j) for i in range(a) for j in range(b)]
    return from_edge_list(a + b, edges, name=f"K{a},{b}")


def disjoint_union(g: Graph, h: Graph) -> Graph:
    n = g.n + h.n
    adj = np.zeros((n, n), dtype=bool)
    adj[: g.n, : g.n] = g.adjacency
    adj[g.n :, g.n :] = h.adjacency
    return Graph(n, adj, name=f"{g.name}+{h.name}")


def _canonical_mask(n: int, edges: List[Tuple[int, int]]) -> int:
    # smallest upper-triangle bitmask over all relabelings
    positions = {
        pair: bit for bit, pair in enumerate(itertools.combinations(range(n), 2))
    }
    best = None
    for perm in itertools.permutations(range(n)):
        mask = 0
        for u, v in edges:
            a, b = perm[u], perm[v]
            mask |= 1 << positions[(a, b) if a < b else (b, a)]
        if best is None or mask < best:
            best = mask
    return best


@lru_cache(maxsize=None)
def _connected_graphs_of_order(n: int) -> Tuple[Graph, ...]:
    pairs = list(itertools.combinations(range(n), 2))
    by_key: Dict[Tuple[Tuple[int, ...], int], Graph] = {}
    for mask in range(1 << len(pairs)):
        edges = [pairs[k] for k in range(len(pairs)) if mask >> k & 1]
        if len(edges) < n - 1:
            continue
        g = from_edge_list(n, edges)
        if not is_connected(g):
            continue
        degree_key = tuple(sorted(int(d) for d in g.degrees))
        key = (degree_key, _canonical_mask(n, edges))
        if key not in by_key:
            by_key[key] = g.with_name(encode_graph6(g))
    return tuple(sorted(by_key.values(), key=lambda g: (g.edge_count, g.name)))


def connected_graphs(max_order: int) -> List[Graph]:
    """All connected graphs on 1..max_order vertices, up to isomorphism.

    Orders above 6 are refused: the relabeling canonical form is factorial.
    """
    if max_order > 6:
        raise GraphError(f"exhaustive enumeration supports order <= 6, got {max_order}")
    graphs: List[Graph] = []
    for n in range(1, max_order + 1):
        graphs.extend(_connected_graphs_of_order(n))
    return graphs


def named_families(max_order: int, min_order: int = 1) -> List[Graph]:
    """Paths, cycles, complete, star and balanced complete bipartite graphs."""
    graphs = []
    for n in range(max(min_order, 1), max_order + 1):
        graphs.append(path_graph(n))
        if n >= 3:
            graphs.append(cycle_graph(n))
        graphs.append(complete_graph(n))
        if n >= 4:
            graphs.append(star_graph(n - 1))
            a = n // 2
            if a >= 2:
                graphs.append(complete_bipartite_graph(a, n - a))
    return graphs


def standard_corpus(exhaustive_order: int = 5, max_order: int = 8) -> List[Graph]:
    """Every connected graph up to exhaustive_order plus larger named families."""
    corpus = connected_graphs(exhaustive_order)
    seen = set(corpus)
    for g in named_families(max_order, min_order=exhaustive_order + 1):
        if g not in seen:
            seen.add(g)
            corpus.append(g)
    return corpus


def cycle_corpus(max_n: int) -> List[Graph]:
    return [cycle_graph(n) for n in range(3, max_n + 1)]
