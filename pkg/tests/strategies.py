"""Hypothesis strategies for small graphs."""

import itertools

from hypothesis import strategies as st

from prodgraph.graph import Graph, from_edge_list


@st.composite
def graphs(draw, min_order: int = 1, max_order: int = 6) -> Graph:
    n = draw(st.integers(min_value=min_order, max_value=max_order))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return from_edge_list(n, chosen)


@st.composite
def connected_graphs(draw, min_order: int = 1, max_order: int = 6) -> Graph:
    """A random spanning tree plus random extra edges."""
    n = draw(st.integers(min_value=min_order, max_value=max_order))
    edges = set()
    for v in range(1, n):
        parent = draw(st.integers(min_value=0, max_value=v - 1))
        edges.add((parent, v))
    pairs = [p for p in itertools.combinations(range(n), 2) if p not in edges]
    if pairs:
        edges.update(draw(st.lists(st.sampled_from(pairs), unique=True)))
    return from_edge_list(n, sorted(edges))


@st.composite
def permutations_of(draw, n: int):
    return draw(st.permutations(list(range(n))))
