"""
Tests for the Graph type and its metric primitives.
"""

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings

from prodgraph.corpus import (
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    path_graph,
    star_graph,
)
from prodgraph.errors import GraphError, NotConnectedError
from prodgraph.graph import (
    Graph,
    all_pairs_distances,
    bipartition,
    connected_components,
    degree_sequence,
    detect_cycle_graph,
    diameter,
    from_edge_list,
    is_bipartite,
    is_complete,
    is_connected,
    is_regular,
    max_degree,
    min_degree,
    reachability_distances,
    transmission_profile,
)

from .strategies import connected_graphs, graphs


def to_networkx(g: Graph) -> nx.Graph:
    nxg = nx.Graph()
    nxg.add_nodes_from(range(g.n))
    nxg.add_edges_from(g.edges)
    return nxg


class TestConstruction:
    """Graph validation and edge-list construction."""

    def test_edges_are_sorted_and_deduplicated(self):
        g = from_edge_list(4, [(2, 1), (0, 3), (1, 2), (3, 0)])
        assert g.edges == ((0, 3), (1, 2))
        assert g.edge_count == 2

    def test_neighbors_and_degrees(self):
        g = star_graph(3)
        assert g.neighbors(0) == (1, 2, 3)
        assert g.neighbors(2) == (0,)
        assert list(g.degrees) == [3, 1, 1, 1]

    def test_self_loop_rejected(self):
        with pytest.raises(GraphError, match="self-loop"):
            from_edge_list(3, [(1, 1)])

    def test_endpoint_out_of_range_rejected(self):
        with pytest.raises(GraphError, match="outside"):
            from_edge_list(3, [(0, 3)])

    def test_zero_vertices_rejected(self):
        with pytest.raises(GraphError):
            from_edge_list(0, [])

    def test_asymmetric_adjacency_rejected(self):
        with pytest.raises(GraphError, match="symmetric"):
            Graph.from_adjacency([[0, 1], [0, 0]])

    def test_non_binary_adjacency_rejected(self):
        with pytest.raises(GraphError):
            Graph.from_adjacency([[0, 2], [2, 0]])

    def test_adjacency_is_read_only(self):
        g = path_graph(3)
        with pytest.raises(ValueError):
            g.adjacency[0, 2] = True

    def test_equality_ignores_name(self):
        assert cycle_graph(4) == cycle_graph(4).with_name("square")
        assert hash(cycle_graph(4)) == hash(cycle_graph(4).with_name("square"))
        assert cycle_graph(4) != path_graph(4)

    def test_relabel(self):
        g = path_graph(3).relabel([1, 0, 2])
        assert g.edges == ((0, 1), (0, 2))

    def test_relabel_rejects_non_permutation(self):
        with pytest.raises(GraphError):
            path_graph(3).relabel([0, 0, 1])


class TestDistances:
    """BFS distances, components and diameter."""

    def test_cycle_distances(self):
        dm = all_pairs_distances(cycle_graph(5))
        assert list(dm.row(0)) == [0, 1, 2, 2, 1]
        assert dm.diameter == 2
        assert dm.vertices_at(0, 2) == (2, 3)

    def test_disconnected_distances_raise(self):
        g = disjoint_union(path_graph(2), path_graph(3))
        with pytest.raises(NotConnectedError) as excinfo:
            all_pairs_distances(g)
        assert excinfo.value.components == 2

    def test_reachability_marks_unreachable(self):
        g = empty_graph(3)
        dist = reachability_distances(g)
        assert dist[0, 0] == 0
        assert dist[0, 1] == -1

    def test_components_are_sorted(self):
        g = from_edge_list(5, [(3, 1), (0, 4)])
        assert connected_components(g) == ((0, 4), (1, 3), (2,))

    def test_single_vertex(self):
        g = complete_graph(1)
        assert is_connected(g)
        assert diameter(g) == 0
        assert transmission_profile(g).s == 0

    @given(connected_graphs(max_order=7))
    def test_distances_match_networkx(self, g):
        lengths = dict(nx.all_pairs_shortest_path_length(to_networkx(g)))
        expected = np.array([[lengths[u][v] for v in range(g.n)] for u in range(g.n)])
        assert np.array_equal(all_pairs_distances(g).matrix, expected)

    @given(graphs(max_order=7))
    def test_components_match_networkx(self, g):
        expected = sorted(tuple(sorted(c)) for c in nx.connected_components(to_networkx(g)))
        assert sorted(connected_components(g)) == expected


class TestBipartition:
    """2-coloring with an odd-cycle certificate."""

    def test_even_cycle_is_bipartite(self):
        result = bipartition(cycle_graph(6))
        assert result.is_bipartite
        assert result.coloring == (0, 1, 0, 1, 0, 1)

    def test_odd_cycle_certificate(self):
        g = cycle_graph(7)
        result = bipartition(g)
        assert not result.is_bipartite
        cycle = result.odd_cycle
        assert len(cycle) % 2 == 1
        assert len(set(cycle)) == len(cycle)
        for a, b in zip(cycle, cycle[1:] + cycle[:1]):
            assert g.has_edge(a, b)

    @settings(max_examples=60)
    @given(graphs(max_order=7))
    def test_matches_networkx_and_certificate_is_valid(self, g):
        result = bipartition(g)
        assert result.is_bipartite == nx.is_bipartite(to_networkx(g))
        if result.is_bipartite:
            for u, v in g.edges:
                assert result.coloring[u] != result.coloring[v]
        else:
            cycle = result.odd_cycle
            assert len(cycle) % 2 == 1
            for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                assert g.has_edge(a, b)


class TestDegreeInvariants:
    """Degree summaries, regularity, completeness and cycle detection."""

    def test_degree_sequence(self):
        assert degree_sequence(star_graph(3)) == [1, 1, 1, 3]
        assert min_degree(star_graph(3)) == 1
        assert max_degree(star_graph(3)) == 3

    def test_regular_and_complete(self):
        assert is_regular(cycle_graph(5))
        assert not is_regular(path_graph(3))
        assert is_complete(complete_graph(4))
        assert is_complete(complete_graph(1))
        assert not is_complete(cycle_graph(4))

    def test_detect_cycle_graph(self):
        assert detect_cycle_graph(cycle_graph(5)) == 5
        assert detect_cycle_graph(cycle_graph(3)) == 3
        assert detect_cycle_graph(path_graph(5)) is None
        assert detect_cycle_graph(disjoint_union(cycle_graph(3), cycle_graph(3))) is None
        assert detect_cycle_graph(complete_bipartite_graph(2, 2)) == 4

    def test_transmission_regular_graphs(self):
        assert transmission_profile(cycle_graph(5)).s == 6
        assert transmission_profile(cycle_graph(6)).s == 9
        profile = transmission_profile(path_graph(3))
        assert not profile.is_regular
        assert profile.s is None
        assert profile.transmissions == (3, 2, 3)

    @pytest.mark.parametrize("n", range(3, 26))
    def test_cycle_transmission(self, n):
        expected = (n * n - 1) // 4 if n % 2 else n * n // 4
        profile = transmission_profile(cycle_graph(n))
        assert profile.is_regular
        assert profile.s == expected

    def test_bipartite_helpers(self):
        assert is_bipartite(path_graph(4))
        assert not is_bipartite(complete_graph(3))
