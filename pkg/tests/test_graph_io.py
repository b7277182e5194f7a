"""
Tests for the edge-list and graph6 formats.
"""

import networkx as nx
import pytest
from hypothesis import given

from prodgraph.corpus import complete_graph, cycle_graph, path_graph
from prodgraph.errors import GraphFormatError
from prodgraph.graph_io import (
    EDGELIST,
    GRAPH6,
    decode_graph6,
    detect_format,
    encode_graph6,
    format_edge_list,
    format_mapping,
    parse_edge_list,
    parse_graph,
    read_graph,
    write_graph,
)

from .strategies import graphs


class TestEdgeList:
    """'n m' header followed by 'u v' lines."""

    def test_parse_with_comments_and_blank_lines(self):
        text = "# a triangle\n3 3\n\n0 1\n1 2\n# closing edge\n2 0\n"
        g = parse_edge_list(text)
        assert g.n == 3
        assert g.edges == ((0, 1), (0, 2), (1, 2))

    def test_format_is_lexicographic(self):
        assert format_edge_list(cycle_graph(4)) == "4 4\n0 1\n0 3\n1 2\n2 3\n"

    def test_isolated_vertices_survive(self):
        g = parse_edge_list("5 1\n0 1\n")
        assert g.n == 5
        assert g.degrees[4] == 0

    def test_empty_input(self):
        with pytest.raises(GraphFormatError) as excinfo:
            parse_edge_list("# nothing\n")
        assert excinfo.value.line == 1

    def test_edge_count_mismatch(self):
        with pytest.raises(GraphFormatError, match="declares 3 edges"):
            parse_edge_list("3 3\n0 1\n1 2\n")

    def test_endpoint_out_of_range_reports_line(self):
        with pytest.raises(GraphFormatError) as excinfo:
            parse_edge_list("3 2\n0 1\n1 3\n")
        assert excinfo.value.line == 3
        assert str(excinfo.value).startswith("line 3:")

    def test_self_loop_reports_line(self):
        with pytest.raises(GraphFormatError) as excinfo:
            parse_edge_list("3 1\n\n2 2\n")
        assert excinfo.value.line == 3

    def test_non_integer_field(self):
        with pytest.raises(GraphFormatError) as excinfo:
            parse_edge_list("3 1\n0 x\n")
        assert excinfo.value.line == 2

    def test_bad_header(self):
        with pytest.raises(GraphFormatError):
            parse_edge_list("3\n")
        with pytest.raises(GraphFormatError):
            parse_edge_list("0 0\n")


class TestGraph6:
    """Standard graph6 encoding."""

    @pytest.mark.parametrize(
        "graph, expected",
        [
            (complete_graph(1), "@"),
            (complete_graph(2), "A_"),
            (path_graph(3), "Bg"),
            (cycle_graph(5), "Dhc"),
            (complete_graph(4), "C~"),
        ],
    )
    def test_known_encodings(self, graph, expected):
        assert encode_graph6(graph) == expected
        assert decode_graph6(expected) == graph

    def test_header_is_optional(self):
        assert decode_graph6(">>graph6<<Dhc") == cycle_graph(5)
        assert encode_graph6(cycle_graph(5), header=True) == ">>graph6<<Dhc"

    def test_large_order_uses_long_form(self):
        g = path_graph(70)
        encoded = encode_graph6(g)
        assert encoded.startswith("~")
        assert decode_graph6(encoded) == g

    def test_wrong_length_rejected(self):
        with pytest.raises(GraphFormatError, match="expected 2"):
            decode_graph6("Dh")

    def test_invalid_character_rejected(self):
        with pytest.raises(GraphFormatError):
            decode_graph6("D h")

    def test_nonzero_padding_rejected(self):
        # P3 has 3 bits and 3 padding bits; "Bp" sets the last padding bit
        with pytest.raises(GraphFormatError, match="padding"):
            decode_graph6("Bp")

    @given(graphs(max_order=9))
    def test_agrees_with_networkx(self, g):
        nxg = nx.Graph()
        nxg.add_nodes_from(range(g.n))
        nxg.add_edges_from(g.edges)
        expected = nx.to_graph6_bytes(nxg, header=False).decode().strip()
        assert encode_graph6(g) == expected


class TestDetectionAndFiles:
    """Format detection, parse_graph and file helpers."""

    def test_detect_format(self, tmp_path):
        assert detect_format("3 2\n0 1\n1 2\n") == EDGELIST
        assert detect_format("Dhc\n") == GRAPH6
        assert detect_format(">>graph6<<Dhc") == GRAPH6
        assert detect_format("3 2\n0 1\n1 2\n", tmp_path / "g.g6") == GRAPH6

    def test_parse_graph_rejects_multiple_graph6_lines(self):
        with pytest.raises(GraphFormatError) as excinfo:
            parse_graph("Dhc\nDhc\n", GRAPH6)
        assert excinfo.value.line == 2

    def test_parse_graph_adds_line_to_graph6_errors(self):
        with pytest.raises(GraphFormatError) as excinfo:
            parse_graph("# comment\nDh\n", GRAPH6)
        assert excinfo.value.line == 2

    def test_unknown_format(self):
        with pytest.raises(ValueError):
            parse_graph("Dhc", "adjlist")

    @pytest.mark.parametrize("fmt, suffix", [(EDGELIST, ".el"), (GRAPH6, ".g6")])
    def test_write_then_read(self, tmp_path, fmt, suffix):
        path = tmp_path / f"c5{suffix}"
        write_graph(cycle_graph(5), path, fmt)
        g = read_graph(path)
        assert g == cycle_graph(5)
        assert g.name == "c5"

    def test_format_mapping(self):
        assert format_mapping([2, 0, 1]) == "0 2\n1 0\n2 1\n"
