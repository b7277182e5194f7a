"""
Tests for the product-pair decision engine and its certificates.
"""

import math

import pytest
from hypothesis import given, settings

from prodgraph.characterize import (
    Agreement,
    ConnectivityObstruction,
    DegreeObstruction,
    EigenvalueObstruction,
    ExplicitMap,
    OrderObstruction,
    PairKind,
    Rule,
    SearchResult,
    compare_graphs,
    cross_validate,
    decide,
    recheck_certificate,
)
from prodgraph.corpus import (
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    disjoint_union,
    path_graph,
    star_graph,
)
from prodgraph.errors import HypothesisError, NotConnectedError
from prodgraph.graph import from_edge_list
from prodgraph.iso import SearchStatus, f_n_map, search_isomorphism
from prodgraph.products import ProductKind, product

from .strategies import connected_graphs

CART = ProductKind.CARTESIAN
KRON = ProductKind.KRONECKER
STRONG = ProductKind.STRONG
LEX = ProductKind.LEXICOGRAPHIC

C4_WITH_CHORD = from_edge_list(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])
PRISM = from_edge_list(
    6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)]
)


class TestPairKind:
    """Pair names and kind lookup."""

    def test_from_name(self):
        assert PairKind.from_name("cart-kron").kinds == (CART, KRON)
        assert PairKind.from_name(" Strong-Lex ").kinds == (STRONG, LEX)

    def test_unknown_name(self):
        with pytest.raises(ValueError, match="choose from"):
            PairKind.from_name("cart-cart")

    def test_from_kinds(self):
        assert PairKind.from_kinds(CART, KRON) == (PairKind.CART_KRON, False)
        assert PairKind.from_kinds(LEX, KRON) == (PairKind.KRON_LEX, True)
        with pytest.raises(ValueError):
            PairKind.from_kinds(STRONG, STRONG)


class TestCartesianKronecker:
    """(□, ⊗): isomorphic exactly for equal odd cycles (and K1, K1)."""

    @pytest.mark.parametrize("n", [3, 5, 7, 9])
    def test_equal_odd_cycles(self, n):
        c = cycle_graph(n)
        decision = decide(CART, KRON, c, c)
        assert decision.isomorphic
        assert decision.rule is Rule.CART_KRON_ODD_CYCLES
        assert isinstance(decision.certificate, ExplicitMap)
        assert decision.certificate.bijection == f_n_map(n)
        assert recheck_certificate(decision, c, c)

    def test_relabeled_odd_cycles(self):
        g = cycle_graph(5).relabel([0, 2, 4, 1, 3])
        h = cycle_graph(5).relabel([3, 1, 4, 0, 2])
        decision = decide(CART, KRON, g, h)
        assert decision.isomorphic
        assert recheck_certificate(decision, g, h)

    def test_trivial_factors(self):
        k1 = complete_graph(1)
        decision = decide(CART, KRON, k1, k1)
        assert decision.isomorphic
        assert decision.rule is Rule.CART_KRON_TRIVIAL

    def test_degree_obstruction(self):
        decision = decide(CART, KRON, path_graph(3), cycle_graph(5))
        assert not decision.isomorphic
        assert decision.rule is Rule.CART_KRON_DEGREE
        assert decision.certificate == DegreeObstruction("min", 3, 2)
        assert recheck_certificate(decision, path_graph(3), cycle_graph(5))

    def test_single_vertex_with_cycle(self):
        decision = decide(CART, KRON, complete_graph(1), cycle_graph(5))
        assert decision.certificate == DegreeObstruction("min", 2, 0)

    def test_max_degree_obstruction(self):
        # minimum degrees agree (2 + 2 = 2 * 2), maximum degrees do not
        g, h = cycle_graph(4), C4_WITH_CHORD
        decision = decide(CART, KRON, g, h)
        assert decision.rule is Rule.CART_KRON_DEGREE
        assert decision.certificate == DegreeObstruction("max", 5, 6)
        assert recheck_certificate(decision, g, h)

    def test_even_cycles_connectivity(self):
        g, h = cycle_graph(4), cycle_graph(6)
        decision = decide(CART, KRON, g, h)
        assert decision.rule is Rule.CART_KRON_CONNECTIVITY
        assert decision.certificate == ConnectivityObstruction(1, 2)
        assert recheck_certificate(decision, g, h)

    @pytest.mark.parametrize("m, n", [(3, 5), (5, 7), (4, 5), (3, 4), (5, 3)])
    def test_eigenvalue_obstruction(self, m, n):
        g, h = cycle_graph(m), cycle_graph(n)
        decision = decide(CART, KRON, g, h)
        assert decision.rule is Rule.CART_KRON_EIGENVALUE
        certificate = decision.certificate
        assert isinstance(certificate, EigenvalueObstruction)
        assert certificate.gap > 1e-3
        assert recheck_certificate(decision, g, h)

    def test_eigenvalue_values(self):
        certificate = decide(CART, KRON, cycle_graph(3), cycle_graph(5)).certificate
        phi = (1 + math.sqrt(5)) / 2
        assert certificate.smallest_a == pytest.approx(-1 - phi)
        assert certificate.smallest_b == pytest.approx(-2 * phi)

    def test_reversed_order_inverts_map(self):
        c = cycle_graph(5)
        decision = decide(KRON, CART, c, c)
        assert decision.isomorphic
        assert decision.certificate.bijection == f_n_map(5).inverse()
        assert recheck_certificate(decision, c, c)

    def test_reversed_order_swaps_obstruction(self):
        decision = decide(KRON, CART, path_graph(3), cycle_graph(5))
        assert decision.certificate == DegreeObstruction("min", 2, 3)
        assert decision.to_dict()["pair"] == ["kronecker", "cartesian"]


class TestOtherPairs:
    """Never-isomorphic pairs and (⊠, ∘)."""

    @pytest.mark.parametrize(
        "kind_a, kind_b, rule, values",
        [
            (CART, STRONG, Rule.CART_STRONG, (2, 3)),
            (CART, LEX, Rule.CART_LEX, (2, 3)),
            (KRON, STRONG, Rule.KRON_STRONG, (1, 3)),
            (KRON, LEX, Rule.KRON_LEX, (1, 3)),
        ],
    )
    def test_never_isomorphic(self, kind_a, kind_b, rule, values):
        g = h = path_graph(2)
        decision = decide(kind_a, kind_b, g, h)
        assert not decision.isomorphic
        assert decision.rule is rule
        assert decision.certificate == DegreeObstruction("max", *values)
        assert recheck_certificate(decision, g, h)

    def test_strong_lex_complete(self):
        g, h = path_graph(3), complete_graph(3)
        decision = decide(STRONG, LEX, g, h)
        assert decision.isomorphic
        assert decision.rule is Rule.STRONG_LEX_COMPLETE
        assert decision.certificate.bijection.is_identity()
        assert product(STRONG, g, h).graph == product(LEX, g, h).graph

    def test_strong_lex_min_degree(self):
        g, h = complete_graph(2), path_graph(3)
        decision = decide(STRONG, LEX, g, h)
        assert not decision.isomorphic
        assert decision.rule is Rule.STRONG_LEX_DEGREE
        assert decision.certificate == DegreeObstruction("min", 3, 4)
        assert recheck_certificate(decision, g, h)
        assert decide(LEX, STRONG, g, h).certificate == DegreeObstruction("min", 4, 3)

    @pytest.mark.parametrize("kind_a, kind_b", [(STRONG, LEX), (CART, STRONG), (KRON, LEX)])
    def test_single_vertex_factor_rejected(self, kind_a, kind_b):
        with pytest.raises(HypothesisError):
            decide(kind_a, kind_b, complete_graph(1), path_graph(3))

    def test_disconnected_factor_rejected(self):
        g = disjoint_union(path_graph(2), path_graph(2))
        with pytest.raises(NotConnectedError):
            decide(CART, KRON, g, path_graph(2))

    def test_same_kind_rejected(self):
        with pytest.raises(ValueError):
            decide(CART, CART, path_graph(2), path_graph(2))

    def test_to_dict(self):
        data = decide(STRONG, LEX, complete_graph(2), path_graph(3)).to_dict()
        assert data == {
            "pair": ["strong", "lexicographic"],
            "isomorphic": False,
            "rule": "strong-lex/min-degree",
            "certificate": {"type": "degree", "which": "min", "a": 3, "b": 4},
        }


class TestAgainstSearch:
    """Decisions agree with brute force on small factors."""

    @settings(max_examples=30, deadline=None)
    @given(connected_graphs(min_order=2, max_order=4), connected_graphs(min_order=2, max_order=4))
    def test_every_pair(self, g, h):
        for pair in PairKind:
            kind_a, kind_b = pair.kinds
            decision = decide(kind_a, kind_b, g, h)
            outcome = search_isomorphism(product(kind_a, g, h).graph, product(kind_b, g, h).graph)
            assert outcome.status is not SearchStatus.BUDGET_EXCEEDED
            assert outcome.found == decision.isomorphic, pair
            assert recheck_certificate(decision, g, h)

    def test_cross_validate_agrees(self):
        c = cycle_graph(5)
        result = cross_validate(CART, KRON, c, c)
        assert result.agreement is Agreement.AGREE
        assert result.search.found
        assert result.to_dict()["agreement"] == "agree"

    def test_cross_validate_unvalidated_on_budget(self):
        c = cycle_graph(5)
        result = cross_validate(CART, KRON, c, c, node_budget=1)
        assert result.agreement is Agreement.UNVALIDATED
        assert result.decision.isomorphic


class TestCompareGraphs:
    """General two-graph comparison used by check-iso."""

    def test_order(self):
        result = compare_graphs(path_graph(3), path_graph(4))
        assert result.isomorphic is False
        assert result.certificate == OrderObstruction(3, 4)

    def test_degree(self):
        result = compare_graphs(path_graph(4), star_graph(3))
        assert result.rule == "degree"
        assert result.certificate == DegreeObstruction("max", 2, 3)

    def test_connectivity(self):
        g1 = disjoint_union(cycle_graph(3), cycle_graph(3))
        result = compare_graphs(cycle_graph(6), g1)
        assert result.certificate == ConnectivityObstruction(1, 2)

    def test_search_found(self):
        c = cycle_graph(5)
        g1 = product(CART, c, c).graph
        g2 = product(KRON, c, c).graph
        result = compare_graphs(g1, g2)
        assert result.isomorphic is True
        assert isinstance(result.certificate, ExplicitMap)

    def test_search_absent(self):
        result = compare_graphs(complete_bipartite_graph(3, 3), PRISM)
        assert result.isomorphic is False
        assert result.rule == "search"
        assert result.certificate.status is SearchStatus.ABSENT

    def test_budget_is_undecided(self):
        c = cycle_graph(5)
        result = compare_graphs(product(CART, c, c).graph, product(KRON, c, c).graph, node_budget=1)
        assert result.isomorphic is None
        assert result.certificate == SearchResult(SearchStatus.BUDGET_EXCEEDED, 2)
        assert result.to_dict()["certificate"]["status"] == "budget_exceeded"
