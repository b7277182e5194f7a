#!/usr/bin/env python3
"""
Decision engine for isomorphism between two different products of the same
factors, G (kind A) H versus G (kind B) H.

Every answer carries a certificate: an explicit vertex map when the products
are isomorphic, otherwise an obstruction whose two sides are computable
invariants of the two products.
"""

import logging
import time
from dataclasses import dataclass
from enum import Enum
from typing import List, Optional, Tuple, Union

from .errors import CertificateError, HypothesisError, NotConnectedError
from .graph import (
    Graph,
    connected_components,
    detect_cycle_graph,
    is_complete,
    max_degree,
    min_degree,
)
from .iso import (
    SearchOutcome,
    SearchStatus,
    VertexBijection,
    f_n_map,
    identity_map,
    search_isomorphism,
    verify_isomorphism,
)
from .products import ProductKind, min_max_product_degree, product
from .spectra import adjacency_spectrum, cycle_adjacency_spectrum, product_adjacency_spectrum

logger = logging.getLogger(__name__)

EIGENVALUE_GAP = 1e-6


class PairKind(Enum):
    """Unordered pairs of distinct product kinds, by CLI name."""

    CART_KRON = "cart-kron"
    CART_STRONG = "cart-strong"
    CART_LEX = "cart-lex"
    KRON_STRONG = "kron-strong"
    KRON_LEX = "kron-lex"
    STRONG_LEX = "strong-lex"

    @property
    def kinds(self) -> Tuple[ProductKind, ProductKind]:
        return _PAIR_KINDS[self]

    @classmethod
    def from_name(cls, name: str) -> "PairKind":
        try:
            return cls(name.strip().lower())
        except ValueError:
            choices = ", ".join(p.value for p in cls)
            raise ValueError(f"unknown product pair '{name}' (choose from {choices})") from None

    @classmethod
    def from_kinds(cls, kind_a: ProductKind, kind_b: ProductKind) -> Tuple["PairKind", bool]:
        """Pair for (kind_a, kind_b) and whether the order is reversed."""
        for pair, kinds in _PAIR_KINDS.items():
            if kinds == (kind_a, kind_b):
                return pair, False
            if kinds == (kind_b, kind_a):
                return pair, True
        raise ValueError(f"kinds must differ, got {kind_a.value} twice")


_PAIR_KINDS = {
    PairKind.CART_KRON: (ProductKind.CARTESIAN, ProductKind.KRONECKER),
    PairKind.CART_STRONG: (ProductKind.CARTESIAN, ProductKind.STRONG),
    PairKind.CART_LEX: (ProductKind.CARTESIAN, ProductKind.LEXICOGRAPHIC),
    PairKind.KRON_STRONG: (ProductKind.KRONECKER, ProductKind.STRONG),
    PairKind.KRON_LEX: (ProductKind.KRONECKER, ProductKind.LEXICOGRAPHIC),
    PairKind.STRONG_LEX: (ProductKind.STRONG, ProductKind.LEXICOGRAPHIC),
}


class Rule(Enum):
    CART_KRON_TRIVIAL = "cart-kron/trivial"
    CART_KRON_ODD_CYCLES = "cart-kron/odd-cycles"
    CART_KRON_DEGREE = "cart-kron/degree"
    CART_KRON_CONNECTIVITY = "cart-kron/connectivity"
    CART_KRON_EIGENVALUE = "cart-kron/eigenvalue"
    CART_STRONG = "cart-strong/max-degree"
    CART_LEX = "cart-lex/max-degree"
    KRON_STRONG = "kron-strong/max-degree"
    KRON_LEX = "kron-lex/max-degree"
    STRONG_LEX_COMPLETE = "strong-lex/complete"
    STRONG_LEX_DEGREE = "strong-lex/min-degree"


_NEVER_ISOMORPHIC = {
    PairKind.CART_STRONG: Rule.CART_STRONG,
    PairKind.CART_LEX: Rule.CART_LEX,
    PairKind.KRON_STRONG: Rule.KRON_STRONG,
    PairKind.KRON_LEX: Rule.KRON_LEX,
}


# ---------------------------------------------------------------------------
# Certificates
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ExplicitMap:
    bijection: VertexBijection
    source: str

    def swapped(self) -> "ExplicitMap":
        return ExplicitMap(self.bijection.inverse(), self.source)

    def to_dict(self) -> dict:
        return {"type": "explicit-map", "source": self.source, "map": list(self.bijection.forward)}


@dataclass(frozen=True)
class DegreeObstruction:
    which: str
    value_a: int
    value_b: int

    def swapped(self) -> "DegreeObstruction":
        return DegreeObstruction(self.which, self.value_b, self.value_a)

    def to_dict(self) -> dict:
        return {"type": "degree", "which": self.which, "a": self.value_a, "b": self.value_b}


@dataclass(frozen=True)
class ConnectivityObstruction:
    components_a: int
    components_b: int

    def swapped(self) -> "ConnectivityObstruction":
        return ConnectivityObstruction(self.components_b, self.components_a)

    def to_dict(self) -> dict:
        return {"type": "connectivity", "a": self.components_a, "b": self.components_b}


@dataclass(frozen=True)
class EigenvalueObstruction:
    """Smallest adjacency eigenvalues of the two products."""

    smallest_a: float
    smallest_b: float

    @property
    def gap(self) -> float:
        return abs(self.smallest_a - self.smallest_b)

    def swapped(self) -> "EigenvalueObstruction":
        return EigenvalueObstruction(self.smallest_b, self.smallest_a)

    def to_dict(self) -> dict:
        return {"type": "eigenvalue", "a": self.smallest_a, "b": self.smallest_b, "gap": self.gap}


@dataclass(frozen=True)
class OrderObstruction:
    order_a: int
    order_b: int

    def swapped(self) -> "OrderObstruction":
        return OrderObstruction(self.order_b, self.order_a)

    def to_dict(self) -> dict:
        return {"type": "order", "a": self.order_a, "b": self.order_b}


@dataclass(frozen=True)
class SearchResult:
    status: SearchStatus
    nodes: int

    def swapped(self) -> "SearchResult":
        return self

    def to_dict(self) -> dict:
        return {"type": "search", "status": self.status.value, "nodes": self.nodes}


IsoCertificate = Union[
    ExplicitMap,
    DegreeObstruction,
    ConnectivityObstruction,
    EigenvalueObstruction,
    OrderObstruction,
    SearchResult,
]


@dataclass(frozen=True)
class Decision:
    kind_a: ProductKind
    kind_b: ProductKind
    isomorphic: bool
    rule: Rule
    certificate: IsoCertificate

    def to_dict(self) -> dict:
        return {
            "pair": [self.kind_a.value, self.kind_b.value],
            "isomorphic": self.isomorphic,
            "rule": self.rule.value,
            "certificate": self.certificate.to_dict(),
        }


# ---------------------------------------------------------------------------
# decide
# ---------------------------------------------------------------------------


def _require_connected(g: Graph, label: str) -> None:
    components = len(connected_components(g))
    if components != 1:
        raise NotConnectedError(f"decide: factor {label}", components)


def _degree_obstruction(kind_a: ProductKind, kind_b: ProductKind, g: Graph, h: Graph):
    low_a, high_a = min_max_product_degree(kind_a, g, h)
    low_b, high_b = min_max_product_degree(kind_b, g, h)
    if low_a != low_b:
        return DegreeObstruction("min", low_a, low_b)
    if high_a != high_b:
        return DegreeObstruction("max", high_a, high_b)
    return None


def _cycle_positions(g: Graph) -> List[int]:
    """Position of each vertex when walking the cycle g from vertex 0."""
    walk = [0]
    previous, current = -1, 0
    while len(walk) < g.n:
        following = next(w for w in g.neighbors(current) if w != previous)
        walk.append(following)
        previous, current = current, following
    positions = [0] * g.n
    for k, v in enumerate(walk):
        positions[v] = k
    return positions


def _odd_cycle_map(g: Graph, h: Graph, n: int) -> VertexBijection:
    # f_n is stated on the standard labeling 0~1~...~n-1~0; conjugate it
    # by the relabeling that puts both factors in that form
    pos_g, pos_h = _cycle_positions(g), _cycle_positions(h)
    standard = VertexBijection(
        tuple(pos_g[i] * n + pos_h[j] for i in range(n) for j in range(n))
    )
    if standard.is_identity():
        return f_n_map(n)
    return standard.inverse().compose(f_n_map(n).compose(standard))


def _decide_cart_kron(g: Graph, h: Graph) -> Tuple[bool, Rule, IsoCertificate]:
    if g.n == 1 and h.n == 1:
        return True, Rule.CART_KRON_TRIVIAL, ExplicitMap(identity_map(1), "identity")

    cycle_g = detect_cycle_graph(g)
    cycle_h = detect_cycle_graph(h)
    if cycle_g is not None and cycle_g == cycle_h and cycle_g % 2 == 1:
        return (
            True,
            Rule.CART_KRON_ODD_CYCLES,
            ExplicitMap(_odd_cycle_map(g, h, cycle_g), "f_n"),
        )

    obstruction = _degree_obstruction(ProductKind.CARTESIAN, ProductKind.KRONECKER, g, h)
    if obstruction is not None:
        return False, Rule.CART_KRON_DEGREE, obstruction

    # equal extreme degrees force both factors to be 2-regular, i.e. cycles
    if cycle_g is None or cycle_h is None:
        raise CertificateError(f"no obstruction found for {g!r} and {h!r}")

    if cycle_g % 2 == 0 and cycle_h % 2 == 0:
        return False, Rule.CART_KRON_CONNECTIVITY, ConnectivityObstruction(1, 2)

    sg = cycle_adjacency_spectrum(cycle_g)
    sh = cycle_adjacency_spectrum(cycle_h)
    smallest_a = product_adjacency_spectrum(ProductKind.CARTESIAN, sg, sh).smallest
    smallest_b = product_adjacency_spectrum(ProductKind.KRONECKER, sg, sh).smallest
    return False, Rule.CART_KRON_EIGENVALUE, EigenvalueObstruction(smallest_a, smallest_b)


def _decide_never(pair: PairKind, g: Graph, h: Graph) -> Tuple[bool, Rule, IsoCertificate]:
    kind_a, kind_b = pair.kinds
    _, high_a = min_max_product_degree(kind_a, g, h)
    _, high_b = min_max_product_degree(kind_b, g, h)
    if high_a == high_b:
        raise CertificateError(
            f"{pair.value}: maximum degrees coincide ({high_a}) for {g!r}, {h!r}"
        )
    return False, _NEVER_ISOMORPHIC[pair], DegreeObstruction("max", high_a, high_b)


def _decide_strong_lex(g: Graph, h: Graph) -> Tuple[bool, Rule, IsoCertificate]:
    if is_complete(h):
        return True, Rule.STRONG_LEX_COMPLETE, ExplicitMap(identity_map(g.n * h.n), "identity")
    low_a, _ = min_max_product_degree(ProductKind.STRONG, g, h)
    low_b, _ = min_max_product_degree(ProductKind.LEXICOGRAPHIC, g, h)
    if low_a == low_b:
        raise CertificateError(f"strong-lex: minimum degrees coincide ({low_a})")
    return False, Rule.STRONG_LEX_DEGREE, DegreeObstruction("min", low_a, low_b)


def decide(kind_a: ProductKind, kind_b: ProductKind, g: Graph, h: Graph) -> Decision:
    """Is G (kind_a) H isomorphic to G (kind_b) H?

    Either order of a kind pair is accepted. Positive answers are verified
    against the constructed products before they are returned.

    Raises:
        ValueError: kind_a == kind_b.
        NotConnectedError: a factor is disconnected.
        HypothesisError: an order-1 factor for a pair other than (□, ⊗).
        CertificateError: a map failed verification.
    """
    pair, reversed_order = PairKind.from_kinds(kind_a, kind_b)
    _require_connected(g, "G")
    _require_connected(h, "H")
    if pair is not PairKind.CART_KRON and (g.n < 2 or h.n < 2):
        raise HypothesisError(
            f"{pair.value} needs factors with at least two vertices, "
            f"got |V(G)|={g.n}, |V(H)|={h.n}"
        )

    if pair is PairKind.CART_KRON:
        isomorphic, rule, certificate = _decide_cart_kron(g, h)
    elif pair is PairKind.STRONG_LEX:
        isomorphic, rule, certificate = _decide_strong_lex(g, h)
    else:
        isomorphic, rule, certificate = _decide_never(pair, g, h)

    if reversed_order:
        certificate = certificate.swapped()
    decision = Decision(kind_a, kind_b, isomorphic, rule, certificate)

    if isinstance(certificate, ExplicitMap):
        graph_a = product(kind_a, g, h).graph
        graph_b = product(kind_b, g, h).graph
        check = verify_isomorphism(graph_a, graph_b, certificate.bijection)
        if not check:
            raise CertificateError(
                f"{rule.value}: map fails on pair {check.failing_pair}"
            )
    logger.debug("decide %s for %r, %r: %s", pair.value, g, h, rule.value)
    return decision


# ---------------------------------------------------------------------------
# Re-checking and general comparison
# ---------------------------------------------------------------------------


def recheck(certificate: IsoCertificate, graph_a: Graph, graph_b: Graph) -> bool:
    """Recompute a certificate's values directly from the two graphs."""
    if isinstance(certificate, ExplicitMap):
        if graph_a.n != graph_b.n:
            return False
        return bool(verify_isomorphism(graph_a, graph_b, certificate.bijection))
    if isinstance(certificate, OrderObstruction):
        measured = (graph_a.n, graph_b.n)
        return measured == (certificate.order_a, certificate.order_b) and measured[0] != measured[1]
    if isinstance(certificate, DegreeObstruction):
        measure = min_degree if certificate.which == "min" else max_degree
        measured = (measure(graph_a), measure(graph_b))
        return measured == (certificate.value_a, certificate.value_b) and measured[0] != measured[1]
    if isinstance(certificate, ConnectivityObstruction):
        measured = (len(connected_components(graph_a)), len(connected_components(graph_b)))
        expected = (certificate.components_a, certificate.components_b)
        return measured == expected and measured[0] != measured[1]
    if isinstance(certificate, EigenvalueObstruction):
        smallest_a = adjacency_spectrum(graph_a).smallest
        smallest_b = adjacency_spectrum(graph_b).smallest
        return (
            abs(smallest_a - certificate.smallest_a) <= EIGENVALUE_GAP
            and abs(smallest_b - certificate.smallest_b) <= EIGENVALUE_GAP
            and abs(smallest_a - smallest_b) > EIGENVALUE_GAP
        )
    outcome = search_isomorphism(graph_a, graph_b)
    return outcome.status is certificate.status


def recheck_certificate(decision: Decision, g: Graph, h: Graph) -> bool:
    """Rebuild both products and recheck the decision's certificate."""
    graph_a = product(decision.kind_a, g, h).graph
    graph_b = product(decision.kind_b, g, h).graph
    return recheck(decision.certificate, graph_a, graph_b)


@dataclass(frozen=True)
class Comparison:
    """Result of comparing two arbitrary graphs.

    isomorphic is None when the search ran out of budget.
    """

    isomorphic: Optional[bool]
    rule: str
    certificate: IsoCertificate

    def to_dict(self) -> dict:
        return {
            "isomorphic": self.isomorphic,
            "rule": self.rule,
            "certificate": self.certificate.to_dict(),
        }


def compare_graphs(g1: Graph, g2: Graph, node_budget: Optional[int] = None) -> Comparison:
    """Cheap invariants first (order, degrees, components), then search."""
    if g1.n != g2.n:
        return Comparison(False, "order", OrderObstruction(g1.n, g2.n))
    for which, measure in (("min", min_degree), ("max", max_degree)):
        a, b = measure(g1), measure(g2)
        if a != b:
            return Comparison(False, "degree", DegreeObstruction(which, a, b))
    components = (len(connected_components(g1)), len(connected_components(g2)))
    if components[0] != components[1]:
        return Comparison(False, "connectivity", ConnectivityObstruction(*components))

    outcome = search_isomorphism(g1, g2, node_budget)
    if outcome.found:
        return Comparison(True, "search", ExplicitMap(outcome.bijection, "search"))
    if outcome.status is SearchStatus.BUDGET_EXCEEDED:
        return Comparison(None, "search", SearchResult(outcome.status, outcome.nodes))
    return Comparison(False, "search", SearchResult(outcome.status, outcome.nodes))


class Agreement(Enum):
    AGREE = "agree"
    DISAGREE = "disagree"
    UNVALIDATED = "unvalidated"


@dataclass(frozen=True)
class CrossValidation:
    decision: Decision
    agreement: Agreement
    search: SearchOutcome
    elapsed: float

    def to_dict(self) -> dict:
        return {
            "decision": self.decision.to_dict(),
            "agreement": self.agreement.value,
            "search_status": self.search.status.value,
            "search_nodes": self.search.nodes,
            "elapsed": round(self.elapsed, 6),
        }


def cross_validate(
    kind_a: ProductKind,
    kind_b: ProductKind,
    g: Graph,
    h: Graph,
    node_budget: Optional[int] = None,
) -> CrossValidation:
    """Compare decide against a brute-force search on the built products."""
    start = time.perf_counter()
    decision = decide(kind_a, kind_b, g, h)
    graph_a = product(kind_a, g, h).graph
    graph_b = product(kind_b, g, h).graph
    outcome = search_isomorphism(graph_a, graph_b, node_budget)
    elapsed = time.perf_counter() - start

    if outcome.status is SearchStatus.BUDGET_EXCEEDED:
        agreement = Agreement.UNVALIDATED
    elif outcome.found == decision.isomorphic:
        agreement = Agreement.AGREE
    else:
        agreement = Agreement.DISAGREE
        logger.warning(
            "decide and search disagree on %s/%s for %r, %r",
            kind_a.value, kind_b.value, g, h,
        )
    return CrossValidation(decision, agreement, outcome, elapsed)
