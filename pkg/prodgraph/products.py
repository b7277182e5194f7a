#!/usr/bin/env python3
"""
The four standard graph products and their closed-form oracles.

Every product uses the row-major labeling (i, j) -> i*m + j, where m is the
order of the right factor. This is exactly the index order of numpy.kron,
so each product's adjacency matrix is a sum of Kronecker terms.
"""

from dataclasses import dataclass
from enum import Enum
from typing import List, Optional, Tuple

import numpy as np

from .errors import HypothesisError
from .graph import (
    Graph,
    detect_cycle_graph,
    diameter,
    is_bipartite,
    is_connected,
    max_degree,
    min_degree,
)


class ProductKind(Enum):
    """The four standard graph products."""

    CARTESIAN = "cartesian"
    KRONECKER = "kronecker"
    STRONG = "strong"
    LEXICOGRAPHIC = "lexicographic"

    @property
    def symbol(self) -> str:
        return _SYMBOLS[self]

    @property
    def cli_name(self) -> str:
        return "lex" if self is ProductKind.LEXICOGRAPHIC else self.value

    @classmethod
    def from_name(cls, name: str) -> "ProductKind":
        """Accept values, CLI names, short names and symbols."""
        key = name.strip().lower()
        for kind in cls:
            if key in (kind.value, kind.cli_name, kind.symbol, *_ALIASES[kind]):
                return kind
        raise ValueError(f"unknown product kind: {name!r}")


_SYMBOLS = {
    ProductKind.CARTESIAN: "□",
    ProductKind.KRONECKER: "⊗",
    ProductKind.STRONG: "⊠",
    ProductKind.LEXICOGRAPHIC: "∘",
}

_ALIASES = {
    ProductKind.CARTESIAN: ("cart", "box"),
    ProductKind.KRONECKER: ("kron", "direct", "tensor"),
    ProductKind.STRONG: ("strong",),
    ProductKind.LEXICOGRAPHIC: ("lexi", "composition"),
}


@dataclass(frozen=True, eq=False)
class ProductGraph:
    """A product graph together with its factors and pair labeling."""

    graph: Graph
    kind: ProductKind
    left: Graph
    right: Graph

    @property
    def factor_orders(self) -> Tuple[int, int]:
        return self.left.n, self.right.n

    @property
    def order(self) -> int:
        return self.graph.n

    def index(self, i: int, j: int) -> int:
        """Flat vertex index of the pair (i, j)."""
        n, m = self.factor_orders
        if not (0 <= i < n and 0 <= j < m):
            raise IndexError(f"pair ({i}, {j}) outside {n} x {m}")
        return i * m + j

    def pair(self, v: int) -> Tuple[int, int]:
        """Pair (i, j) labeling flat vertex v."""
        if not 0 <= v < self.order:
            raise IndexError(f"vertex {v} outside 0..{self.order - 1}")
        i, j = divmod(v, self.right.n)
        return i, j


def _product_adjacency(kind: ProductKind, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    a = a.astype(np.int8)
    b = b.astype(np.int8)
    eye_g = np.eye(a.shape[0], dtype=np.int8)
    eye_h = np.eye(b.shape[0], dtype=np.int8)

    if kind is ProductKind.CARTESIAN:
        total = np.kron(a, eye_h) + np.kron(eye_g, b)
    elif kind is ProductKind.KRONECKER:
        total = np.kron(a, b)
    elif kind is ProductKind.STRONG:
        total = np.kron(a, eye_h) + np.kron(eye_g, b) + np.kron(a, b)
    else:
        total = np.kron(a, np.ones_like(b)) + np.kron(eye_g, b)
    return total > 0


def product(kind: ProductKind, g: Graph, h: Graph) -> ProductGraph:
    """Build G (kind) H on g.n * h.n vertices."""
    adjacency = _product_adjacency(kind, g.adjacency, h.adjacency)
    name = f"{g.name or 'G'}{kind.symbol}{h.name or 'H'}"
    return ProductGraph(Graph(g.n * h.n, adjacency, name=name), kind, g, h)


def cartesian_product(g: Graph, h: Graph) -> ProductGraph:
    return product(ProductKind.CARTESIAN, g, h)


def kronecker_product(g: Graph, h: Graph) -> ProductGraph:
    return product(ProductKind.KRONECKER, g, h)


def strong_product(g: Graph, h: Graph) -> ProductGraph:
    return product(ProductKind.STRONG, g, h)


def lexicographic_product(g: Graph, h: Graph) -> ProductGraph:
    return product(ProductKind.LEXICOGRAPHIC, g, h)


def adjacency_rule(
    kind: ProductKind, g_adj: bool, i_eq_r: bool, h_adj: bool, j_eq_s: bool
) -> bool:
    """Defining adjacency of (i, j) ~ (r, s), stated on the factor relations."""
    cartesian = (g_adj and j_eq_s) or (i_eq_r and h_adj)
    kronecker = g_adj and h_adj
    if kind is ProductKind.CARTESIAN:
        return cartesian
    if kind is ProductKind.KRONECKER:
        return kronecker
    if kind is ProductKind.STRONG:
        return cartesian or kronecker
    return g_adj or (i_eq_r and h_adj)


def verify_product_edges(pg: ProductGraph) -> Optional[Tuple[int, int]]:
    """Scan every vertex pair against the defining rule.

    Returns:
        The first disagreeing flat pair (u, v), or None when the edge set
        is exactly right.
    """
    g, h = pg.left, pg.right
    for u in range(pg.order):
        i, j = pg.pair(u)
        for v in range(u + 1, pg.order):
            r, s = pg.pair(v)
            expected = adjacency_rule(
                pg.kind, g.has_edge(i, r), i == r, h.has_edge(j, s), j == s
            )
            if expected != pg.graph.has_edge(u, v):
                return u, v
    return None


def expected_degree(
    kind: ProductKind, dg: int, dh: int, h_order: Optional[int] = None
) -> int:
    """Degree of (x, y) in the product from deg(x), deg(y) (and |V(H)|)."""
    if dg < 0 or dh < 0:
        raise ValueError(f"degrees must be non-negative, got {dg}, {dh}")
    if kind is ProductKind.CARTESIAN:
        return dg + dh
    if kind is ProductKind.KRONECKER:
        return dg * dh
    if kind is ProductKind.STRONG:
        return (dg + 1) * (dh + 1) - 1
    if h_order is None or h_order < 1:
        raise ValueError("the lexicographic degree formula needs |V(H)| >= 1")
    return h_order * dg + dh


def degree_mismatches(pg: ProductGraph) -> List[Tuple[int, int, int]]:
    """(vertex, measured, expected) for every vertex whose degree is off."""
    g, h = pg.left, pg.right
    measured = pg.graph.degrees
    mismatches = []
    for v in range(pg.order):
        i, j = pg.pair(v)
        expected = expected_degree(pg.kind, int(g.degrees[i]), int(h.degrees[j]), h.n)
        if int(measured[v]) != expected:
            mismatches.append((v, int(measured[v]), expected))
    return mismatches


def min_max_product_degree(kind: ProductKind, g: Graph, h: Graph) -> Tuple[int, int]:
    """Minimum and maximum degree of G (kind) H from the factor extremes.

    Every degree formula is nondecreasing in both factor degrees, so the
    extremes of the product sit at pairs of factor extremes.
    """
    low = expected_degree(kind, min_degree(g), min_degree(h), h.n)
    high = expected_degree(kind, max_degree(g), max_degree(h), h.n)
    return low, high


def expected_diameter_cartesian(g: Graph, h: Graph) -> int:
    """diam(G □ H) = diam(G) + diam(H) for connected factors."""
    return diameter(g) + diameter(h)


def expected_diameter_kronecker_cycle(m: int, h: Graph) -> int:
    """Diameter of C_m ⊗ H for an odd cycle length m.

    Covers bipartite H (max{m, diam H}) and H an odd cycle C_n, with the
    three-way split on m against n.

    Raises:
        HypothesisError: m even or < 3, |V(H)| < 2, or H non-bipartite and
            not an odd cycle.
        NotConnectedError: H disconnected.
    """
    if m < 3 or m % 2 == 0:
        raise HypothesisError(f"C_m must be an odd cycle (m odd, m >= 3), got m={m}")
    if h.n < 2:
        raise HypothesisError("H must have diameter at least 1 (two or more vertices)")
    r = diameter(h)
    if is_bipartite(h):
        return max(m, r)

    n = detect_cycle_graph(h)
    if n is None:
        raise HypothesisError(
            "no closed-form diameter for a non-bipartite H that is not an odd cycle"
        )
    if m == n:
        return m - 1
    if m > n:
        return max(n, (m - 1) // 2)
    return max(m, (n - 1) // 2)


def expected_kronecker_components(g: Graph, h: Graph) -> int:
    """Component count of G ⊗ H for connected factors with at least one edge.

    1 when either factor contains an odd cycle, 2 when both are bipartite.
    """
    for label, factor in (("G", g), ("H", h)):
        if factor.edge_count == 0:
            raise HypothesisError(f"{label} has no edges; G ⊗ H would be edgeless")
        if not is_connected(factor):
            raise HypothesisError(f"{label} must be connected")
    return 2 if is_bipartite(g) and is_bipartite(h) else 1
