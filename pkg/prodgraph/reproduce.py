#!/usr/bin/env python3
"""
One-shot reproduction suite: every structural, spectral and isomorphism
claim about the four products, regenerated and checked.

Each claim is a module-level check function plus parameters, so claims can
be shipped to worker processes. The report is sorted by claim id and is
identical across runs apart from elapsed times.
"""

import json
import logging
import re
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from .characterize import DegreeObstruction, decide, cross_validate, Agreement
from .config import DEFAULT_TOL
from .corpus import (
    complete_bipartite_graph,
    complete_graph,
    connected_graphs,
    cycle_graph,
    disjoint_union,
    empty_graph,
    path_graph,
    standard_corpus,
)
from .errors import ProdgraphError
from .graph import Graph, connected_components, detect_cycle_graph, diameter, is_connected
from .iso import distance_regularity_check, f_n_map, find_isomorphism, verify_isomorphism
from .products import (
    ProductKind,
    cartesian_product,
    degree_mismatches,
    expected_diameter_cartesian,
    expected_diameter_kronecker_cycle,
    expected_kronecker_components,
    kronecker_product,
    product,
    verify_product_edges,
)
from .spectra import (
    adjacency_spectrum,
    bisection_eigenvalues,
    cartesian_distance_spectrum,
    circulant_spectrum,
    cycle_adjacency_spectrum,
    distance_spectrum,
    gershgorin_bounds,
    kronecker_cycle_distance_spectrum,
    product_adjacency_spectrum,
    symmetric_eigenvalues,
)

logger = logging.getLogger(__name__)

SPECTRUM_ATOL = 1e-7
EIGENSOLVER_ATOL = 1e-8
EIGENSOLVER_SEED = 20240917
EDGE_RULE_MAX_ORDER = 16
SEARCH_MAX_ORDER = 100
SPECTRA_MAX_ORDER = 49
CONFIRM_MAX_ORDER = 60


@dataclass(frozen=True)
class ClaimResult:
    """What a check returns; shown lists the keys rendered in text output."""

    computed: Dict[str, Any]
    expected: Dict[str, Any]
    passed: bool
    rule: str
    shown: Tuple[str, ...] = ()


@dataclass(frozen=True)
class ClaimSpec:
    claim_id: str
    anchor: str
    check: Callable[..., ClaimResult]
    params: Dict[str, Any] = field(default_factory=dict)


@dataclass(frozen=True)
class ClaimRecord:
    claim_id: str
    anchor: str
    computed: Dict[str, Any]
    expected: Dict[str, Any]
    passed: bool
    rule: str
    elapsed: float
    shown: Tuple[str, ...] = ()
    error: Optional[str] = None

    def to_dict(self) -> dict:
        data = {
            "id": self.claim_id,
            "anchor": self.anchor,
            "computed": self.computed,
            "expected": self.expected,
            "rule": self.rule,
            "pass": self.passed,
            "elapsed": round(self.elapsed, 6),
        }
        if self.error is not None:
            data["error"] = self.error
        return data

    def render(self) -> str:
        parts = [f"{key}={_format_value(self.computed[key])}" for key in self.shown]
        if self.error is not None:
            parts.append(f"error={self.error}")
        parts.append("pass" if self.passed else "FAIL")
        return f"{self.claim_id}: {', '.join(parts)}"


def _format_value(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return f"{value:.6g}"
    if isinstance(value, (list, tuple)):
        return "/".join(_format_value(v) for v in value)
    return str(value)


def _natural_key(claim_id: str) -> List[Union[str, int]]:
    return [int(part) if part.isdigit() else part for part in re.split(r"(\d+)", claim_id)]


@dataclass(frozen=True)
class Report:
    max_n: int
    claims: Tuple[ClaimRecord, ...]

    @property
    def failed(self) -> List[ClaimRecord]:
        return [c for c in self.claims if not c.passed]

    @property
    def all_passed(self) -> bool:
        return not self.failed

    def claim(self, claim_id: str) -> ClaimRecord:
        for record in self.claims:
            if record.claim_id == claim_id:
                return record
        raise KeyError(claim_id)

    def to_dict(self) -> dict:
        return {
            "max_n": self.max_n,
            "passed": len(self.claims) - len(self.failed),
            "failed": len(self.failed),
            "claims": [c.to_dict() for c in self.claims],
        }

    def render_text(self) -> List[str]:
        return [c.render() for c in self.claims]


def write_report(report: Report, path: Union[str, Path]) -> None:
    Path(path).write_text(json.dumps(report.to_dict(), indent=2) + "\n", encoding="utf-8")


# ---------------------------------------------------------------------------
# Checks
# ---------------------------------------------------------------------------


def _max_dev(a: Sequence[float], b: Sequence[float]) -> float:
    if len(a) != len(b):
        return float("inf")
    return float(np.max(np.abs(np.asarray(a) - np.asarray(b)))) if len(a) else 0.0


def _pairs(graphs: Sequence[Graph]):
    for g in graphs:
        for h in graphs:
            yield g, h


def check_odd_cycle_map(n: int) -> ClaimResult:
    g = cycle_graph(n)
    cart = cartesian_product(g, g).graph
    kron = kronecker_product(g, g).graph
    ok = bool(verify_isomorphism(cart, kron, f_n_map(n)))
    return ClaimResult(
        computed={"edges": cart.edge_count, "verified": ok},
        expected={"edges": 2 * n * n, "verified": True},
        passed=ok and cart.edge_count == kron.edge_count == 2 * n * n,
        rule="exact",
        shown=("edges", "verified"),
    )


def _equal_odd_cycles_or_trivial(g: Graph, h: Graph) -> bool:
    if g.n == 1 and h.n == 1:
        return True
    n = detect_cycle_graph(g)
    return n is not None and n % 2 == 1 and n == detect_cycle_graph(h)


def check_cart_kron_only_if(
    exhaustive_order: int, max_cycle: int, node_budget: Optional[int]
) -> ClaimResult:
    graphs = connected_graphs(exhaustive_order)
    graphs += [cycle_graph(n) for n in range(max(exhaustive_order + 1, 3), max_cycle + 1)]
    pairs = isomorphic = mismatches = searched = disagreements = unvalidated = 0
    for g, h in _pairs(graphs):
        pairs += 1
        decision = decide(ProductKind.CARTESIAN, ProductKind.KRONECKER, g, h)
        isomorphic += decision.isomorphic
        if decision.isomorphic != _equal_odd_cycles_or_trivial(g, h):
            mismatches += 1
        if g.n * h.n <= SEARCH_MAX_ORDER:
            searched += 1
            cv = cross_validate(ProductKind.CARTESIAN, ProductKind.KRONECKER, g, h, node_budget)
            disagreements += cv.agreement is Agreement.DISAGREE
            unvalidated += cv.agreement is Agreement.UNVALIDATED
    return ClaimResult(
        computed={
            "pairs": pairs,
            "isomorphic": isomorphic,
            "mismatches": mismatches,
            "searched": searched,
            "disagreements": disagreements,
            "unvalidated": unvalidated,
        },
        expected={"mismatches": 0, "disagreements": 0},
        passed=mismatches == 0 and disagreements == 0,
        rule="exact; search-validated up to product order 100",
        shown=("pairs", "isomorphic", "disagreements"),
    )


def check_kronecker_cycle_distance_spectrum(n: int) -> ClaimResult:
    formula = kronecker_cycle_distance_spectrum(n, DEFAULT_TOL)
    g = cycle_graph(n)
    direct = distance_spectrum(kronecker_product(g, g).graph, DEFAULT_TOL)
    zero_mult = direct.multiplicity_of(0.0)
    largest = n * (n * n - 1) / 2
    deviation = _max_dev(formula.values, direct.values)
    return ClaimResult(
        computed={"zero-mult": zero_mult, "largest": round(direct.largest, 9), "max-dev": deviation},
        expected={"zero-mult": (n - 1) ** 2, "largest": largest},
        passed=deviation <= SPECTRUM_ATOL
        and zero_mult == (n - 1) ** 2
        and abs(direct.largest - largest) <= SPECTRUM_ATOL,
        rule=f"sorted elementwise within {SPECTRUM_ATOL:g}",
        shown=("zero-mult",),
    )


def check_cartesian_distance_spectrum(m: int, n: int) -> ClaimResult:
    g, h = cycle_graph(m), cycle_graph(n)
    formula = cartesian_distance_spectrum(g, h, DEFAULT_TOL)
    direct = distance_spectrum(cartesian_product(g, h).graph, DEFAULT_TOL)
    perron = n * (m * m - 1) / 4 + m * (n * n - 1) / 4
    deviation = _max_dev(formula.values, direct.values)
    return ClaimResult(
        computed={"perron": round(direct.largest, 9), "max-dev": deviation},
        expected={"perron": perron},
        passed=deviation <= SPECTRUM_ATOL and abs(direct.largest - perron) <= SPECTRUM_ATOL,
        rule=f"sorted elementwise within {SPECTRUM_ATOL:g}",
        shown=("perron",),
    )


def check_distinct_distance_eigenvalues(n: int) -> ClaimResult:
    g = cycle_graph(n)
    kron = kronecker_product(g, g).graph
    distinct = distance_spectrum(kron, DEFAULT_TOL).distinct_count
    diam = diameter(kron)
    formula_diam = expected_diameter_kronecker_cycle(n, g)
    return ClaimResult(
        computed={"distinct": distinct, "diam": diam, "formula-diam": formula_diam},
        expected={"distinct": (n + 3) // 2, "diam": n - 1},
        passed=distinct == (n + 3) // 2
        and diam == formula_diam == n - 1
        and distinct < diam + 1,
        rule=f"exact after clustering at {DEFAULT_TOL:g}",
        shown=("distinct", "diam"),
    )


def check_cartesian_not_distance_regular(n: int) -> ClaimResult:
    g = cycle_graph(n)
    pg = cartesian_product(g, g)
    result = distance_regularity_check(pg.graph)
    witness = result.witness
    computed: Dict[str, Any] = {"regular": result.regular}
    passed = False
    if witness is not None:
        computed.update(
            {
                "x": list(pg.pair(witness.x)),
                "y": list(pg.pair(witness.y)),
                "z": list(pg.pair(witness.z)),
                "family": witness.family,
                "distance": witness.i,
                "c-values": [witness.y_value, witness.z_value],
            }
        )
        passed = (
            witness.family == "c"
            and witness.i == 2
            and sorted((witness.y_value, witness.z_value)) == [1, 2]
            and witness.recheck(pg.graph)
        )
    return ClaimResult(
        computed=computed,
        expected={"regular": False, "family": "c", "c-values": [1, 2]},
        passed=passed and not result.regular,
        rule="exact; witness rechecked by neighborhood scan",
        shown=("regular", "c-values"),
    )


def _cycle_intersection_array(n: int) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    d = n // 2
    b = (2,) + (1,) * (d - 1)
    c = (1,) * (d - 1) + ((2,) if n % 2 == 0 else (1,))
    return b, c


def _format_array(array: Tuple[Tuple[int, ...], Tuple[int, ...]]) -> str:
    b, c = array
    return f"({','.join(map(str, b))};{','.join(map(str, c))})"


def check_cycle_distance_regular(n: int) -> ClaimResult:
    result = distance_regularity_check(cycle_graph(n))
    expected = _cycle_intersection_array(n)
    array = result.intersection_array
    return ClaimResult(
        computed={
            "regular": result.regular,
            "array": _format_array(array) if array is not None else None,
        },
        expected={"regular": True, "array": _format_array(expected)},
        passed=result.regular and array == expected,
        rule="exact",
        shown=("regular", "array"),
    )


def check_degree_formulas(exhaustive_order: int, max_order: int) -> ClaimResult:
    corpus = standard_corpus(exhaustive_order, max_order)
    products = mismatches = rule_checked = rule_violations = 0
    for g, h in _pairs(corpus):
        for kind in ProductKind:
            pg = product(kind, g, h)
            products += 1
            mismatches += len(degree_mismatches(pg))
            if pg.order <= EDGE_RULE_MAX_ORDER:
                rule_checked += 1
                rule_violations += verify_product_edges(pg) is not None
    return ClaimResult(
        computed={
            "products": products,
            "mismatches": mismatches,
            "edge-rule-checked": rule_checked,
            "edge-rule-violations": rule_violations,
        },
        expected={"mismatches": 0, "edge-rule-violations": 0},
        passed=mismatches == 0 and rule_violations == 0,
        rule="exact, every vertex",
        shown=("products", "mismatches"),
    )


def check_cartesian_connectivity(exhaustive_order: int) -> ClaimResult:
    factors = connected_graphs(min(exhaustive_order, 4)) + [
        empty_graph(2),
        disjoint_union(complete_graph(2), complete_graph(1)),
        disjoint_union(cycle_graph(3), path_graph(2)),
    ]
    pairs = violations = 0
    for g, h in _pairs(factors):
        pairs += 1
        expected = is_connected(g) and is_connected(h)
        if is_connected(cartesian_product(g, h).graph) != expected:
            violations += 1
    return ClaimResult(
        computed={"pairs": pairs, "violations": violations},
        expected={"violations": 0},
        passed=violations == 0,
        rule="exact",
        shown=("pairs", "violations"),
    )


def check_kronecker_components(exhaustive_order: int, max_order: int) -> ClaimResult:
    corpus = [g for g in standard_corpus(exhaustive_order, max_order) if g.edge_count > 0]
    pairs = two_component = violations = 0
    for g, h in _pairs(corpus):
        pairs += 1
        measured = len(connected_components(kronecker_product(g, h).graph))
        two_component += measured == 2
        if measured != expected_kronecker_components(g, h):
            violations += 1
    return ClaimResult(
        computed={"pairs": pairs, "two-component": two_component, "violations": violations},
        expected={"violations": 0},
        passed=violations == 0,
        rule="exact",
        shown=("pairs", "two-component", "violations"),
    )


def check_cartesian_diameter(exhaustive_order: int, max_order: int) -> ClaimResult:
    corpus = standard_corpus(exhaustive_order, max_order)
    pairs = violations = 0
    for g, h in _pairs(corpus):
        pairs += 1
        if diameter(cartesian_product(g, h).graph) != expected_diameter_cartesian(g, h):
            violations += 1
    return ClaimResult(
        computed={"pairs": pairs, "violations": violations},
        expected={"violations": 0},
        passed=violations == 0,
        rule="exact",
        shown=("pairs", "violations"),
    )


def check_kronecker_cycle_diameter(max_m: int) -> ClaimResult:
    factors = [path_graph(k) for k in range(2, 6)]
    factors += [cycle_graph(4), cycle_graph(6), complete_bipartite_graph(2, 3)]
    factors += [cycle_graph(k) for k in range(3, 10, 2)]
    cases = violations = 0
    for m in range(3, max_m + 1, 2):
        cm = cycle_graph(m)
        for h in factors:
            cases += 1
            if diameter(kronecker_product(cm, h).graph) != expected_diameter_kronecker_cycle(m, h):
                violations += 1
    return ClaimResult(
        computed={"cases": cases, "violations": violations},
        expected={"violations": 0},
        passed=violations == 0,
        rule="exact",
        shown=("cases", "violations"),
    )


def check_product_adjacency_spectra(exhaustive_order: int, max_order: int) -> ClaimResult:
    corpus = standard_corpus(exhaustive_order, min(max_order, 7))
    spectra = {id(g): adjacency_spectrum(g) for g in corpus}
    pairs = violations = 0
    worst = 0.0
    for g, h in _pairs(corpus):
        if g.n * h.n > SPECTRA_MAX_ORDER:
            continue
        for kind in (ProductKind.CARTESIAN, ProductKind.KRONECKER):
            pairs += 1
            formula = product_adjacency_spectrum(kind, spectra[id(g)], spectra[id(h)])
            direct = adjacency_spectrum(product(kind, g, h).graph)
            deviation = _max_dev(formula.values, direct.values)
            worst = max(worst, deviation)
            violations += deviation > SPECTRUM_ATOL
    return ClaimResult(
        computed={"pairs": pairs, "violations": violations, "max-dev": worst},
        expected={"violations": 0},
        passed=violations == 0,
        rule=f"sorted elementwise within {SPECTRUM_ATOL:g}",
        shown=("pairs", "violations"),
    )


def check_cycle_spectra(max_n: int) -> ClaimResult:
    cases = violations = 0
    for n in range(3, max_n + 1):
        cases += 1
        closed = cycle_adjacency_spectrum(n, DEFAULT_TOL)
        direct = adjacency_spectrum(cycle_graph(n), DEFAULT_TOL)
        ok = (
            _max_dev(closed.values, direct.values) <= SPECTRUM_ATOL
            and direct.distinct_count == n // 2 + 1
            and (abs(direct.smallest + 2.0) <= DEFAULT_TOL) == (n % 2 == 0)
        )
        violations += not ok
    return ClaimResult(
        computed={"cases": cases, "violations": violations},
        expected={"violations": 0},
        passed=violations == 0,
        rule=f"sorted elementwise within {SPECTRUM_ATOL:g}",
        shown=("cases", "violations"),
    )


def check_strong_lex(node_budget: Optional[int]) -> ClaimResult:
    lefts = [path_graph(2), path_graph(3), cycle_graph(5), complete_graph(3)]
    completes = [complete_graph(2), complete_graph(3), complete_graph(4)]
    others = [path_graph(3), path_graph(4), cycle_graph(4)]
    cases = violations = confirmed = 0
    for g in lefts:
        for h in completes + others:
            cases += 1
            decision = decide(ProductKind.STRONG, ProductKind.LEXICOGRAPHIC, g, h)
            if decision.isomorphic != (h in completes):
                violations += 1
                continue
            if not decision.isomorphic and g.n * h.n <= CONFIRM_MAX_ORDER:
                strong = product(ProductKind.STRONG, g, h).graph
                lex = product(ProductKind.LEXICOGRAPHIC, g, h).graph
                if find_isomorphism(strong, lex, node_budget) is not None:
                    violations += 1
                else:
                    confirmed += 1
    return ClaimResult(
        computed={"cases": cases, "confirmed": confirmed, "violations": violations},
        expected={"violations": 0},
        passed=violations == 0,
        rule="exact",
        shown=("cases", "violations"),
    )


_NEVER_PAIRS = (
    (ProductKind.CARTESIAN, ProductKind.STRONG),
    (ProductKind.CARTESIAN, ProductKind.LEXICOGRAPHIC),
    (ProductKind.KRONECKER, ProductKind.STRONG),
    (ProductKind.KRONECKER, ProductKind.LEXICOGRAPHIC),
)


def check_never_isomorphic(exhaustive_order: int, node_budget: Optional[int]) -> ClaimResult:
    graphs = [g for g in connected_graphs(exhaustive_order) if g.n >= 2]
    cases = violations = searched = 0
    for g, h in _pairs(graphs):
        for kind_a, kind_b in _NEVER_PAIRS:
            cases += 1
            decision = decide(kind_a, kind_b, g, h)
            certificate = decision.certificate
            if (
                decision.isomorphic
                or not isinstance(certificate, DegreeObstruction)
                or certificate.value_a == certificate.value_b
            ):
                violations += 1
                continue
            if g.n * h.n <= CONFIRM_MAX_ORDER:
                searched += 1
                cv = cross_validate(kind_a, kind_b, g, h, node_budget)
                violations += cv.agreement is Agreement.DISAGREE
    return ClaimResult(
        computed={"cases": cases, "searched": searched, "violations": violations},
        expected={"violations": 0},
        passed=violations == 0,
        rule="exact",
        shown=("cases", "violations"),
    )


def _circulant(row: np.ndarray) -> np.ndarray:
    n = row.size
    return row[(np.arange(n)[None, :] - np.arange(n)[:, None]) % n]


def check_eigensolver(max_order: int = 30, seed: int = EIGENSOLVER_SEED) -> ClaimResult:
    rng = np.random.default_rng(seed)
    worst_bisection = worst_circulant = 0.0
    outside_gershgorin = 0
    for order in range(1, max_order + 1):
        raw = rng.uniform(-5.0, 5.0, size=(order, order))
        matrix = (raw + raw.T) / 2.0
        values = symmetric_eigenvalues(matrix)
        worst_bisection = max(worst_bisection, _max_dev(values, bisection_eigenvalues(matrix)))
        lo, hi = gershgorin_bounds(matrix)
        outside_gershgorin += int(np.sum((values < lo - 1e-9) | (values > hi + 1e-9)))

    for order in range(3, max_order + 1):
        row = rng.uniform(-5.0, 5.0, size=order)
        row = (row + np.roll(row[::-1], 1)) / 2.0
        values = symmetric_eigenvalues(_circulant(row))
        worst_circulant = max(worst_circulant, _max_dev(values, circulant_spectrum(row)))

    return ClaimResult(
        computed={
            "bisection-dev": worst_bisection,
            "circulant-dev": worst_circulant,
            "outside-gershgorin": outside_gershgorin,
        },
        expected={"max-dev": EIGENSOLVER_ATOL, "outside-gershgorin": 0},
        passed=worst_bisection <= EIGENSOLVER_ATOL
        and worst_circulant <= EIGENSOLVER_ATOL
        and outside_gershgorin == 0,
        rule=f"elementwise within {EIGENSOLVER_ATOL:g}",
        shown=("bisection-dev", "circulant-dev"),
    )


# ---------------------------------------------------------------------------
# Registry and runner
# ---------------------------------------------------------------------------


def _odd(low: int, high: int) -> range:
    start = low if low % 2 == 1 else low + 1
    return range(start, high + 1, 2)


def build_claims(
    max_n: int,
    exhaustive_order: int = 5,
    max_order: int = 8,
    node_budget: Optional[int] = None,
) -> List[ClaimSpec]:
    """Every claim of the suite for the given odd-cycle cap."""
    if max_n < 3:
        raise ValueError(f"max_n must be at least 3, got {max_n}")
    claims: List[ClaimSpec] = []
    for n in _odd(3, max_n):
        claims.append(ClaimSpec(
            f"thm3.1-odd-n{n}", "f_n maps C_n□C_n onto C_n⊗C_n",
            check_odd_cycle_map, {"n": n},
        ))
        claims.append(ClaimSpec(
            f"thm3.3-n{n}", "distance spectrum of C_n⊗C_n from that of C_n",
            check_kronecker_cycle_distance_spectrum, {"n": n},
        ))
        claims.append(ClaimSpec(
            f"drg-cycle-n{n}", "odd cycles are distance-regular",
            check_cycle_distance_regular, {"n": n},
        ))
    for n in _odd(5, max_n):
        claims.append(ClaimSpec(
            f"remark3.4-n{n}", "C_n⊗C_n has (n+3)/2 distinct distance eigenvalues, below diam+1",
            check_distinct_distance_eigenvalues, {"n": n},
        ))
        claims.append(ClaimSpec(
            f"drg-cart-n{n}", "C_n□C_n is not distance-regular (c_2 witness)",
            check_cartesian_not_distance_regular, {"n": n},
        ))
    for m in _odd(3, min(max_n, 7)):
        for n in _odd(3, min(max_n, 7)):
            claims.append(ClaimSpec(
                f"thm2.7-cart-m{m}-n{n}", "distance spectrum of C_m□C_n from transmission-regular factors",
                check_cartesian_distance_spectrum, {"m": m, "n": n},
            ))

    corpus = {"exhaustive_order": exhaustive_order, "max_order": max_order}
    claims.extend([
        ClaimSpec("thm3.1-only-if", "C_n□C_n ≅ C_n⊗C_n only for equal odd cycles",
                  check_cart_kron_only_if,
                  {"exhaustive_order": exhaustive_order, "max_cycle": 9, "node_budget": node_budget}),
        ClaimSpec("thm2.1-degrees", "product degree formulas", check_degree_formulas, corpus),
        ClaimSpec("lemma2.2-connectivity", "G□H connected iff G and H connected",
                  check_cartesian_connectivity, {"exhaustive_order": exhaustive_order}),
        ClaimSpec("thm2.3-kronecker-components", "G⊗H has 2 components iff both factors bipartite",
                  check_kronecker_components, corpus),
        ClaimSpec("thm2.4-diameter", "diam(G□H) = diam(G) + diam(H)", check_cartesian_diameter, corpus),
        ClaimSpec("thm2.5-kronecker-diameter", "diameter of C_m⊗H for odd m",
                  check_kronecker_cycle_diameter, {"max_m": min(max_n, 9)}),
        ClaimSpec("thm2.6-spectra", "adjacency spectra of G□H and G⊗H from the factors",
                  check_product_adjacency_spectra, corpus),
        ClaimSpec("thm3.2-cycle-spectra", "adjacency spectrum of C_n is 2cos(2πk/n)",
                  check_cycle_spectra, {"max_n": max_n}),
        ClaimSpec("strong-lex", "G⊠H ≅ G∘H iff H is complete", check_strong_lex,
                  {"node_budget": node_budget}),
        ClaimSpec("never-iso", "□⊠, □∘, ⊗⊠ and ⊗∘ products are never isomorphic",
                  check_never_isomorphic,
                  {"exhaustive_order": exhaustive_order, "node_budget": node_budget}),
        ClaimSpec("eigensolver", "QL eigenvalues agree with bisection and DFT closed forms",
                  check_eigensolver),
    ])
    return claims


def run_claim(spec: ClaimSpec) -> ClaimRecord:
    """Run one check; library errors become a failed record."""
    start = time.perf_counter()
    try:
        result = spec.check(**spec.params)
    except ProdgraphError as e:
        elapsed = time.perf_counter() - start
        logger.debug("claim %s raised %s", spec.claim_id, e)
        return ClaimRecord(spec.claim_id, spec.anchor, {}, {}, False, "error", elapsed, error=str(e))
    elapsed = time.perf_counter() - start
    logger.debug("claim %s finished in %.3fs", spec.claim_id, elapsed)
    return ClaimRecord(
        spec.claim_id,
        spec.anchor,
        result.computed,
        result.expected,
        result.passed,
        result.rule,
        elapsed,
        result.shown,
    )


def run_reproduce(
    max_n: int = 13,
    jobs: int = 1,
    exhaustive_order: int = 5,
    max_order: int = 8,
    node_budget: Optional[int] = None,
) -> Report:
    """Run the whole suite, in worker processes when jobs > 1."""
    claims = build_claims(max_n, exhaustive_order, max_order, node_budget)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            records = list(pool.map(run_claim, claims))
    else:
        records = [run_claim(spec) for spec in claims]
    records.sort(key=lambda r: _natural_key(r.claim_id))
    return Report(max_n=max_n, claims=tuple(records))
