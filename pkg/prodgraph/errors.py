"""
Exception hierarchy for prodgraph.

Every error raised on purpose by the library derives from ProdgraphError so
the CLI can map it to an exit code. Most also derive from ValueError because
they reject an argument.
"""

from typing import Optional


class ProdgraphError(Exception):
    """Base class for all prodgraph errors."""


class GraphError(ProdgraphError, ValueError):
    """Invalid graph construction or incompatible graph arguments."""


class NotConnectedError(GraphError):
    """A distance-dependent operation received a disconnected graph."""

    def __init__(self, operation: str, components: int):
        self.operation = operation
        self.components = components
        super().__init__(
            f"{operation}: graph is not connected ({components} components)"
        )


class GraphFormatError(ProdgraphError, ValueError):
    """Malformed edge-list or graph6 input."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class HypothesisError(ProdgraphError, ValueError):
    """A closed form was asked for input outside its hypotheses."""


class MatrixError(ProdgraphError, ValueError):
    """Matrix rejected by the eigensolver (non-symmetric, NaN, empty)."""


class SearchBudgetExceeded(ProdgraphError):
    """Isomorphism search stopped at its node budget.

    This is not a "not isomorphic" answer.
    """

    def __init__(self, nodes: int, budget: int):
        self.nodes = nodes
        self.budget = budget
        super().__init__(
            f"isomorphism search aborted after {nodes} nodes (budget {budget})"
        )


class CertificateError(ProdgraphError, AssertionError):
    """A certificate failed its own verification."""


class ConfigError(ProdgraphError, ValueError):
    """Invalid configuration file or environment override."""


class ClusteringError(ProdgraphError, ValueError):
    """A single-linkage chain is too wide for one representative."""

    def __init__(self, low: float, high: float, tol: float):
        self.low = low
        self.high = high
        self.tol = tol
        super().__init__(
            f"eigenvalues {low:.12g}..{high:.12g} chain within tol {tol:g} "
            "but do not all lie within tol of their mean; use a smaller tol"
        )
