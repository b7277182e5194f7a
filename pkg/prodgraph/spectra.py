#!/usr/bin/env python3
"""
Dense symmetric eigenvalues, eigenvalue clustering, closed-form cycle
spectra and the composition rules for product spectra.

The solver is Householder tridiagonalization followed by implicit QL with
Wilkinson-style shifts. A Sturm-sequence bisection on the same tridiagonal
form is kept alongside as an independent check.
"""

import logging
import math
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .config import default_tolerance
from .errors import ClusteringError, GraphError, HypothesisError, MatrixError
from .graph import Graph, all_pairs_distances, transmission_profile
from .products import ProductKind

logger = logging.getLogger(__name__)

SYMMETRY_ATOL = 1e-12
MAX_QL_ITERATIONS = 60

Cluster = Tuple[float, int]


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalue multiset: raw values (nonincreasing) plus clusters."""

    values: Tuple[float, ...]
    clusters: Tuple[Cluster, ...]
    tol: float

    @property
    def order(self) -> int:
        return len(self.values)

    @property
    def distinct_count(self) -> int:
        return len(self.clusters)

    @property
    def largest(self) -> float:
        return self.values[0]

    @property
    def smallest(self) -> float:
        return self.values[-1]

    @property
    def trace(self) -> float:
        return math.fsum(self.values)

    def multiplicity_of(self, value: float) -> int:
        """Multiplicity of the cluster within tol of value, 0 if none."""
        for representative, multiplicity in self.clusters:
            if abs(representative - value) <= self.tol:
                return multiplicity
        return 0

    def matches(self, other: "Spectrum", atol: float = 1e-7) -> bool:
        """Sorted elementwise comparison of the raw values."""
        if self.order != other.order:
            return False
        return bool(
            np.allclose(self.values, other.values, rtol=0.0, atol=atol)
        )

    def to_dict(self) -> dict:
        return {
            "order": self.order,
            "tol": self.tol,
            "clusters": [[value, mult] for value, mult in self.clusters],
        }


# ---------------------------------------------------------------------------
# Eigensolver
# ---------------------------------------------------------------------------


def _validated(matrix) -> np.ndarray:
    a = np.array(matrix, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise MatrixError(f"matrix must be square, got shape {a.shape}")
    if a.shape[0] == 0:
        raise MatrixError("matrix must have order at least 1")
    if not np.isfinite(a).all():
        raise MatrixError("matrix contains NaN or infinite entries")
    asymmetry = float(np.abs(a - a.T).max())
    if asymmetry > SYMMETRY_ATOL:
        raise MatrixError(f"matrix is not symmetric (max |M - M^T| = {asymmetry:.3g})")
    return a


def tridiagonalize(matrix) -> Tuple[np.ndarray, np.ndarray]:
    """Householder reduction of a symmetric matrix.

    Returns:
        (d, e): the diagonal (length n) and the off-diagonal (length n-1)
        of a tridiagonal matrix with the same eigenvalues.
    """
    a = _validated(matrix)
    n = a.shape[0]
    for k in range(n - 2):
        x = a[k + 1 :, k]
        alpha = float(np.linalg.norm(x))
        if alpha == 0.0:
            continue
        if x[0] > 0:
            alpha = -alpha
        v = x.copy()
        v[0] -= alpha
        v_norm = float(np.linalg.norm(v))
        if v_norm == 0.0:
            continue
        v /= v_norm

        # H A H with H = I - 2 v v^T, applied to the trailing block
        trailing = a[k + 1 :, k + 1 :]
        p = trailing @ v
        w = p - float(v @ p) * v
        trailing -= 2.0 * (np.outer(v, w) + np.outer(w, v))

        a[k + 1, k] = a[k, k + 1] = alpha
        a[k + 2 :, k] = 0.0
        a[k, k + 2 :] = 0.0
    return np.diag(a).copy(), np.diag(a, 1).copy()


def _implicit_ql(diagonal: Sequence[float], off: Sequence[float]) -> Tuple[List[float], int]:
    d = [float(x) for x in diagonal]
    e = [float(x) for x in off] + [0.0]
    n = len(d)
    eps = np.finfo(float).eps
    # fixed once per matrix, as in tql1
    norm = max((abs(d[i]) + abs(e[i]) for i in range(n)), default=0.0)
    sweeps = 0

    for l in range(n):
        iterations = 0
        while True:
            m = l
            while m < n - 1:
                if abs(e[m]) <= eps * norm:
                    break
                m += 1
            if m == l:
                break
            iterations += 1
            sweeps += 1
            if iterations > MAX_QL_ITERATIONS:
                raise MatrixError(
                    f"QL iteration did not converge for eigenvalue {l} "
                    f"after {MAX_QL_ITERATIONS} sweeps"
                )

            g = (d[l + 1] - d[l]) / (2.0 * e[l])
            r = math.hypot(g, 1.0)
            g = d[m] - d[l] + e[l] / (g + math.copysign(r, g))
            s = c = 1.0
            p = 0.0
            deflated = False
            for i in range(m - 1, l - 1, -1):
                f = s * e[i]
                b = c * e[i]
                r = math.hypot(f, g)
                e[i + 1] = r
                if r == 0.0:
                    d[i + 1] -= p
                    e[m] = 0.0
                    deflated = True
                    break
                s = f / r
                c = g / r
                g = d[i + 1] - p
                r = (d[i] - g) * s + 2.0 * c * b
                p = s * r
                d[i + 1] = g + p
                g = c * r - b
            if deflated:
                continue
            d[l] -= p
            e[l] = g
            e[m] = 0.0
    return d, sweeps


def symmetric_eigenvalues(matrix) -> np.ndarray:
    """All eigenvalues of a real symmetric matrix, nonincreasing.

    Raises:
        MatrixError: non-square, empty, non-finite or non-symmetric input,
            or a QL sweep that fails to converge.
    """
    a = _validated(matrix)
    if a.shape[0] == 1:
        return a[0].copy()
    d, e = tridiagonalize(a)
    values, sweeps = _implicit_ql(d, e)
    logger.debug("eigensolve of order %d took %d QL sweeps", a.shape[0], sweeps)
    return np.sort(np.array(values))[::-1]


def sturm_count(d: Sequence[float], e: Sequence[float], x: float) -> int:
    """Number of eigenvalues of the tridiagonal (d, e) strictly below x."""
    count = 0
    q = 1.0
    tiny = np.finfo(float).tiny
    for i in range(len(d)):
        coupling = e[i - 1] ** 2 / q if i > 0 else 0.0
        q = d[i] - x - coupling
        if q == 0.0:
            q = -tiny
        if q < 0:
            count += 1
    return count


def gershgorin_bounds(matrix) -> Tuple[float, float]:
    """Interval containing every eigenvalue (union of Gershgorin discs)."""
    a = _validated(matrix)
    centers = np.diag(a)
    radii = np.abs(a).sum(axis=1) - np.abs(centers)
    return float((centers - radii).min()), float((centers + radii).max())


def bisection_eigenvalues(matrix, rel_tol: float = 1e-14) -> np.ndarray:
    """Eigenvalues by Sturm-count bisection, nonincreasing.

    Slow but independent of the QL iteration; used to cross-check it.
    """
    a = _validated(matrix)
    n = a.shape[0]
    d, e = tridiagonalize(a)
    lo_bound, hi_bound = gershgorin_bounds(a)
    pad = 1e-9 * (1.0 + max(abs(lo_bound), abs(hi_bound)))
    lo_bound -= pad
    hi_bound += pad

    values = []
    for k in range(n):
        # k-th smallest: the least x with more than k eigenvalues at or below it
        lo, hi = lo_bound, hi_bound
        for _ in range(200):
            mid = 0.5 * (lo + hi)
            if sturm_count(d, e, mid) <= k:
                lo = mid
            else:
                hi = mid
            if hi - lo <= rel_tol * (1.0 + abs(lo) + abs(hi)):
                break
        values.append(0.5 * (lo + hi))
    return np.array(values)[::-1]


# ---------------------------------------------------------------------------
# Clustering and closed forms
# ---------------------------------------------------------------------------


def cluster(values: Iterable[float], tol: Optional[float] = None) -> Spectrum:
    """Single-linkage clustering of eigenvalues with gap threshold tol.

    Each cluster is represented by its mean.

    Raises:
        ClusteringError: a chain whose mean is farther than tol from one of
            its members.
    """
    tol = default_tolerance() if tol is None else tol
    if tol <= 0:
        raise ValueError(f"tol must be positive, got {tol}")
    ordered = sorted((float(v) for v in values), reverse=True)

    groups: List[List[float]] = []
    for value in ordered:
        if groups and groups[-1][-1] - value <= tol:
            groups[-1].append(value)
        else:
            groups.append([value])
    clusters: List[Tuple[float, int]] = []
    for group in groups:
        mean = math.fsum(group) / len(group)
        if group[0] - mean > tol or mean - group[-1] > tol:
            raise ClusteringError(group[-1], group[0], tol)
        clusters.append((mean, len(group)))
    return Spectrum(values=tuple(ordered), clusters=tuple(clusters), tol=tol)


def circulant_spectrum(first_row: Sequence[float]) -> np.ndarray:
    """Eigenvalues of a symmetric circulant matrix via the DFT, nonincreasing."""
    row = np.asarray(first_row, dtype=float)
    if row.ndim != 1 or row.size == 0:
        raise MatrixError("first row must be a non-empty vector")
    if not np.allclose(row[1:], row[1:][::-1], rtol=0.0, atol=SYMMETRY_ATOL):
        raise MatrixError("circulant is not symmetric (c[k] != c[n-k])")
    return np.sort(np.fft.fft(row).real)[::-1]


def cycle_adjacency_spectrum(n: int, tol: Optional[float] = None) -> Spectrum:
    """{2cos(2*pi*k/n) : k = 1..n}."""
    if n < 3:
        raise GraphError(f"a cycle needs at least 3 vertices, got {n}")
    k = np.arange(1, n + 1)
    return cluster(2.0 * np.cos(2.0 * np.pi * k / n), tol)


def cycle_distance_spectrum(n: int, tol: Optional[float] = None) -> Spectrum:
    """Distance spectrum of C_n from its circulant first row."""
    if n < 3:
        raise GraphError(f"a cycle needs at least 3 vertices, got {n}")
    row = [min(k, n - k) for k in range(n)]
    return cluster(circulant_spectrum(row), tol)


# ---------------------------------------------------------------------------
# Graph spectra and product composition rules
# ---------------------------------------------------------------------------


def adjacency_spectrum(g: Graph, tol: Optional[float] = None) -> Spectrum:
    return cluster(symmetric_eigenvalues(g.adjacency_matrix()), tol)


def distance_spectrum(g: Graph, tol: Optional[float] = None) -> Spectrum:
    """Spectrum of the distance matrix; raises NotConnectedError."""
    dm = all_pairs_distances(g)
    return cluster(symmetric_eigenvalues(dm.matrix), tol)


def product_adjacency_spectrum(
    kind: ProductKind, sg: Spectrum, sh: Spectrum, tol: Optional[float] = None
) -> Spectrum:
    """Adjacency spectrum of G □ H (sums) or G ⊗ H (products) from the factors."""
    lam = np.asarray(sg.values)
    mu = np.asarray(sh.values)
    if kind is ProductKind.CARTESIAN:
        combined = np.add.outer(lam, mu)
    elif kind is ProductKind.KRONECKER:
        combined = np.multiply.outer(lam, mu)
    else:
        raise HypothesisError(
            f"no closed-form adjacency spectrum for the {kind.value} product"
        )
    return cluster(combined.ravel(), sg.tol if tol is None else tol)


def _check_perron(spectrum: Spectrum, value: float, label: str) -> None:
    if abs(spectrum.largest - value) > 1e-6 * (1.0 + abs(value)):
        raise HypothesisError(
            f"largest distance eigenvalue of {label} is {spectrum.largest:.6g}, "
            f"expected its transmission {value}"
        )


def cartesian_distance_spectrum_tr(
    sg: Spectrum,
    sh: Spectrum,
    m: int,
    n: int,
    s: float,
    t: float,
    tol: Optional[float] = None,
) -> Spectrum:
    """Distance spectrum of G □ H for transmission-regular G (order m, Tr s)
    and H (order n, Tr t).

    {n*s + m*t} + {n*mu_i : i >= 2} + {m*eta_j : j >= 2} + {0 x (m-1)(n-1)}
    """
    if sg.order != m or sh.order != n:
        raise HypothesisError(
            f"spectrum sizes ({sg.order}, {sh.order}) do not match orders ({m}, {n})"
        )
    _check_perron(sg, s, "G")
    _check_perron(sh, t, "H")
    values = [n * s + m * t]
    values.extend(n * mu for mu in sg.values[1:])
    values.extend(m * eta for eta in sh.values[1:])
    values.extend([0.0] * ((m - 1) * (n - 1)))
    return cluster(values, sg.tol if tol is None else tol)


def cartesian_distance_spectrum(g: Graph, h: Graph, tol: Optional[float] = None) -> Spectrum:
    """Checks transmission regularity of both factors, then composes."""
    transmissions = []
    for label, factor in (("G", g), ("H", h)):
        profile = transmission_profile(factor)
        if not profile.is_regular:
            raise HypothesisError(
                f"{label} is not transmission regular "
                f"(transmissions range {min(profile.transmissions)}"
                f"..{max(profile.transmissions)})"
            )
        transmissions.append(profile.s)
    return cartesian_distance_spectrum_tr(
        distance_spectrum(g, tol),
        distance_spectrum(h, tol),
        g.n,
        h.n,
        transmissions[0],
        transmissions[1],
        tol,
    )


def kronecker_cycle_distance_spectrum(n: int, tol: Optional[float] = None) -> Spectrum:
    """Distance spectrum of C_n ⊗ C_n for odd n.

    {2n*l_1} + {n*l_i twice : i = 2..n} + {0 x (n-1)^2}, where l_1 > l_2 >=
    ... >= l_n is the distance spectrum of C_n taken with multiplicity.
    """
    if n < 3 or n % 2 == 0:
        raise HypothesisError(f"n must be odd and at least 3, got {n}")
    base = cycle_distance_spectrum(n, tol)
    values = [2 * n * base.values[0]]
    for lam in base.values[1:]:
        values.extend((n * lam, n * lam))
    values.extend([0.0] * ((n - 1) ** 2))
    return cluster(values, base.tol)
