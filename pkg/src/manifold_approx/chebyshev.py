"""First-kind Chebyshev nodes, barycentric interpolation, and error certificates.

Interpolation uses the barycentric formula with the closed-form weights for
first-kind nodes; no coefficient transforms are involved, so fitting is just
storing the node values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "chebyshev_nodes",
    "barycentric_weights",
    "cardinal_row",
    "ChebyshevGrid",
    "make_grid",
    "UnivariateInterpolant",
    "fit_univariate",
    "eval_univariate",
    "lebesgue_bound",
    "AnalyticityData",
    "apriori_error_bound",
]

_NODE_MATCH_TOL = 1e-14


def chebyshev_nodes(count):
    """The ``count`` first-kind Chebyshev nodes cos((2i-1)pi/(2 count)), i=1..count.

    Strictly decreasing, all in (-1, 1).
    """
    if count < 1:
        raise ValueError("node count must be >= 1")
    i = np.arange(1, count + 1)
    return np.cos((2 * i - 1) * np.pi / (2 * count))


def barycentric_weights(count):
    """Barycentric weights for the first-kind nodes, up to a common scale."""
    if count < 1:
        raise ValueError("node count must be >= 1")
    i = np.arange(1, count + 1)
    return (-1.0) ** (i - 1) * np.sin((2 * i - 1) * np.pi / (2 * count))


def cardinal_row(nodes, weights, x):
    """Values of all cardinal functions ell_i(x), as a vector.

    ``row @ values`` evaluates the interpolant of ``values`` at ``x``.  When
    ``x`` coincides with a node the exact unit vector is returned.
    """
    if not -1.0 - 1e-12 <= x <= 1.0 + 1e-12:
        raise ValueError(f"evaluation point {x} outside [-1, 1]")
    diff = x - nodes
    hit = np.abs(diff) < _NODE_MATCH_TOL
    if hit.any():
        row = np.zeros_like(nodes)
        row[np.argmax(hit)] = 1.0
        return row
    terms = weights / diff
    return terms / terms.sum()


@dataclass(frozen=True)
class ChebyshevGrid:
    """Per-mode first-kind node sets for a tensorized grid."""

    counts: tuple
    nodes: tuple = field(repr=False)

    @property
    def ndim(self):
        return len(self.counts)


def make_grid(counts):
    counts = tuple(int(c) for c in counts)
    if not counts:
        raise ValueError("grid needs at least one mode")
    return ChebyshevGrid(counts=counts, nodes=tuple(chebyshev_nodes(c) for c in counts))


@dataclass(frozen=True)
class UnivariateInterpolant:
    """Polynomial interpolant through first-kind nodes, in barycentric form."""

    values: np.ndarray
    nodes: np.ndarray = field(repr=False)
    weights: np.ndarray = field(repr=False)

    @property
    def degree(self):
        return len(self.values) - 1

    def __call__(self, x):
        return float(cardinal_row(self.nodes, self.weights, x) @ self.values)


def fit_univariate(values):
    """Interpolant through ``values`` sampled at the matching first-kind nodes."""
    values = np.asarray(values, dtype=float)
    if values.ndim != 1 or values.size < 1:
        raise ValueError("values must be a nonempty vector")
    n = values.size
    return UnivariateInterpolant(values=values, nodes=chebyshev_nodes(n), weights=barycentric_weights(n))


def eval_univariate(interpolant, x):
    return interpolant(x)


def lebesgue_bound(degree):
    """Upper bound (2/pi) log(N+1) + 1 on the Lebesgue constant at degree N."""
    if degree < 0:
        raise ValueError("degree must be >= 0")
    return (2.0 / math.pi) * math.log(degree + 1) + 1.0


@dataclass(frozen=True)
class AnalyticityData:
    """Per-mode Bernstein-ellipse data certifying a tensorized interpolant.

    ``rho``: ellipse parameters (> 1), ``magnitude``: bounds on the analytic
    continuation inside each ellipse, ``eval_error``: max-norm of the sample
    evaluation error.
    """

    rho: tuple
    magnitude: tuple
    eval_error: float = 0.0

    def __post_init__(self):
        if len(self.rho) != len(self.magnitude):
            raise ValueError("rho and magnitude must have matching lengths")
        if any(r <= 1.0 for r in self.rho):
            raise ValueError("every ellipse parameter must exceed 1")
        if any(c < 0.0 for c in self.magnitude) or self.eval_error < 0.0:
            raise ValueError("magnitudes and eval_error must be nonnegative")


def apriori_error_bound(data, degrees):
    """A-priori sup-norm error bound for tensorized Chebyshev interpolation.

    Sums the per-mode truncation terms 4 L_1...L_{k-1} C_k / ((rho_k - 1) rho_k^{N_k})
    and adds the evaluation-error amplification L_1...L_m * eval_error, with
    L_k the Lebesgue bound at degree N_k.
    """
    degrees = [int(n) for n in degrees]
    if len(degrees) != len(data.rho):
        raise ValueError("one degree per mode required")
    total = 0.0
    leb_prefix = 1.0
    for rho, mag, deg in zip(data.rho, data.magnitude, degrees):
        total += leb_prefix * 4.0 * mag / ((rho - 1.0) * rho**deg)
        leb_prefix *= lebesgue_bound(deg)
    return total + leb_prefix * data.eval_error
