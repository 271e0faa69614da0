"""End-to-end construction and evaluation of manifold-valued approximants.

Pipeline: pick a base point near the image (streaming Karcher estimate), pull
the map back to that tangent space, sample it on a tensorized Chebyshev grid,
compress the sample tensor with ST-HOSVD, and interpolate each factor column.
Evaluation runs the factored contraction and pushes the result back through
the exponential map (or a retraction).
"""

from __future__ import annotations

import itertools
import json
import time
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from . import bounds as bounds_mod
from . import tucker
from .chebyshev import barycentric_weights, cardinal_row, lebesgue_bound, make_grid
from .errors import ChartViolation
from .manifolds import karcher_mean_estimate, manifold_from_spec, manifold_spec
from .util import pool_map

__all__ = [
    "SamplingPlan",
    "ManifoldApproximant",
    "BuildDiagnostics",
    "ErrorReport",
    "choose_base_point",
    "sample_tensor",
    "build",
    "validate",
    "save_approximant",
    "load_approximant",
    "approximant_to_payload",
    "approximant_from_payload",
]

VARIANTS = ("explog", "qr", "polar")

FORMAT_NAME = "manifold-approximant"
FORMAT_VERSION = 1


def _retraction_method(variant):
    if variant not in VARIANTS:
        raise ValueError(f"unknown map variant {variant!r}; expected one of {VARIANTS}")
    return "exp" if variant == "explog" else variant


@dataclass(frozen=True)
class SamplingPlan:
    """Where and how densely to sample the target map.

    ``domain`` is one (lower, upper) pair per input axis; ``counts`` the
    Chebyshev node count per axis.  Base-point selection draws
    ``karcher_sample_count`` uniform points using ``rng_seed``.
    """

    domain: tuple
    counts: tuple
    karcher_sample_count: int = 100
    rng_seed: int = 0

    def __post_init__(self):
        domain = tuple((float(lo), float(hi)) for lo, hi in self.domain)
        counts = tuple(int(c) for c in self.counts)
        if len(domain) != len(counts) or not domain:
            raise ValueError("domain and counts must be nonempty and of equal length")
        for lo, hi in domain:
            if not (np.isfinite(lo) and np.isfinite(hi) and lo < hi):
                raise ValueError(f"bad domain interval ({lo}, {hi})")
        if any(c < 1 for c in counts):
            raise ValueError("node counts must be >= 1")
        if self.karcher_sample_count < 1:
            raise ValueError("karcher_sample_count must be >= 1")
        object.__setattr__(self, "domain", domain)
        object.__setattr__(self, "counts", counts)

    @property
    def ndim(self):
        return len(self.domain)

    def to_unit(self, x):
        """Affine map from the domain to [-1, 1]^m."""
        x = np.asarray(x, dtype=float)
        lo = np.array([d[0] for d in self.domain])
        hi = np.array([d[1] for d in self.domain])
        return 2.0 * (x - lo) / (hi - lo) - 1.0

    def from_unit(self, t):
        t = np.asarray(t, dtype=float)
        lo = np.array([d[0] for d in self.domain])
        hi = np.array([d[1] for d in self.domain])
        return lo + (t + 1.0) * (hi - lo) / 2.0

    def uniform_points(self, rng, count):
        lo = np.array([d[0] for d in self.domain])
        hi = np.array([d[1] for d in self.domain])
        return rng.uniform(lo, hi, size=(count, self.ndim))


def choose_base_point(f, manifold, plan):
    """Karcher-mean estimate of f over seeded uniform draws, in draw order."""
    rng = np.random.default_rng(plan.rng_seed)
    draws = plan.uniform_points(rng, plan.karcher_sample_count)
    values = pool_map(lambda x: f(x), list(draws))
    return karcher_mean_estimate(manifold, values)


def sample_tensor(f, manifold, point, basis, plan, variant="explog"):
    """Pulled-back samples of f on the tensorized Chebyshev grid.

    Returns the array of tangent coefficients with one mode per input axis
    plus a trailing component mode of length ``manifold.intrinsic_dim``.
    """
    method = _retraction_method(variant)
    grid = make_grid(plan.counts)
    indices = list(itertools.product(*(range(c) for c in plan.counts)))

    def pull(index):
        t = np.array([grid.nodes[axis][i] for axis, i in enumerate(index)])
        x = plan.from_unit(t)
        try:
            tangent = manifold.inverse_retract(point, f(x), method)
        except ChartViolation as exc:
            raise ChartViolation(f"chart violation at grid node {index}: {exc}") from exc
        return basis.coords(tangent)

    rows = pool_map(pull, indices)
    out = np.empty(plan.counts + (manifold.intrinsic_dim,))
    for index, row in zip(indices, rows):
        out[index] = row
    return out


@dataclass(frozen=True)
class BuildDiagnostics:
    base_point_seconds: float
    sampling_seconds: float
    compression_seconds: float
    ranks: tuple
    discarded_energy: float


@dataclass(frozen=True)
class ManifoldApproximant:
    """Evaluable approximant of a map into a manifold.

    Holds the base point and tangent basis, the Tucker core and component
    factor, and one barycentric interpolant per Tucker column of every sample
    mode (stored as that mode's node-value matrix).
    """

    manifold: object
    plan: SamplingPlan
    variant: str
    point: np.ndarray
    basis: object = field(repr=False)
    core: np.ndarray = field(repr=False)
    component: np.ndarray = field(repr=False)
    factor_values: tuple = field(repr=False)  # per mode: (count_k, rank_k) node values

    @property
    def ndim(self):
        return self.plan.ndim

    def _check_domain(self, x):
        x = np.asarray(x, dtype=float)
        if x.shape != (self.ndim,):
            raise ValueError(f"expected a point of dimension {self.ndim}, got shape {x.shape}")
        for value, (lo, hi) in zip(x, self.plan.domain):
            pad = 1e-12 * max(1.0, abs(lo), abs(hi))
            if not lo - pad <= value <= hi + pad:
                raise ValueError(f"evaluation point {x} outside the domain {self.plan.domain}")
        return x

    @cached_property
    def _node_data(self):
        grid = make_grid(self.plan.counts)
        return tuple((nodes, barycentric_weights(len(nodes))) for nodes in grid.nodes)

    def pullback_coords(self, x):
        """Coefficients of the approximated tangent map at x."""
        x = self._check_domain(x)
        t = self.plan.to_unit(x)
        out = self.core
        for axis, values in enumerate(self.factor_values):
            nodes, weights = self._node_data[axis]
            row = cardinal_row(nodes, weights, t[axis]) @ values
            out = np.tensordot(row, out, axes=(0, 0))
        return out @ self.component

    def tangent(self, x):
        return self.basis.vector(self.pullback_coords(x))

    def __call__(self, x):
        method = _retraction_method(self.variant)
        return self.manifold.retract(self.point, self.tangent(x), method)

    def scheme_norm_bound(self):
        """Product of per-mode Lebesgue bounds: max-norm of the linear scheme."""
        out = 1.0
        for c in self.plan.counts:
            out *= lebesgue_bound(c - 1)
        return out


def build(f, manifold, plan, ranks=None, tol=None, variant="explog"):
    """Run the full pipeline and return (approximant, diagnostics).

    With neither ``ranks`` nor ``tol`` the Tucker step keeps full ranks and
    the approximant interpolates f exactly at the grid nodes.
    """
    t0 = time.perf_counter()
    point = choose_base_point(f, manifold, plan)
    t1 = time.perf_counter()
    basis = manifold.tangent_basis(point)
    samples = sample_tensor(f, manifold, point, basis, plan, variant)
    t2 = time.perf_counter()
    model = tucker.sthosvd(samples, ranks=ranks, tol=tol)
    t3 = time.perf_counter()
    residual = float(np.linalg.norm(samples - tucker.reconstruct(model)))
    # contiguous copies pin the evaluation's summation order, so a serialized
    # and reloaded approximant reproduces evaluations bit for bit
    approximant = ManifoldApproximant(
        manifold=manifold,
        plan=plan,
        variant=variant,
        point=np.ascontiguousarray(point, dtype=float),
        basis=basis,
        core=np.ascontiguousarray(model.core),
        component=np.ascontiguousarray(model.component),
        factor_values=tuple(np.ascontiguousarray(v) for v in model.factors),
    )
    diagnostics = BuildDiagnostics(
        base_point_seconds=t1 - t0,
        sampling_seconds=t2 - t1,
        compression_seconds=t3 - t2,
        ranks=model.ranks,
        discarded_energy=residual,
    )
    return approximant, diagnostics


@dataclass(frozen=True)
class ErrorReport:
    """Measured errors over a validation draw plus the matching certificate."""

    tangent_error: float      # max |g - g_hat| in the tangent space
    chart_radius: float       # max of |g| and |g_hat| over the draw
    manifold_error: float     # max geodesic distance between f and the approximant
    bound: float
    curvature_bound: float
    retraction_gap: float = 0.0
    chart_failures: int = 0


def validate(f, approximant, validation_count, seed, curvature=None,
             retraction_error=None, pullback_error=0.0):
    """Measure errors on seeded uniform draws and certify them.

    ``curvature`` overrides the curvature lower bound (otherwise it is taken
    from the manifold over a chart of the measured radius).  For retraction
    variants the retraction-vs-exponential gap is measured on the draw when
    not supplied, and the scheme norm is the product of Lebesgue bounds.
    """
    manifold = approximant.manifold
    plan = approximant.plan
    point = approximant.point
    rng = np.random.default_rng(seed)
    draws = plan.uniform_points(rng, int(validation_count))

    method = _retraction_method(approximant.variant)

    def examine(x):
        try:
            value = f(x)
            reference = manifold.log(point, value)
            approx_tangent = approximant.basis.vector(approximant.pullback_coords(x))
            gap = manifold.norm(point, reference - approx_tangent)
            radius = max(manifold.norm(point, reference), manifold.norm(point, approx_tangent))
            pushed = manifold.retract(point, approx_tangent, method)
            dist = manifold.distance(value, pushed)
            retraction_gap = 0.0
            if approximant.variant != "explog":
                retraction_gap = manifold.distance(pushed, manifold.exp(point, approx_tangent))
            return (gap, radius, dist, retraction_gap)
        except ChartViolation:
            return None

    results = pool_map(examine, list(draws))
    kept = [r for r in results if r is not None]
    failures = len(results) - len(kept)
    if not kept:
        raise ChartViolation("every validation point violated the chart")

    tangent_error = max(r[0] for r in kept)
    chart_radius = max(r[1] for r in kept)
    manifold_error = max(r[2] for r in kept)
    measured_gap = max(r[3] for r in kept)

    if curvature is None:
        curvature = manifold.curvature_lower_bound(chart_radius, point)

    if approximant.variant == "explog":
        bound = bounds_mod.forward_error_bound(tangent_error, chart_radius, curvature)
        gap = 0.0
    else:
        gap = measured_gap if retraction_error is None else float(retraction_error)
        bound = bounds_mod.retraction_error_bound(
            tangent_error, chart_radius, curvature,
            retraction_error=gap, pullback_error=float(pullback_error),
            scheme_norm=approximant.scheme_norm_bound(),
        )

    return ErrorReport(
        tangent_error=tangent_error,
        chart_radius=chart_radius,
        manifold_error=manifold_error,
        bound=bound,
        curvature_bound=float(curvature),
        retraction_gap=gap,
        chart_failures=failures,
    )


# -- serialization -----------------------------------------------------------


def _array_payload(a):
    a = np.asarray(a, dtype=float)
    return {"shape": list(a.shape), "data": a.ravel().tolist()}


def _array_from_payload(payload):
    return np.array(payload["data"], dtype=float).reshape(payload["shape"])


def approximant_to_payload(approximant):
    return {
        "format": FORMAT_NAME,
        "version": FORMAT_VERSION,
        "manifold": manifold_spec(approximant.manifold),
        "variant": approximant.variant,
        "plan": {
            "domain": [list(pair) for pair in approximant.plan.domain],
            "counts": list(approximant.plan.counts),
            "karcher_sample_count": approximant.plan.karcher_sample_count,
            "rng_seed": approximant.plan.rng_seed,
        },
        "base_point": _array_payload(approximant.point),
        "basis": {name: _array_payload(arr) for name, arr in approximant.basis.payload().items()},
        "core": _array_payload(approximant.core),
        "component": _array_payload(approximant.component),
        "factor_values": [_array_payload(v) for v in approximant.factor_values],
    }


def approximant_from_payload(payload):
    if payload.get("format") != FORMAT_NAME:
        raise ValueError("not a serialized approximant")
    if payload.get("version") != FORMAT_VERSION:
        raise ValueError(f"unsupported format version {payload.get('version')!r}")
    manifold = manifold_from_spec(payload["manifold"])
    plan = SamplingPlan(
        domain=tuple(tuple(pair) for pair in payload["plan"]["domain"]),
        counts=tuple(payload["plan"]["counts"]),
        karcher_sample_count=payload["plan"]["karcher_sample_count"],
        rng_seed=payload["plan"]["rng_seed"],
    )
    point = _array_from_payload(payload["base_point"])
    basis_arrays = {name: _array_from_payload(p) for name, p in payload["basis"].items()}
    basis = manifold.basis_from_payload(point, basis_arrays)
    return ManifoldApproximant(
        manifold=manifold,
        plan=plan,
        variant=payload["variant"],
        point=point,
        basis=basis,
        core=_array_from_payload(payload["core"]),
        component=_array_from_payload(payload["component"]),
        factor_values=tuple(_array_from_payload(p) for p in payload["factor_values"]),
    )


def save_approximant(approximant, path):
    """Write the approximant as JSON; floats round-trip exactly."""
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        json.dump(approximant_to_payload(approximant), handle)
        handle.write("\n")


def load_approximant(path):
    with open(path, "r", encoding="utf-8") as handle:
        return approximant_from_payload(json.load(handle))
