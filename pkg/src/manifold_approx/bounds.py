"""Closed-form forward-error and conditioning certificates.

All formulas are evaluated through scaled helpers (sinh(x)/x, arcsinh(x)/x,
sin(x)/x with short series below 1e-6) so the nearly-flat regime
|curvature| * radius^2 -> 0 is computed without cancellation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = [
    "forward_error_bound",
    "retraction_error_bound",
    "tight_distance",
    "ConditionBounds",
    "condition_number_bounds",
    "model_triangle_side",
]

_SERIES_CUTOFF = 1e-6


def _sinhc(x):
    """sinh(x)/x, accurate through x = 0."""
    if abs(x) < _SERIES_CUTOFF:
        x2 = x * x
        return 1.0 + x2 / 6.0 + x2 * x2 / 120.0 + x2 * x2 * x2 / 5040.0
    return math.sinh(x) / x


def _asinhc(x):
    """arcsinh(x)/x, accurate through x = 0."""
    if abs(x) < _SERIES_CUTOFF:
        x2 = x * x
        return 1.0 - x2 / 6.0 + 3.0 * x2 * x2 / 40.0 - 15.0 * x2 * x2 * x2 / 336.0
    return math.asinh(x) / x


def _sincr(x):
    """sin(x)/x, accurate through x = 0."""
    if abs(x) < _SERIES_CUTOFF:
        x2 = x * x
        return 1.0 - x2 / 6.0 + x2 * x2 / 120.0 - x2 * x2 * x2 / 5040.0
    return math.sin(x) / x


def _check_inputs(tangent_error, chart_radius):
    if tangent_error < 0.0:
        raise ValueError("tangent error must be nonnegative")
    if chart_radius < 0.0:
        raise ValueError("chart radius must be nonnegative")
    if chart_radius == 0.0 and tangent_error > 0.0:
        raise ValueError("chart radius 0 cannot hold a positive tangent error")
    if tangent_error > 2.0 * chart_radius * (1.0 + 1e-12):
        raise ValueError("tangent error exceeds the chart diameter 2*radius")


def _negative_curvature_term(tangent_error, chart_radius, curvature):
    """(2/sqrt(|H|)) arcsinh(err sinh(radius sqrt(|H|)) / (2 radius)), stably."""
    if tangent_error == 0.0:
        return 0.0
    root = math.sqrt(-curvature)
    x = chart_radius * root
    # err * sinhc(x) equals the arcsinh argument divided by (x/2); folding the
    # 2/root prefactor through arcsinh(z)/z leaves no small denominators.
    z = tangent_error * math.sinh(x) / (2.0 * chart_radius) if x >= _SERIES_CUTOFF else \
        0.5 * tangent_error * root * _sinhc(x)
    return tangent_error * _sinhc(x) * _asinhc(z)


def forward_error_bound(tangent_error, chart_radius, curvature, form="exact"):
    """Geodesic-distance bound from a tangent-space approximation error.

    For a curvature lower bound >= 0 the tangent error passes through
    unchanged.  For negative curvature the bound grows with the chart radius;
    ``form="simplified"`` uses the looser log-based expression (always >= the
    exact form).
    """
    _check_inputs(tangent_error, chart_radius)
    if form not in ("exact", "simplified"):
        raise ValueError(f"unknown form {form!r}")
    if curvature >= 0.0:
        return tangent_error
    if form == "simplified":
        if tangent_error == 0.0:
            return 0.0
        root = math.sqrt(-curvature)
        return tangent_error + (2.0 / root) * math.log1p(
            tangent_error * math.exp(chart_radius * root) / (2.0 * chart_radius)
        )
    return tangent_error + _negative_curvature_term(tangent_error, chart_radius, curvature)


def retraction_error_bound(tangent_error, chart_radius, curvature, retraction_error,
                           pullback_error, scheme_norm):
    """Forward-error bound when retractions replace the exponential/logarithm.

    ``retraction_error`` bounds the Riemannian gap between the retraction and
    the exponential, ``pullback_error`` the Euclidean gap between their
    inverses, and ``scheme_norm`` is the max-norm of the linear approximation
    scheme (>= 1).
    """
    _check_inputs(tangent_error, chart_radius)
    if retraction_error < 0.0 or pullback_error < 0.0:
        raise ValueError("retraction and pullback errors must be nonnegative")
    if scheme_norm < 1.0:
        raise ValueError("scheme norm must be >= 1")
    inflated = tangent_error + scheme_norm * pullback_error
    linear = inflated + retraction_error
    if curvature >= 0.0:
        return linear
    return linear + _negative_curvature_term(inflated, chart_radius, curvature)


def tight_distance(tangent_error, chart_radius, curvature):
    """Exact geodesic distance on a constant-curvature manifold (curvature < 0)
    when both pulled-back maps sit on the chart boundary."""
    _check_inputs(tangent_error, chart_radius)
    if curvature >= 0.0:
        raise ValueError("tight distance is defined for negative curvature only")
    return _negative_curvature_term(tangent_error, chart_radius, curvature)


@dataclass(frozen=True)
class ConditionBounds:
    lower: float
    upper: float
    model_manifold_lower: float


def condition_number_bounds(chart_radius, curvature):
    """Bounds on the condition number of pushing tangent data through exp.

    Nonnegative curvature pins the condition number at 1; negative curvature
    gives an upper bound 1 + sinh(x)/x with x = radius * sqrt(|curvature|),
    which is also a lower bound on constant-curvature model manifolds.
    """
    if chart_radius <= 0.0:
        raise ValueError("chart radius must be positive")
    if curvature >= 0.0:
        return ConditionBounds(lower=1.0, upper=1.0, model_manifold_lower=1.0)
    amplification = _sinhc(chart_radius * math.sqrt(-curvature))
    return ConditionBounds(lower=1.0, upper=1.0 + amplification,
                           model_manifold_lower=amplification)


def model_triangle_side(side_a, side_b, angle, curvature):
    """Third side of a geodesic hinge on the constant-curvature model manifold.

    ``side_a`` and ``side_b`` meet at the given angle; the law of cosines of
    the matching geometry (spherical, Euclidean, or hyperbolic) is solved in
    a half-angle form that stays accurate as the curvature tends to zero.
    """
    if side_a < 0.0 or side_b < 0.0:
        raise ValueError("side lengths must be nonnegative")
    half = math.sin(0.5 * angle) ** 2
    if curvature > 0.0:
        root = math.sqrt(curvature)
        if side_a * root > math.pi + 1e-12 or side_b * root > math.pi + 1e-12:
            raise ValueError("sides exceed the spherical model diameter pi/sqrt(H)")
        w2 = math.sin(0.5 * (side_a - side_b) * root) ** 2 \
            + math.sin(side_a * root) * math.sin(side_b * root) * half
        return (2.0 / root) * math.asin(math.sqrt(min(max(w2, 0.0), 1.0)))
    if curvature == 0.0:
        return math.sqrt((side_a - side_b) ** 2 + 4.0 * side_a * side_b * half)
    root = math.sqrt(-curvature)
    w2 = math.sinh(0.5 * (side_a - side_b) * root) ** 2 \
        + math.sinh(side_a * root) * math.sinh(side_b * root) * half
    w = math.sqrt(max(w2, 0.0))
    # same scaled-helper trick as the error bound: C = (2/root) asinh(w)
    scale = math.sqrt(
        (0.5 * (side_a - side_b)) ** 2 * _sinhc(0.5 * (side_a - side_b) * root) ** 2
        + side_a * side_b * _sinhc(side_a * root) * _sinhc(side_b * root) * half
    )
    return 2.0 * scale * _asinhc(w)
