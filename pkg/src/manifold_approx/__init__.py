"""Certified approximation of maps into Riemannian manifolds.

Pulls a map back through the manifold logarithm at a well-chosen base point,
approximates the resulting tangent-space map with tensorized Chebyshev
interpolation compressed by ST-HOSVD, pushes forward through the exponential
map (or a retraction), and certifies the geodesic forward error from a lower
bound on the sectional curvature.
"""

__version__ = "0.1.0"

from .errors import (
    ChartViolation,
    ManifoldError,
    MembershipError,
    TangencyError,
    UnsupportedRetraction,
)
from .manifolds import (
    SPD,
    Euclidean,
    Grassmannian,
    Hyperbolic,
    Rotations,
    Segre,
    Sphere,
    karcher_mean_estimate,
)
from .bounds import (
    condition_number_bounds,
    forward_error_bound,
    model_triangle_side,
    retraction_error_bound,
    tight_distance,
)
from .approximator import (
    ErrorReport,
    ManifoldApproximant,
    SamplingPlan,
    build,
    choose_base_point,
    load_approximant,
    sample_tensor,
    save_approximant,
    validate,
)

__all__ = [
    "__version__",
    "ManifoldError",
    "MembershipError",
    "TangencyError",
    "ChartViolation",
    "UnsupportedRetraction",
    "Euclidean",
    "Sphere",
    "Hyperbolic",
    "Rotations",
    "Grassmannian",
    "SPD",
    "Segre",
    "karcher_mean_estimate",
    "forward_error_bound",
    "retraction_error_bound",
    "tight_distance",
    "condition_number_bounds",
    "model_triangle_side",
    "SamplingPlan",
    "ManifoldApproximant",
    "ErrorReport",
    "build",
    "choose_base_point",
    "sample_tensor",
    "validate",
    "save_approximant",
    "load_approximant",
]
