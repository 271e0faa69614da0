"""Tour of the closed-form certificates.

Everything here is scalar arithmetic: the forward-error bound from a
curvature lower bound, its tightness on the hyperbolic plane, condition
numbers of the push-forward, and the model-space law of cosines.
"""

import math

import numpy as np

from manifold_approx import (
    Hyperbolic,
    condition_number_bounds,
    forward_error_bound,
    model_triangle_side,
    tight_distance,
)

print("== forward-error bounds for tangent error 0.1 on a radius-1 chart ==")
for curvature in (1.0, 0.0, -0.1, -1.0, -4.0):
    exact = forward_error_bound(0.1, 1.0, curvature)
    print(f"  curvature >= {curvature:5.1f}:  distance <= {exact:.6f}")
print("  (simplified form, curvature -1):",
      f"{forward_error_bound(0.1, 1.0, -1.0, form='simplified'):.6f}")

print("\n== the negative-curvature bound is attained on the hyperbolic plane ==")
h = Hyperbolic(2)
p = np.array([1.0, 0.0, 0.0])
basis = h.tangent_basis(p)
half = math.asin(0.05)  # two unit tangents exactly 0.1 apart
u = basis.vector(np.array([math.cos(half), math.sin(half)]))
v = basis.vector(np.array([math.cos(half), -math.sin(half)]))
measured = h.distance(h.exp(p, u), h.exp(p, v))
print(f"  measured geodesic distance : {measured:.12f}")
print(f"  tight-distance prediction  : {tight_distance(0.1, 1.0, -1.0):.12f}")
print(f"  general upper bound        : {forward_error_bound(0.1, 1.0, -1.0):.12f}")

print("\n== conditioning of the push-forward ==")
for radius, curvature in ((1.0, -1.0), (3.0, -1.0), (10.0, -10.0)):
    out = condition_number_bounds(radius, curvature)
    print(f"  radius {radius:5.1f}, curvature {curvature:6.1f}: "
          f"kappa <= {out.upper:.3e}")
print("  rule of thumb: keep radius <= 1/sqrt(|curvature|) for kappa <= 2.18")

print("\n== law of cosines on the three model geometries ==")
a, b, gamma = 1.0, 1.2, math.pi / 3
for curvature in (1.0, 0.0, -1.0):
    side = model_triangle_side(a, b, gamma, curvature)
    print(f"  curvature {curvature:5.1f}: opposite side = {side:.6f}")
