"""Walk through the seven built-in geometries.

For each manifold: shoot a geodesic, pull the endpoint back, and check the
roundtrip; report the curvature lower bound a radius-0.5 chart would use;
and average a small cloud of points with the streaming Karcher estimate.
"""

import numpy as np

from manifold_approx import (
    SPD,
    Euclidean,
    Grassmannian,
    Hyperbolic,
    Rotations,
    Segre,
    Sphere,
    karcher_mean_estimate,
)

rng = np.random.default_rng(0)

for manifold in (Euclidean(4), Sphere(3), Hyperbolic(2), Rotations(3),
                 Grassmannian(6, 2), SPD(3), Segre(3, 4)):
    p = manifold.random_point(rng)
    v = manifold.random_tangent(rng, p, 0.4 * manifold.injectivity_surrogate(p))
    q = manifold.exp(p, v)
    roundtrip = manifold.norm(p, manifold.log(p, q) - v)
    isometry = abs(manifold.distance(p, q) - manifold.norm(p, v))
    curvature = manifold.curvature_lower_bound(0.5, p)

    cloud = [manifold.exp(p, manifold.random_tangent(rng, p, 0.2)) for _ in range(12)]
    mean = karcher_mean_estimate(manifold, cloud)
    spread = max(manifold.distance(mean, point) for point in cloud)

    print(f"{manifold!r:>20}: dim {manifold.intrinsic_dim:3d}  "
          f"roundtrip {roundtrip:.1e}  radial gap {isometry:.1e}  "
          f"curvature >= {curvature:7.3f}  karcher spread {spread:.3f}")

print("\ntangent bases are orthonormal in the Riemannian metric:")
spd = SPD(3)
p = spd.random_point(rng)
basis = spd.tangent_basis(p)
vectors = basis.vectors()
gram = np.array([[spd.inner(p, u, w) for w in vectors] for u in vectors])
print("  SPD(3) Gram deviation from identity:",
      f"{np.abs(gram - np.eye(len(vectors))).max():.2e}")
