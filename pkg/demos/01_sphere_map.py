"""Approximate a map into the 2-sphere and watch the error fall with the grid.

The target sends (x, y) in [-1, 1]^2 through (x^2 - y^2, 2xy) and then
inverse-stereographically onto the sphere.  We pull it back to one tangent
space, interpolate there, push forward again, and compare against the truth
on a validation cloud.  Because the sphere's curvature is nonnegative, the
certificate is simply the measured tangent-space error.
"""

import numpy as np

from manifold_approx import SamplingPlan, Sphere, build, validate
from manifold_approx import save_approximant, load_approximant

sphere = Sphere(3)


def f(x):
    u = x[0] ** 2 - x[1] ** 2
    v = 2.0 * x[0] * x[1]
    r2 = u * u + v * v
    return np.array([2.0 * u, 2.0 * v, r2 - 1.0]) / (r2 + 1.0)


print("samples   tangent err   manifold err   certificate")
for count in (3, 4, 5, 6, 8):
    plan = SamplingPlan(domain=((-1.0, 1.0), (-1.0, 1.0)), counts=(count, count), rng_seed=0)
    approximant, _ = build(f, sphere, plan)
    report = validate(f, approximant, 500, seed=1)
    print(f"{count * count:7d}   {report.tangent_error:11.3e}   "
          f"{report.manifold_error:12.3e}   {report.bound:11.3e}")

# the approximant is a plain value: serialize it and keep using the copy
plan = SamplingPlan(domain=((-1.0, 1.0), (-1.0, 1.0)), counts=(6, 6), rng_seed=0)
approximant, diagnostics = build(f, sphere, plan)
save_approximant(approximant, "/tmp/sphere_map.json")
clone = load_approximant("/tmp/sphere_map.json")
x = np.array([0.3, -0.7])
print("\nserialized copy evaluates identically:",
      bool(np.array_equal(approximant(x), clone(x))))
print("sampling took %.3fs, compression %.3fs" %
      (diagnostics.sampling_seconds, diagnostics.compression_seconds))
