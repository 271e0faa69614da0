"""Streaming estimate of the Riemannian center of mass.

Successive geodesic interpolation: fold each new point in by walking a
(N-1)/N fraction of the geodesic from it to the running estimate.  On flat
space this reproduces the arithmetic mean exactly; elsewhere it is an
order-dependent heuristic, so the input order is part of the contract.
"""

from __future__ import annotations


def karcher_mean_estimate(manifold, points):
    """Geodesic-interpolation estimate of the Karcher mean, in input order."""
    points = list(points)
    if not points:
        raise ValueError("at least one point is required")
    mean = points[0]
    for count, point in enumerate(points[1:], start=2):
        step = manifold.log(point, mean)
        mean = manifold.exp(point, step * ((count - 1) / count))
    return mean
