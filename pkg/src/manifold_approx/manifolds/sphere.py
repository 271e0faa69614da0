"""Unit sphere in R^n with the round metric (great-circle geodesics)."""

from __future__ import annotations

import numpy as np

from .base import Manifold, TangentBasis, guard_chart, sphere_complement

_ANTIPODE_TOL = 1e-8


class SphereBasis(TangentBasis):
    def __init__(self, manifold, point, complement):
        super().__init__(manifold, point)
        self.complement = complement  # (n, n-1), orthonormal columns, all _|_ point

    def coords(self, vector):
        return self.complement.T @ np.asarray(vector, dtype=float)

    def vector(self, coords):
        return self.complement @ np.asarray(coords, dtype=float)

    def payload(self):
        return {"complement": self.complement}


class Sphere(Manifold):
    """Unit vectors in R^n; Sphere(3) is the ordinary 2-sphere."""

    kind = "sphere"

    def __init__(self, n):
        if n < 2:
            raise ValueError("ambient dimension must be >= 2")
        self.n = int(n)

    @property
    def ambient_dim(self):
        return self.n

    @property
    def intrinsic_dim(self):
        return self.n - 1

    def membership_residual(self, point):
        if point.shape != (self.n,):
            return np.inf
        return abs(float(np.linalg.norm(point)) - 1.0)

    def tangency_residual(self, point, vector):
        if vector.shape != (self.n,):
            return np.inf
        return abs(float(np.dot(point, vector)))

    def inner(self, point, u, v):
        self.check_tangent(point, u)
        self.check_tangent(point, v)
        return float(np.dot(u, v))

    def exp(self, point, vector):
        self.check_tangent(point, vector)
        point = np.asarray(point, dtype=float)
        t = float(np.linalg.norm(vector))
        if t == 0.0:
            return point.copy()
        out = np.cos(t) * point + (np.sin(t) / t) * vector
        return out / np.linalg.norm(out)

    def log(self, point, other):
        self.check_point(point)
        self.check_point(other)
        point = np.asarray(point, dtype=float)
        other = np.asarray(other, dtype=float)
        c = float(np.clip(np.dot(point, other), -1.0, 1.0))
        guard_chart(c > -1.0 + _ANTIPODE_TOL, "antipodal points have no unique geodesic")
        # (other - point) + (1-c) point and atan2 keep full relative accuracy
        # for small separations, where arccos of the clipped dot product and
        # the direct projection would both lose half the digits
        u = (other - point) + (1.0 - c) * point
        un = float(np.linalg.norm(u))
        if un == 0.0:
            return np.zeros(self.n)
        return (np.arctan2(un, c) / un) * u

    def distance(self, point, other):
        self.check_point(point)
        self.check_point(other)
        if self.same_representation(point, other):
            return 0.0
        point = np.asarray(point, dtype=float)
        other = np.asarray(other, dtype=float)
        c = float(np.clip(np.dot(point, other), -1.0, 1.0))
        u = (other - point) + (1.0 - c) * point
        return float(np.arctan2(np.linalg.norm(u), c))

    def curvature_lower_bound(self, chart_radius, point):
        # constant curvature +1, so 0 is a valid (and useful) lower bound
        return 0.0

    def tangent_basis(self, point):
        self.check_point(point)
        return SphereBasis(self, point, sphere_complement(point))

    def basis_from_payload(self, point, payload):
        return SphereBasis(self, point, np.asarray(payload["complement"], dtype=float))

    def random_point(self, rng):
        x = rng.standard_normal(self.n)
        return x / np.linalg.norm(x)

    def injectivity_surrogate(self, point):
        return np.pi

    def __repr__(self):
        return f"Sphere({self.n})"
