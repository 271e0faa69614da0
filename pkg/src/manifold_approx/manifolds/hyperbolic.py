"""Hyperbolic space in the hyperboloid model.

Points live on the upper sheet of <q, q> = -1 in R^{n+1}, where <., .> is the
Minkowski form with signature (-, +, ..., +).  Geodesics are closed forms in
cosh/sinh and the curvature is the constant -1.
"""

from __future__ import annotations

import numpy as np

from .base import Manifold, TangentBasis


def minkowski(u, v):
    return float(-u[0] * v[0] + np.dot(u[1:], v[1:]))


def _sinhc(x):
    return 1.0 + x * x / 6.0 + x**4 / 120.0 if abs(x) < 1e-6 else np.sinh(x) / x


class HyperbolicBasis(TangentBasis):
    def __init__(self, manifold, point, frame):
        super().__init__(manifold, point)
        self.frame = frame  # (n+1, n), Minkowski-orthonormal columns

    def coords(self, vector):
        v = np.asarray(vector, dtype=float)
        flipped = v.copy()
        flipped[0] = -flipped[0]
        return self.frame.T @ flipped

    def vector(self, coords):
        return self.frame @ np.asarray(coords, dtype=float)

    def payload(self):
        return {"frame": self.frame}


class Hyperbolic(Manifold):
    """n-dimensional hyperbolic space; points are vectors in R^{n+1}."""

    kind = "hyperbolic"

    def __init__(self, n):
        if n < 1:
            raise ValueError("dimension must be >= 1")
        self.n = int(n)

    @property
    def ambient_dim(self):
        return self.n + 1

    @property
    def intrinsic_dim(self):
        return self.n

    def membership_residual(self, point):
        if point.shape != (self.n + 1,):
            return np.inf
        if point[0] <= 0.0:
            return np.inf
        return abs(minkowski(point, point) + 1.0)

    def tangency_residual(self, point, vector):
        if vector.shape != (self.n + 1,):
            return np.inf
        return abs(minkowski(point, vector))

    def inner(self, point, u, v):
        self.check_tangent(point, u)
        self.check_tangent(point, v)
        return minkowski(np.asarray(u, dtype=float), np.asarray(v, dtype=float))

    def _normalize(self, q):
        return q / np.sqrt(-minkowski(q, q))

    def exp(self, point, vector):
        self.check_tangent(point, vector)
        point = np.asarray(point, dtype=float)
        vector = np.asarray(vector, dtype=float)
        t = self.norm(point, vector)
        if t == 0.0:
            return point.copy()
        return self._normalize(np.cosh(t) * point + _sinhc(t) * vector)

    @staticmethod
    def _separation(point, other):
        """Geodesic distance via 2 asinh(|other - point|_M / 2), which keeps
        full accuracy for nearby points (arccosh of the inner product loses
        half the digits there)."""
        diff = other - point
        gram = minkowski(diff, diff)
        return 2.0 * float(np.arcsinh(0.5 * np.sqrt(max(gram, 0.0))))

    def log(self, point, other):
        self.check_point(point)
        self.check_point(other)
        point = np.asarray(point, dtype=float)
        other = np.asarray(other, dtype=float)
        c = max(-minkowski(point, other), 1.0)
        d = self._separation(point, other)
        if d == 0.0:
            return np.zeros(self.n + 1)
        # u has Minkowski norm sinh(d), so dividing by sinh(d)/d rescales to d
        u = other - c * point
        return u / _sinhc(d)

    def distance(self, point, other):
        self.check_point(point)
        self.check_point(other)
        return self._separation(np.asarray(point, dtype=float), np.asarray(other, dtype=float))

    def curvature_lower_bound(self, chart_radius, point):
        return -1.0

    def tangent_basis(self, point):
        self.check_point(point)
        point = np.asarray(point, dtype=float)
        columns = []
        for i in range(self.n + 1):
            cand = np.zeros(self.n + 1)
            cand[i] = 1.0
            cand = cand + minkowski(point, cand) * point
            for b in columns:
                cand = cand - minkowski(b, cand) * b
            norm2 = minkowski(cand, cand)
            if norm2 > 1e-12:
                columns.append(cand / np.sqrt(norm2))
            if len(columns) == self.n:
                break
        return HyperbolicBasis(self, point, np.stack(columns, axis=1))

    def basis_from_payload(self, point, payload):
        return HyperbolicBasis(self, point, np.asarray(payload["frame"], dtype=float))

    def random_point(self, rng):
        x = rng.standard_normal(self.n)
        return np.concatenate(([np.sqrt(1.0 + x @ x)], x))

    def injectivity_surrogate(self, point):
        return 2.0

    def __repr__(self):
        return f"Hyperbolic({self.n})"
