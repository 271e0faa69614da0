"""Flat space: the reference geometry every formula degenerates to."""

from __future__ import annotations

import numpy as np

from .base import Manifold, TangentBasis


class EuclideanBasis(TangentBasis):
    def coords(self, vector):
        return np.asarray(vector, dtype=float).copy()

    def vector(self, coords):
        return np.asarray(coords, dtype=float).copy()


class Euclidean(Manifold):
    kind = "euclidean"

    def __init__(self, n):
        if n < 1:
            raise ValueError("dimension must be >= 1")
        self.n = int(n)

    @property
    def ambient_dim(self):
        return self.n

    @property
    def intrinsic_dim(self):
        return self.n

    def membership_residual(self, point):
        return 0.0 if point.shape == (self.n,) and np.isfinite(point).all() else np.inf

    def tangency_residual(self, point, vector):
        return 0.0 if vector.shape == (self.n,) and np.isfinite(vector).all() else np.inf

    def inner(self, point, u, v):
        self.check_tangent(point, u)
        self.check_tangent(point, v)
        return float(np.dot(u, v))

    def exp(self, point, vector):
        self.check_tangent(point, vector)
        return np.asarray(point, dtype=float) + vector

    def log(self, point, other):
        self.check_point(point)
        self.check_point(other)
        return np.asarray(other, dtype=float) - point

    def distance(self, point, other):
        return float(np.linalg.norm(np.asarray(other, dtype=float) - point))

    def curvature_lower_bound(self, chart_radius, point):
        return 0.0

    def tangent_basis(self, point):
        self.check_point(point)
        return EuclideanBasis(self, point)

    def basis_from_payload(self, point, payload):
        return EuclideanBasis(self, point)

    def random_point(self, rng):
        return rng.standard_normal(self.n)

    def injectivity_surrogate(self, point):
        return 2.0

    def __repr__(self):
        return f"Euclidean({self.n})"
