"""Symmetric positive definite matrices with the affine-invariant metric.

Geodesics are P^{1/2} expm(t P^{-1/2} V P^{-1/2}) P^{1/2}; the curvature is
nonpositive.  No tight lower curvature bound is published for this metric, so
the handle carries a configurable constant (default -1/2) that certificates
use unless overridden per call.
"""

from __future__ import annotations

import numpy as np

from ..matfun import sym_funm
from .base import Manifold, TangentBasis, symmetric_pair_indices

_SQRT2 = np.sqrt(2.0)

DEFAULT_CURVATURE_BOUND = -0.5


class SPDBasis(TangentBasis):
    """Basis P^{1/2} S_ab P^{1/2} over an orthonormal symmetric family S_ab."""

    def __init__(self, manifold, point, sqrt, invsqrt):
        super().__init__(manifold, point)
        self.sqrt = sqrt
        self.invsqrt = invsqrt
        self.pairs = symmetric_pair_indices(manifold.n)

    def coords(self, vector):
        s = self.invsqrt @ np.asarray(vector, dtype=float) @ self.invsqrt
        out = np.empty(len(self.pairs))
        for pos, (i, j) in enumerate(self.pairs):
            out[pos] = s[i, i] if i == j else _SQRT2 * s[i, j]
        return out

    def vector(self, coords):
        n = self.manifold.n
        s = np.zeros((n, n))
        for c, (i, j) in zip(np.asarray(coords, dtype=float), self.pairs):
            if i == j:
                s[i, i] = c
            else:
                s[i, j] = c / _SQRT2
                s[j, i] = c / _SQRT2
        return self.sqrt @ s @ self.sqrt

    def payload(self):
        return {"sqrt": self.sqrt, "invsqrt": self.invsqrt}


class SPD(Manifold):
    kind = "spd"

    def __init__(self, n, curvature_bound=DEFAULT_CURVATURE_BOUND):
        if n < 1:
            raise ValueError("matrix size must be >= 1")
        if curvature_bound > 0.0:
            raise ValueError("the affine-invariant metric has nonpositive curvature")
        self.n = int(n)
        self.curvature_bound = float(curvature_bound)

    @property
    def ambient_dim(self):
        return self.n * self.n

    @property
    def intrinsic_dim(self):
        return self.n * (self.n + 1) // 2

    def membership_residual(self, point):
        if point.shape != (self.n, self.n):
            return np.inf
        sym = float(np.abs(point - point.T).max())
        eigmin = float(np.linalg.eigvalsh(0.5 * (point + point.T)).min())
        return np.inf if eigmin <= 0.0 else sym

    def tangency_residual(self, point, vector):
        if vector.shape != (self.n, self.n):
            return np.inf
        return float(np.abs(vector - vector.T).max())

    def inner(self, point, u, v):
        self.check_tangent(point, u)
        self.check_tangent(point, v)
        pinv = np.linalg.inv(np.asarray(point, dtype=float))
        return float(np.trace(pinv @ u @ pinv @ v))

    def exp(self, point, vector):
        self.check_tangent(point, vector)
        sqrt = sym_funm(point, "sqrt")
        invsqrt = sym_funm(point, "invsqrt")
        inner = sym_funm(invsqrt @ vector @ invsqrt, "exp")
        return sqrt @ inner @ sqrt

    def log(self, point, other):
        self.check_point(point)
        self.check_point(other)
        sqrt = sym_funm(point, "sqrt")
        invsqrt = sym_funm(point, "invsqrt")
        rel = invsqrt @ np.asarray(other, dtype=float) @ invsqrt
        inner = sym_funm(0.5 * (rel + rel.T), "log")
        return sqrt @ inner @ sqrt

    def distance(self, point, other):
        self.check_point(point)
        self.check_point(other)
        if self.same_representation(point, other):
            return 0.0
        invsqrt = sym_funm(point, "invsqrt")
        rel = invsqrt @ np.asarray(other, dtype=float) @ invsqrt
        return float(np.linalg.norm(sym_funm(0.5 * (rel + rel.T), "log")))

    def curvature_lower_bound(self, chart_radius, point, override=None):
        return self.curvature_bound if override is None else float(override)

    def tangent_basis(self, point):
        self.check_point(point)
        return SPDBasis(self, point, sym_funm(point, "sqrt"), sym_funm(point, "invsqrt"))

    def basis_from_payload(self, point, payload):
        return SPDBasis(self, point, np.asarray(payload["sqrt"], dtype=float),
                        np.asarray(payload["invsqrt"], dtype=float))

    def random_point(self, rng):
        a = rng.standard_normal((self.n, self.n)) / np.sqrt(self.n)
        return sym_funm(0.5 * (a + a.T), "exp")

    def injectivity_surrogate(self, point):
        return 2.0

    def __repr__(self):
        return f"SPD({self.n})"
