"""Grassmannian of k-planes in R^n, canonical metric, orthonormal representatives.

Points are n x k matrices with orthonormal columns; two representatives are
the same point when their principal angles vanish.  Geodesics follow the
compact-SVD closed forms; QR and polar retractions are available as cheaper
first-order alternatives.
"""

from __future__ import annotations

import numpy as np

from .. import matfun
from .base import Manifold, TangentBasis, guard_chart
from ..errors import UnsupportedRetraction

_CHART_TOL = 1e-8


class GrassmannBasis(TangentBasis):
    """Tangents are perp @ b for arbitrary (n-k) x k coefficient blocks."""

    def __init__(self, manifold, point, perp):
        super().__init__(manifold, point)
        self.perp = perp  # (n, n-k), orthonormal columns completing point

    def coords(self, vector):
        return (self.perp.T @ np.asarray(vector, dtype=float)).ravel()

    def vector(self, coords):
        block = np.asarray(coords, dtype=float).reshape(self.manifold.n - self.manifold.k,
                                                        self.manifold.k)
        return self.perp @ block

    def payload(self):
        return {"perp": self.perp}


class Grassmannian(Manifold):
    kind = "grassmannian"

    def __init__(self, n, k):
        if not 1 <= k < n:
            raise ValueError("need 1 <= k < n")
        self.n = int(n)
        self.k = int(k)

    @property
    def ambient_dim(self):
        return self.n * self.k

    @property
    def intrinsic_dim(self):
        return self.k * (self.n - self.k)

    def membership_residual(self, point):
        if point.shape != (self.n, self.k):
            return np.inf
        return float(np.abs(point.T @ point - np.eye(self.k)).max())

    def tangency_residual(self, point, vector):
        if vector.shape != (self.n, self.k):
            return np.inf
        return float(np.abs(point.T @ vector).max())

    def inner(self, point, u, v):
        self.check_tangent(point, u)
        self.check_tangent(point, v)
        return float(np.tensordot(u, v))

    def exp(self, point, vector):
        self.check_tangent(point, vector)
        point = np.asarray(point, dtype=float)
        w, s, vt = matfun.thin_svd(np.asarray(vector, dtype=float))
        out = (point @ vt.T) * np.cos(s) @ vt + (w * np.sin(s)) @ vt
        return matfun.thin_qr(out)[0]

    def log(self, point, other):
        self.check_point(point)
        self.check_point(other)
        point = np.asarray(point, dtype=float)
        other = np.asarray(other, dtype=float)
        overlap = point.T @ other
        smallest = np.linalg.svd(overlap, compute_uv=False).min()
        guard_chart(smallest > _CHART_TOL,
                    "principal angle at pi/2: point outside the logarithm's chart")
        residual = other - point @ overlap
        w, s, vt = matfun.thin_svd(residual @ np.linalg.inv(overlap))
        return (w * np.arctan(s)) @ vt

    def principal_angles(self, point, other):
        """Angles in ascending order, sine-based below pi/4 for full accuracy."""
        point = np.asarray(point, dtype=float)
        other = np.asarray(other, dtype=float)
        overlap = point.T @ other
        cosines = np.clip(np.linalg.svd(overlap, compute_uv=False), 0.0, 1.0)
        sines = np.clip(np.linalg.svd(other - point @ overlap, compute_uv=False), 0.0, 1.0)
        angles = np.arccos(cosines)
        small = sines[::-1] < np.sqrt(0.5)
        angles[small] = np.arcsin(sines[::-1][small])
        return angles

    def distance(self, point, other):
        self.check_point(point)
        self.check_point(other)
        if self.same_representation(point, other):
            return 0.0
        return float(np.linalg.norm(self.principal_angles(point, other)))

    def curvature_lower_bound(self, chart_radius, point):
        return 0.0

    def retract(self, point, vector, method="exp"):
        if method == "exp":
            return self.exp(point, vector)
        self.check_tangent(point, vector)
        point = np.asarray(point, dtype=float)
        shifted = point + vector
        if method == "qr":
            return matfun.thin_qr(shifted)[0]
        if method == "polar":
            return shifted @ matfun.sym_funm(np.eye(self.k) + vector.T @ vector, "invsqrt")
        raise UnsupportedRetraction(f"{self!r} does not implement the {method!r} retraction")

    def inverse_retract(self, point, other, method="exp"):
        """Both the QR and polar retractions invert to
        other @ (point^T other)^{-1} - point on their images."""
        if method == "exp":
            return self.log(point, other)
        if method not in ("qr", "polar"):
            raise UnsupportedRetraction(f"{self!r} does not implement the {method!r} retraction")
        self.check_point(point)
        self.check_point(other)
        point = np.asarray(point, dtype=float)
        other = np.asarray(other, dtype=float)
        overlap = point.T @ other
        guard_chart(np.linalg.svd(overlap, compute_uv=False).min() > _CHART_TOL,
                    "inverse retraction undefined: subspaces share no invertible overlap")
        return np.linalg.solve(overlap.T, other.T).T - point

    def tangent_basis(self, point):
        self.check_point(point)
        full, _ = np.linalg.qr(np.asarray(point, dtype=float), mode="complete")
        perp = np.ascontiguousarray(full[:, self.k:])
        return GrassmannBasis(self, point, perp)

    def basis_from_payload(self, point, payload):
        return GrassmannBasis(self, point, np.asarray(payload["perp"], dtype=float))

    def random_point(self, rng):
        return matfun.thin_qr(rng.standard_normal((self.n, self.k)))[0]

    def injectivity_surrogate(self, point):
        return np.pi / 2.0

    def __repr__(self):
        return f"Grassmannian({self.n}, {self.k})"
