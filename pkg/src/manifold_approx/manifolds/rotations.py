"""Special orthogonal group SO(n) with the bi-invariant (Frobenius) metric.

Geodesics through Q are Q expm(t W) for skew W; this is both the Riemannian
and the Lie-group exponential, and the sectional curvature is nonnegative.
"""

from __future__ import annotations

import numpy as np

from .. import matfun
from .base import Manifold, TangentBasis, guard_chart, skew_pair_indices
from ..errors import ChartViolation, UnsupportedRetraction

_SQRT2 = np.sqrt(2.0)


class RotationsBasis(TangentBasis):
    """Basis Q (E_ij - E_ji)/sqrt(2) over strict upper-triangle pairs."""

    def __init__(self, manifold, point):
        super().__init__(manifold, point)
        self.pairs = skew_pair_indices(manifold.n)

    def coords(self, vector):
        omega = self.point.T @ np.asarray(vector, dtype=float)
        return np.array([_SQRT2 * omega[i, j] for i, j in self.pairs])

    def vector(self, coords):
        n = self.manifold.n
        omega = np.zeros((n, n))
        for c, (i, j) in zip(np.asarray(coords, dtype=float), self.pairs):
            omega[i, j] = c / _SQRT2
            omega[j, i] = -c / _SQRT2
        return self.point @ omega


class Rotations(Manifold):
    kind = "rotations"

    def __init__(self, n):
        if n < 2:
            raise ValueError("matrix size must be >= 2")
        self.n = int(n)

    @property
    def ambient_dim(self):
        return self.n * self.n

    @property
    def intrinsic_dim(self):
        return self.n * (self.n - 1) // 2

    def membership_residual(self, point):
        if point.shape != (self.n, self.n):
            return np.inf
        res = float(np.abs(point.T @ point - np.eye(self.n)).max())
        if np.linalg.det(point) < 0.0:
            return np.inf
        return res

    def tangency_residual(self, point, vector):
        if vector.shape != (self.n, self.n):
            return np.inf
        omega = point.T @ vector
        return float(np.abs(omega + omega.T).max())

    def inner(self, point, u, v):
        self.check_tangent(point, u)
        self.check_tangent(point, v)
        return float(np.tensordot(u, v))

    def exp(self, point, vector):
        self.check_tangent(point, vector)
        point = np.asarray(point, dtype=float)
        omega = point.T @ vector
        return point @ matfun.expm(0.5 * (omega - omega.T))

    def log(self, point, other):
        self.check_point(point)
        self.check_point(other)
        point = np.asarray(point, dtype=float)
        rel = point.T @ np.asarray(other, dtype=float)
        try:
            w = matfun.logm_rotation(rel)
        except ValueError as exc:
            raise ChartViolation(str(exc)) from exc
        return point @ w

    def distance(self, point, other):
        if self.same_representation(point, other):
            self.check_point(point)
            return 0.0
        return float(np.linalg.norm(self.log(point, other)))

    def curvature_lower_bound(self, chart_radius, point):
        return 0.0

    def retract(self, point, vector, method="exp"):
        if method == "exp":
            return self.exp(point, vector)
        if method == "qr":
            self.check_tangent(point, vector)
            return matfun.thin_qr(np.asarray(point, dtype=float) + vector)[0]
        raise UnsupportedRetraction(f"{self!r} does not implement the {method!r} retraction")

    def inverse_retract(self, point, other, method="exp"):
        if method == "exp":
            return self.log(point, other)
        if method == "qr":
            return self._inverse_qr(point, other)
        raise UnsupportedRetraction(f"{self!r} does not implement the {method!r} retraction")

    def _inverse_qr(self, point, other):
        """Solve qf(point + v) = other for the tangent v.

        Writing point + v = other @ r with r upper triangular forces
        a @ r + (a @ r)^T = 2 I with a = point^T other; the upper-triangle
        entries of r solve that dense linear system.
        """
        self.check_point(point)
        self.check_point(other)
        point = np.asarray(point, dtype=float)
        a = point.T @ np.asarray(other, dtype=float)
        n = self.n
        unknowns = [(k, l) for k in range(n) for l in range(k, n)]
        index = {kl: pos for pos, kl in enumerate(unknowns)}
        rows = []
        rhs = []
        for i in range(n):
            for j in range(i, n):
                row = np.zeros(len(unknowns))
                for k in range(j + 1):
                    row[index[(k, j)]] += a[i, k]
                for k in range(i + 1):
                    row[index[(k, i)]] += a[j, k]
                rows.append(row)
                rhs.append(2.0 if i == j else 0.0)
        sol = np.linalg.solve(np.array(rows), np.array(rhs))
        r = np.zeros((n, n))
        for (k, l), pos in index.items():
            r[k, l] = sol[pos]
        guard_chart(np.diag(r).min() > 0.0, "inverse QR retraction left the invertible region")
        return np.asarray(other, dtype=float) @ r - point

    def tangent_basis(self, point):
        self.check_point(point)
        return RotationsBasis(self, point)

    def basis_from_payload(self, point, payload):
        return RotationsBasis(self, point)

    def random_point(self, rng):
        q, _ = matfun.thin_qr(rng.standard_normal((self.n, self.n)))
        if np.linalg.det(q) < 0.0:
            q = q.copy()
            q[:, 0] = -q[:, 0]
        return q

    def injectivity_surrogate(self, point):
        return np.pi * _SQRT2

    def __repr__(self):
        return f"Rotations({self.n})"
