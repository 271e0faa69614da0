"""Rank-1 matrices lam * x1 x2^T as a metric cone over a product of spheres.

A point is stored flat as (lam, x1, x2) with lam > 0 and unit factors; the
immersion metric is d lam^2 + lam^2 (|dx1|^2 + |dx2|^2).  Geodesics unroll to
straight lines in the plane spanned by the radial direction and the base
geodesic, exactly as for planar polar coordinates, which gives closed-form
exp/log and distance.  The sectional curvature lies in [-1/lam^2, 0].
"""

from __future__ import annotations

import numpy as np

from .base import Manifold, TangentBasis, guard_chart, sphere_complement
from ..errors import ChartViolation


def _split(manifold, array):
    n1 = manifold.n1
    return float(array[0]), array[1 : 1 + n1], array[1 + n1 :]


def _sphere_angle(x, y):
    c = float(np.clip(np.dot(x, y), -1.0, 1.0))
    return float(np.arctan2(np.linalg.norm((y - x) + (1.0 - c) * x), c))


class SegreBasis(TangentBasis):
    """Radial direction, then the two factor-sphere bases scaled by 1/lam."""

    def __init__(self, manifold, point, frame1, frame2):
        super().__init__(manifold, point)
        self.frame1 = frame1  # (n1, n1-1) orthonormal, _|_ x1
        self.frame2 = frame2
        self.lam = float(point[0])

    def coords(self, vector):
        v = np.asarray(vector, dtype=float)
        dlam, u1, u2 = _split(self.manifold, v)
        return np.concatenate(([dlam], self.lam * (self.frame1.T @ u1),
                               self.lam * (self.frame2.T @ u2)))

    def vector(self, coords):
        c = np.asarray(coords, dtype=float)
        n1 = self.manifold.n1
        u1 = self.frame1 @ c[1:n1] / self.lam
        u2 = self.frame2 @ c[n1:] / self.lam
        return np.concatenate(([c[0]], u1, u2))

    def payload(self):
        return {"frame1": self.frame1, "frame2": self.frame2}


class Segre(Manifold):
    kind = "segre"

    def __init__(self, n1, n2):
        if n1 < 2 or n2 < 2:
            raise ValueError("factor dimensions must be >= 2")
        self.n1 = int(n1)
        self.n2 = int(n2)

    @property
    def ambient_dim(self):
        return 1 + self.n1 + self.n2

    @property
    def intrinsic_dim(self):
        return self.n1 + self.n2 - 1

    def membership_residual(self, point):
        if point.shape != (1 + self.n1 + self.n2,):
            return np.inf
        lam, x1, x2 = _split(self, point)
        if lam <= 0.0:
            return np.inf
        return max(abs(np.linalg.norm(x1) - 1.0), abs(np.linalg.norm(x2) - 1.0))

    def tangency_residual(self, point, vector):
        if vector.shape != (1 + self.n1 + self.n2,):
            return np.inf
        _, x1, x2 = _split(self, point)
        _, u1, u2 = _split(self, vector)
        return max(abs(float(np.dot(x1, u1))), abs(float(np.dot(x2, u2))))

    def inner(self, point, u, v):
        self.check_tangent(point, u)
        self.check_tangent(point, v)
        lam = float(point[0])
        du, u1, u2 = _split(self, np.asarray(u, dtype=float))
        dv, v1, v2 = _split(self, np.asarray(v, dtype=float))
        return du * dv + lam * lam * (float(np.dot(u1, v1)) + float(np.dot(u2, v2)))

    def immersed(self, point):
        """The rank-1 matrix this point represents."""
        lam, x1, x2 = _split(self, np.asarray(point, dtype=float))
        return lam * np.outer(x1, x2)

    @staticmethod
    def _move_on_sphere(x, u, arc):
        """Walk ``arc`` radians from x along the unit direction u."""
        speed = float(np.linalg.norm(u))
        if speed == 0.0 or arc == 0.0:
            return x.copy()
        step = arc * speed
        out = np.cos(step) * x + np.sin(step) * u / speed
        return out / np.linalg.norm(out)

    def exp(self, point, vector):
        self.check_tangent(point, vector)
        point = np.asarray(point, dtype=float)
        vector = np.asarray(vector, dtype=float)
        lam, x1, x2 = _split(self, point)
        dlam, u1, u2 = _split(self, vector)
        base_speed = float(np.hypot(np.linalg.norm(u1), np.linalg.norm(u2)))
        if base_speed == 0.0:
            new_lam = lam + dlam
            guard_chart(new_lam > 0.0, "radial geodesic reached the cone apex (lam <= 0)")
            return np.concatenate(([new_lam], x1, x2))
        # unroll: start at (lam, 0) in the plane, velocity (dlam, lam*base_speed)
        new_lam = float(np.hypot(lam + dlam, lam * base_speed))
        arc = float(np.arctan2(lam * base_speed, lam + dlam))
        y1 = self._move_on_sphere(x1, u1, arc / base_speed)
        y2 = self._move_on_sphere(x2, u2, arc / base_speed)
        return np.concatenate(([new_lam], y1, y2))

    def log(self, point, other):
        self.check_point(point)
        self.check_point(other)
        point = np.asarray(point, dtype=float)
        other = np.asarray(other, dtype=float)
        lam, x1, x2 = _split(self, point)
        mu, y1, y2 = _split(self, other)
        a1 = _sphere_angle(x1, y1)
        a2 = _sphere_angle(x2, y2)
        arc = float(np.hypot(a1, a2))
        guard_chart(arc < np.pi, "base points past the cut locus of the sphere product")
        if arc == 0.0:
            return np.concatenate(([mu - lam], np.zeros(self.n1), np.zeros(self.n2)))
        dlam = mu * np.cos(arc) - lam
        base_speed = mu * np.sin(arc) / lam
        u1 = self._sphere_direction(x1, y1, a1) * (base_speed * a1 / arc)
        u2 = self._sphere_direction(x2, y2, a2) * (base_speed * a2 / arc)
        return np.concatenate(([dlam], u1, u2))

    @staticmethod
    def _sphere_direction(x, y, angle):
        if angle == 0.0:
            return np.zeros_like(x)
        u = y - np.cos(angle) * x
        return u / np.linalg.norm(u)

    def distance(self, point, other):
        self.check_point(point)
        self.check_point(other)
        if self.same_representation(point, other):
            return 0.0
        lam = float(point[0])
        mu = float(other[0])
        _, x1, x2 = _split(self, np.asarray(point, dtype=float))
        _, y1, y2 = _split(self, np.asarray(other, dtype=float))
        arc = min(float(np.hypot(_sphere_angle(x1, y1), _sphere_angle(x2, y2))), np.pi)
        # planar law of cosines, written to stay exact for the radial case
        return float(np.sqrt(max((lam - mu) ** 2 + 4.0 * lam * mu * np.sin(arc / 2.0) ** 2, 0.0)))

    def curvature_lower_bound(self, chart_radius, point):
        """-1 / lam_min^2 with lam_min the smallest cone radius reachable
        within the chart; unbounded (error) if the apex is reachable."""
        lam = float(point[0])
        if chart_radius < 0.0:
            raise ValueError("chart radius must be nonnegative")
        if lam - chart_radius <= 0.0:
            raise ChartViolation(
                f"chart of radius {chart_radius:.3e} around lam={lam:.3e} reaches the cone "
                "apex; sectional curvature is unbounded below"
            )
        return -1.0 / (lam - chart_radius) ** 2

    def tangent_basis(self, point):
        self.check_point(point)
        point = np.asarray(point, dtype=float)
        _, x1, x2 = _split(self, point)
        return SegreBasis(self, point, sphere_complement(x1), sphere_complement(x2))

    def basis_from_payload(self, point, payload):
        return SegreBasis(self, point, np.asarray(payload["frame1"], dtype=float),
                          np.asarray(payload["frame2"], dtype=float))

    def random_point(self, rng):
        x1 = rng.standard_normal(self.n1)
        x2 = rng.standard_normal(self.n2)
        return np.concatenate(([rng.uniform(0.5, 2.0)], x1 / np.linalg.norm(x1),
                               x2 / np.linalg.norm(x2)))

    def injectivity_surrogate(self, point):
        return float(point[0])

    def __repr__(self):
        return f"Segre({self.n1}, {self.n2})"
