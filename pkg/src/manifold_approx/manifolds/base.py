"""Common interface for the concrete geometries.

Points and tangent vectors are plain numpy arrays; the manifold object holds
the metric and the maps between them.  All operations are pure functions of
their inputs, so manifolds, points, and bases can be shared freely between
threads.
"""

from __future__ import annotations

import numpy as np

from ..errors import ChartViolation, MembershipError, TangencyError, UnsupportedRetraction

MEMBERSHIP_TOL = 1e-10
TANGENCY_TOL = 1e-10


class Manifold:
    """Base class: a named Riemannian geometry with exp/log/distance/inner."""

    #: short identifier used in serialization payloads and CSV manifests
    kind = "abstract"

    @property
    def ambient_dim(self):
        raise NotImplementedError

    @property
    def intrinsic_dim(self):
        raise NotImplementedError

    # -- membership ---------------------------------------------------------

    def membership_residual(self, point):
        raise NotImplementedError

    def tangency_residual(self, point, vector):
        raise NotImplementedError

    def check_point(self, point, tol=MEMBERSHIP_TOL):
        res = self.membership_residual(np.asarray(point, dtype=float))
        if not res <= tol:
            raise MembershipError(f"point off {self!r} (residual {res:.3e} > {tol:.1e})")

    def check_tangent(self, point, vector, tol=TANGENCY_TOL):
        self.check_point(point, tol)
        res = self.tangency_residual(np.asarray(point, dtype=float), np.asarray(vector, dtype=float))
        if not res <= tol:
            raise TangencyError(f"vector not tangent on {self!r} (residual {res:.3e} > {tol:.1e})")

    # -- metric and maps -----------------------------------------------------

    def inner(self, point, u, v):
        raise NotImplementedError

    def norm(self, point, vector):
        return float(np.sqrt(max(self.inner(point, vector, vector), 0.0)))

    def exp(self, point, vector):
        raise NotImplementedError

    def log(self, point, other):
        raise NotImplementedError

    @staticmethod
    def same_representation(point, other):
        """Bitwise-equal inputs short-circuit distance to an exact zero."""
        return point is other or np.array_equal(point, other)

    def distance(self, point, other):
        raise NotImplementedError

    def curvature_lower_bound(self, chart_radius, point):
        """A constant below every sectional curvature on the ball of the
        given radius around ``point``."""
        raise NotImplementedError

    # -- retractions ---------------------------------------------------------

    def retract(self, point, vector, method="exp"):
        if method == "exp":
            return self.exp(point, vector)
        raise UnsupportedRetraction(f"{self!r} does not implement the {method!r} retraction")

    def inverse_retract(self, point, other, method="exp"):
        if method == "exp":
            return self.log(point, other)
        raise UnsupportedRetraction(f"{self!r} does not implement the {method!r} retraction")

    # -- coordinates ---------------------------------------------------------

    def tangent_basis(self, point):
        """Deterministic orthonormal basis of the tangent space at ``point``."""
        raise NotImplementedError

    def basis_from_payload(self, point, payload):
        """Rebuild a previously serialized tangent basis."""
        raise NotImplementedError

    # -- sampling helpers (tests and demos) -----------------------------------

    def random_point(self, rng):
        raise NotImplementedError

    def random_tangent(self, rng, point, max_norm):
        """Random tangent with norm uniform in (0, max_norm]."""
        basis = self.tangent_basis(point)
        direction = rng.standard_normal(self.intrinsic_dim)
        direction /= np.linalg.norm(direction)
        return basis.vector(direction * max_norm * rng.uniform(0.1, 1.0))

    def injectivity_surrogate(self, point):
        """Safe chart-radius scale used when drawing random tangents."""
        raise NotImplementedError

    def __repr__(self):
        return f"{type(self).__name__}()"


class TangentBasis:
    """Orthonormal tangent basis: maps tangent arrays to coefficient vectors.

    Subclasses provide closed-form ``coords``/``vector`` pairs; ``vectors``
    materializes the basis for property tests.
    """

    def __init__(self, manifold, point):
        self.manifold = manifold
        self.point = np.asarray(point, dtype=float)

    @property
    def dim(self):
        return self.manifold.intrinsic_dim

    def coords(self, vector):
        raise NotImplementedError

    def vector(self, coords):
        raise NotImplementedError

    def vectors(self):
        eye = np.eye(self.dim)
        return [self.vector(eye[j]) for j in range(self.dim)]

    def payload(self):
        """Arrays defining this basis, for serialization."""
        return {}


def symmetric_pair_indices(n):
    """Diagonal pairs first, then strict upper-triangle pairs, row-major."""
    return [(i, i) for i in range(n)] + [(i, j) for i in range(n) for j in range(i + 1, n)]


def skew_pair_indices(n):
    """Strict upper-triangle pairs, row-major."""
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def sphere_complement(x):
    """Orthonormal basis of the hyperplane orthogonal to the unit vector x.

    Built from a Householder reflection carrying e_k (k = argmax |x|) to x,
    which is deterministic and well conditioned for every unit x.
    """
    x = np.asarray(x, dtype=float)
    n = x.size
    k = int(np.argmax(np.abs(x)))
    sign = 1.0 if x[k] >= 0.0 else -1.0
    w = x.copy()
    w[k] += sign
    h = np.eye(n) - 2.0 * np.outer(w, w) / (w @ w)
    # column k of h is -sign * x; the remaining columns span its complement
    return np.delete(h, k, axis=1)


def guard_chart(condition, message):
    if not condition:
        raise ChartViolation(message)
