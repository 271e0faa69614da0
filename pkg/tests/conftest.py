import numpy as np
import pytest

from manifold_approx import (
    SPD,
    Euclidean,
    Grassmannian,
    Hyperbolic,
    Rotations,
    Segre,
    Sphere,
)

#: representative instance of every geometry, used by the shared property suites
ALL_MANIFOLDS = [
    Euclidean(4),
    Sphere(3),
    Hyperbolic(2),
    Rotations(3),
    Grassmannian(4, 2),
    SPD(3),
    Segre(3, 4),
]

MANIFOLD_IDS = [repr(m) for m in ALL_MANIFOLDS]


@pytest.fixture(params=ALL_MANIFOLDS, ids=MANIFOLD_IDS)
def manifold(request):
    return request.param


def random_case(manifold, rng, scale=0.4):
    """A random (point, tangent) pair within the safe chart fraction."""
    p = manifold.random_point(rng)
    v = manifold.random_tangent(rng, p, scale * manifold.injectivity_surrogate(p))
    return p, v
