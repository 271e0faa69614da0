"""Concrete Riemannian geometries behind a uniform interface."""

from .base import Manifold, TangentBasis
from .euclidean import Euclidean
from .sphere import Sphere
from .hyperbolic import Hyperbolic
from .rotations import Rotations
from .grassmann import Grassmannian
from .spd import SPD
from .segre import Segre
from .karcher import karcher_mean_estimate

__all__ = [
    "Manifold",
    "TangentBasis",
    "Euclidean",
    "Sphere",
    "Hyperbolic",
    "Rotations",
    "Grassmannian",
    "SPD",
    "Segre",
    "karcher_mean_estimate",
    "manifold_from_spec",
    "manifold_spec",
]

_KINDS = {
    "euclidean": lambda spec: Euclidean(spec["n"]),
    "sphere": lambda spec: Sphere(spec["n"]),
    "hyperbolic": lambda spec: Hyperbolic(spec["n"]),
    "rotations": lambda spec: Rotations(spec["n"]),
    "grassmannian": lambda spec: Grassmannian(spec["n"], spec["k"]),
    "spd": lambda spec: SPD(spec["n"], spec.get("curvature_bound", -0.5)),
    "segre": lambda spec: Segre(spec["n1"], spec["n2"]),
}


def manifold_spec(manifold):
    """Plain-dict description of a manifold, for manifests and serialization."""
    spec = {"kind": manifold.kind}
    if isinstance(manifold, Grassmannian):
        spec.update(n=manifold.n, k=manifold.k)
    elif isinstance(manifold, Segre):
        spec.update(n1=manifold.n1, n2=manifold.n2)
    elif isinstance(manifold, SPD):
        spec.update(n=manifold.n, curvature_bound=manifold.curvature_bound)
    else:
        spec.update(n=manifold.n)
    return spec


def manifold_from_spec(spec):
    try:
        return _KINDS[spec["kind"]](spec)
    except KeyError as exc:
        raise ValueError(f"unknown manifold kind {spec.get('kind')!r}") from exc
