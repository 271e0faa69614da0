"""Exception types shared across the library."""


class ManifoldError(Exception):
    """Base class for geometry-related failures."""


class MembershipError(ManifoldError):
    """A point does not satisfy the manifold's membership predicate."""


class TangencyError(ManifoldError):
    """A vector is not in the tangent space at the given base point."""


class ChartViolation(ManifoldError):
    """An operation left the normal-coordinate chart (cut locus, cone apex, ...)."""


class UnsupportedRetraction(ManifoldError):
    """The requested (manifold, retraction) pair is not implemented."""
