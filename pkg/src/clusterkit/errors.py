"""Exception types shared across the package.

Everything raised for a *domain* reason (as opposed to a programming error)
derives from ClusterError, so callers such as the CLI can map the whole
family to a single exit code.
"""


class ClusterError(Exception):
    """Base class for all domain errors."""


class NotDivisible(ClusterError):
    """An exact Laurent-polynomial quotient does not exist."""


class ZeroAtPole(ClusterError):
    """A variable with a negative exponent was evaluated at zero."""


class FrozenVertex(ClusterError):
    """Mutation was requested at a frozen vertex."""


class TooLarge(ClusterError):
    """An exhaustive computation exceeds its configured size bound."""


class UnsupportedRank(ClusterError):
    """A seed family was requested outside its supported rank range."""


class BadBipartition(ClusterError):
    """A supplied two-coloring is not proper for the diagram."""


class BadOrientation(ClusterError):
    """An edge-orientation list does not cover the diagram exactly."""


class BadIndex(ClusterError):
    """A minor was requested with invalid row or column indices."""


class IdentityFailed(ClusterError):
    """An exchange relation failed to hold as a polynomial identity.

    Carries the mutation path that produced the failure.
    """

    def __init__(self, message, path=()):
        super().__init__(message)
        self.path = tuple(path)


class ShapeMismatch(ClusterError):
    """Arrow matrices of a graded module have inconsistent shapes."""


class NotPolynomial(ClusterError):
    """Point counts failed to follow a single integer polynomial in q."""
