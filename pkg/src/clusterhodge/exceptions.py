"""Exception hierarchy shared by every module of the package."""


class ClusterHodgeError(ValueError):
    """Base class for all errors raised by :mod:`clusterhodge`."""


class InvalidIndexError(ClusterHodgeError):
    """A vertex index is out of range or refers to a frozen vertex."""


class MalformedMatrixError(ClusterHodgeError):
    """Matrix has the wrong shape or a non skew-symmetric principal part."""


class NotIsolatedError(ClusterHodgeError):
    """An operation requiring an edge-free mutable subgraph got something else."""


class NotLouiseError(ClusterHodgeError):
    """No separating edge exists at a node that still has mutable edges."""


class UnsupportedDimensionError(ClusterHodgeError):
    """Classification only covers varieties of dimension 2 and 3."""


class UnsupportedCaseError(ClusterHodgeError):
    """The variety lies in a case whose Hodge numbers are not known."""

    def __init__(self, reason):
        super().__init__(reason)
        self.reason = reason


class DomainError(ClusterHodgeError):
    """Parameters violate the sign or range conditions of a closed formula."""


class InconsistentRankError(ClusterHodgeError):
    """A restriction rank exceeds the dimension of its domain or codomain."""


class DualityUnavailableError(ClusterHodgeError):
    """E-polynomial via Poincare duality requested for a singular table."""


class InterpolationError(ClusterHodgeError):
    """Counting data does not come from an integer polynomial."""


class InsufficientSamplesError(InterpolationError):
    pass


class NonIntegralError(InterpolationError):
    pass


class HeldOutMismatchError(InterpolationError):
    pass
