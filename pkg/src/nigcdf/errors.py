"""Exception hierarchy shared by all modules."""


class NigError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(NigError, ValueError):
    """An input falls outside the mathematical domain of an operation."""


class ConvergenceError(NigError, RuntimeError):
    """A quadrature rule failed to stabilize within its node budget."""


class NearTransitionError(NigError):
    """The direct quadrature was asked to evaluate too close to nu = tau.

    The integrand's poles approach the contour there; the split oracle
    remains valid and should be used instead.
    """


class UnreliableRegionError(NigError):
    """An expansion was forced in a region where its coefficients blow up."""
