"""Exception types shared across the package."""


class ParameterDomainError(ValueError):
    """A model parameter lies outside its mathematical domain."""


class InfeasibleParametersError(ValueError):
    """No solution exists for the requested parameter combination."""


class OutOfBoundsError(ValueError):
    """A point falls outside the region a data structure covers."""


class InsufficientDataError(ValueError):
    """Not enough data to run an estimator."""
