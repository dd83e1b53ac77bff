"""Exception types shared across the package."""


class NotPositiveDefinite(ValueError):
    """A Cholesky factorization hit a nonpositive pivot."""


class ConvergenceFailure(RuntimeError):
    """An iterative numerical routine failed to converge."""


class DimensionMismatch(ValueError):
    """Operands have inconsistent shapes."""


class InvalidParams(ValueError):
    """A parameter value violates its documented range."""


class InvalidProblem(ValueError):
    """An optimization problem definition is malformed."""


class TooManyMeasurements(ValueError):
    """Guard against enumerating 2^m selections for large m."""


class ConfigError(ValueError):
    """A run configuration file or override is invalid."""
