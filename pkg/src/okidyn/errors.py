"""Exception types shared across the package.

The CLI maps ``ConfigError`` subclasses to exit code 1 and
``NumericsError`` subclasses to exit code 2.
"""


class OkidynError(Exception):
    """Base class for all package-specific errors."""


class ConfigError(OkidynError):
    """A problem with user-supplied configuration."""


class ParseError(ConfigError):
    """Config file is malformed (bad JSON, missing or mistyped field)."""


class ValidationError(ConfigError):
    """Config parsed fine but violates a model invariant."""


class NotIrreducibleError(OkidynError):
    """The nonzero pattern of the matrix is not strongly connected."""


class NoConvergenceError(OkidynError):
    """Eigen-iteration failed to reach the requested residual tolerance."""

    def __init__(self, message, iterations=None, residual=None):
        super().__init__(message)
        self.iterations = iterations
        self.residual = residual


class NonViableError(OkidynError):
    """The economy produces no surplus (spectral radius >= 1)."""


class DimensionMismatchError(OkidynError):
    """Array arguments have incompatible shapes."""


class WrongKindError(OkidynError):
    """A coefficient path of the wrong kind was passed to an operation."""


class EmptyTrajectoryError(OkidynError):
    """The trajectory holds no points."""


class NonPositiveKError(OkidynError):
    """Sensitivity extremes must be strictly positive."""


class NoSignChangeError(OkidynError):
    """1 - beta*k(t) never changes sign on the sampled horizon."""
