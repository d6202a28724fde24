"""Exception taxonomy shared across the package."""


class FdaError(Exception):
    """Base class for all package errors."""


class ArgumentError(FdaError, ValueError):
    """A caller-supplied argument is invalid (bad stride, bad coefficient, ...)."""


class DimensionError(FdaError, ValueError):
    """Tensor or feature-map shapes are incompatible."""


class StateError(FdaError, RuntimeError):
    """An object was used out of sequence (e.g. backward twice on one tape)."""


class NumericError(FdaError, ArithmeticError):
    """A numeric invariant failed (NaN gradient, non-finite forward value)."""


class GenerationError(FdaError, RuntimeError):
    """Scene generation could not satisfy its constraints."""


class FormatError(FdaError, ValueError):
    """An on-disk artifact is malformed (bad magic, truncation, version skew)."""


class ConfigError(FdaError, ValueError):
    """A configuration file or key is invalid."""


class DependencyError(FdaError, RuntimeError):
    """A required upstream artifact (checkpoint, dataset) is missing."""


class TrainingError(FdaError, RuntimeError):
    """Training diverged or otherwise failed."""
