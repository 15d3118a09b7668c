"""Semantic exception hierarchy used across the package."""


class SepnetError(Exception):
    """Base class for every error raised by this package."""


class InvalidParameterError(SepnetError, ValueError):
    """An argument violates a documented precondition (non-finite, out of range)."""


class DegenerateInputError(SepnetError, ValueError):
    """Input is structurally valid but degenerate (e.g. zero-norm vector)."""


class DegenerateBatchError(SepnetError, ValueError):
    """A batch cannot support the requested loss (e.g. an empty positive group)."""


class StructuralError(SepnetError, ValueError):
    """Shapes or cached state do not match the declared network structure."""


class FormatError(SepnetError, ValueError):
    """A serialized artifact (checkpoint, IDX file, CSV) is malformed."""


class ConfigError(SepnetError, ValueError):
    """A run configuration failed to parse or validate."""


class TrainingDivergedError(SepnetError, RuntimeError):
    """Training produced non-finite losses or gradients and was aborted."""
