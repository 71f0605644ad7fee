"""
Exceptions for the translen package.

Every error carries the exit code the command-line front end reports for it.
"""


class TranslenError(Exception):
    """Base exception for the translen package."""
    exit_code = 1


class SurfaceError(TranslenError):
    """Surface data is invalid or its complexity is below 2."""
    exit_code = 2


class StructuralError(TranslenError):
    """Malformed configuration: bad dimensions, unknown names, unparsable files."""
    exit_code = 2


class ConfigError(TranslenError):
    """Error related to tool settings files."""
    exit_code = 2


class RangeError(TranslenError):
    """Sweep range refused (above the parameter cap without --force)."""
    exit_code = 2


class ValidationError(TranslenError):
    """A configuration/word pair failed Penner validation."""
    exit_code = 2

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class EmptyCertificateError(TranslenError):
    """No iteration kept the witness disjoint (j = 0)."""
    exit_code = 3


class SpectralPreconditionError(TranslenError):
    """Spectral analysis precondition failed (e.g. matrix not primitive)."""
    exit_code = 4


class ConvergenceError(SpectralPreconditionError):
    """Power iteration did not reach the tolerance."""

    def __init__(self, message, residual=None, iterations=None):
        super().__init__(message)
        self.residual = residual
        self.iterations = iterations


class ProvisoError(TranslenError):
    """A theorem proviso or group precondition is violated."""
    exit_code = 5
