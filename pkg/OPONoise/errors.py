from typing import Optional


class OPONoiseError(Exception):
    """ Base class for all errors raised by the package. """


class ValidationError(OPONoiseError, ValueError):
    """ A value violates an invariant of a domain type. """

    def __init__(self, message: str, field: Optional[str] = None):
        super().__init__(message)
        self.field = field


class PhysicalityError(ValidationError):
    """ A covariance matrix violates the uncertainty relation. """

    def __init__(self, message: str, min_symplectic_eigenvalue: float):
        super().__init__(message, field="entries")
        self.min_symplectic_eigenvalue = min_symplectic_eigenvalue


class DomainError(OPONoiseError, ValueError):
    """ A formula is evaluated outside its domain of validity. """


class SweepError(DomainError):
    """ A point of a frequency sweep could not be evaluated. """

    def __init__(self, message: str, freq_hz: float):
        super().__init__(message)
        self.freq_hz = freq_hz


class FitError(OPONoiseError, RuntimeError):
    """ The fit could not find a single feasible candidate. """


class ConfigError(ValidationError):
    """ A run configuration could not be parsed or validated. """

    def __init__(self, message: str, field: Optional[str] = None, line: Optional[int] = None):
        super().__init__(message, field)
        self.line = line


class OutputError(OPONoiseError, OSError):
    """ A result file could not be written. """
