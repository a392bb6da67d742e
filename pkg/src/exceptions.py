from typing import Optional


class FluxHalfError(Exception):
    """Base class for every error raised by the fluctuation library."""


class InvalidDomain(FluxHalfError, ValueError):
    """An input lies outside the domain of the requested operation."""


class DivergentLimit(FluxHalfError, ValueError):
    """The requested quantity diverges for the given parameters (eta = 0)."""


class SurfaceDivergence(DivergentLimit):
    """The ideal-conductor fluctuation was requested at the interface z = 0."""


class NonConvergence(FluxHalfError, RuntimeError):
    """
    The quadrature budget ran out before the requested tolerance was met.

    The best available estimate is kept on the exception so callers can still
    report it.
    """

    def __init__(self, message: str, value: Optional[float] = None,
                 error_estimate: Optional[float] = None, evaluations: int = 0):
        super().__init__(message)
        self.value = value
        self.error_estimate = error_estimate
        self.evaluations = evaluations
