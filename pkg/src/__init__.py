# FluxHalf - vacuum field fluctuations near a dielectric half-space
# Exponential high-frequency cutoff, natural units (hbar = c = 1)

__version__ = "1.0.0"
__description__ = "Regulated vacuum E/B fluctuations and Casimir-Polder energies next to a dielectric half-space"

from .config import get_config, AppConfig
from .exceptions import (
    FluxHalfError,
    InvalidDomain,
    DivergentLimit,
    SurfaceDivergence,
    NonConvergence
)
from .models import (
    Medium,
    FieldKind,
    IntegrandSpec,
    QuadratureConfig,
    FluctuationResult,
    ClosedFormQuery,
    PolarizableBody,
    SweepSpec,
    OutputRecord
)
from .quadrature import integrate_fluctuation, integrate_renormalized_conductor
from .sweep_runner import SweepRunner

__all__ = [
    "SweepRunner",
    "get_config",
    "AppConfig",
    "FluxHalfError",
    "InvalidDomain",
    "DivergentLimit",
    "SurfaceDivergence",
    "NonConvergence",
    "Medium",
    "FieldKind",
    "IntegrandSpec",
    "QuadratureConfig",
    "FluctuationResult",
    "ClosedFormQuery",
    "PolarizableBody",
    "SweepSpec",
    "OutputRecord",
    "integrate_fluctuation",
    "integrate_renormalized_conductor"
]
