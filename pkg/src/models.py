import math
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Literal, Optional, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

# Distinguished refractive index of the ideal-conductor limit (never a large float)
INFINITE_INDEX = "inf"

RefractiveIndex = Union[Literal["inf"], float]
ArrayLike = Union[float, np.ndarray]


def is_infinite_index(n: RefractiveIndex) -> bool:
    return isinstance(n, str) and n == INFINITE_INDEX


def parse_refractive_index(value) -> RefractiveIndex:
    """Normalize user input ("inf", "Infinity", float('inf'), 1.5, "2") to a RefractiveIndex."""
    if isinstance(value, str):
        text = value.strip().lower()
        if text in ("inf", "infinity", "∞"):
            return INFINITE_INDEX
        value = float(text)
    if isinstance(value, (int, float)):
        if math.isnan(value):
            raise ValueError("refractive index cannot be NaN")
        if math.isinf(value):
            if value < 0:
                raise ValueError("refractive index must be >= 1")
            return INFINITE_INDEX
        return float(value)
    raise ValueError(f"unsupported refractive index: {value!r}")


class FieldKind(str, Enum):
    ELECTRIC = "electric"
    MAGNETIC = "magnetic"


class Channel(str, Enum):
    R_TRAVELING = "R-traveling"
    L_TRAVELING = "L-traveling"
    L_EVANESCENT = "L-evanescent"


class ModeFamily(str, Enum):
    R = "R"
    L = "L"


class Polarization(str, Enum):
    TE = "TE"
    TM = "TM"


class ClosedFormVariant(str, Enum):
    VACUUM = "vacuum"
    CONDUCTOR_RAW = "conductor_raw"
    CONDUCTOR_RENORM = "conductor_renorm"
    IDEAL_RENORM = "ideal_renorm"


class Method(str, Enum):
    QUADRATURE = "quadrature"
    CLOSED_FORM = "closed_form"


class RowStatus(str, Enum):
    OK = "ok"
    NON_CONVERGED = "non_converged"
    INVALID_DOMAIN = "invalid_domain"


class Medium(BaseModel):
    """Refractive index of the z < 0 half-space and the cutoff timescale eta (natural units)."""
    model_config = ConfigDict(frozen=True)

    n: RefractiveIndex = 1.0
    eta: float = Field(default=1.0, ge=0.0)  # eta = 0 only for closed forms

    @field_validator("n", mode="before")
    @classmethod
    def _parse_n(cls, value):
        return parse_refractive_index(value)

    @field_validator("n")
    @classmethod
    def _check_n(cls, value):
        if not is_infinite_index(value) and value < 1.0:
            raise ValueError(f"refractive index must be >= 1, got {value}")
        return value

    @property
    def is_conductor(self) -> bool:
        return is_infinite_index(self.n)

    @property
    def is_vacuum(self) -> bool:
        return not self.is_conductor and self.n == 1.0

    @property
    def is_ideal(self) -> bool:
        return self.eta == 0.0


@dataclass(frozen=True)
class WaveVectors:
    """Kinematics of one mode; kappa is set only on the evanescent channel."""
    k_par: float
    k_dz: float
    k: float
    channel: Channel
    k_z: Optional[float] = None
    kappa: Optional[float] = None


@dataclass(frozen=True)
class ModeFactors:
    r_te: ArrayLike
    r_tm: ArrayLike
    t_te: ArrayLike
    t_tm: ArrayLike


class IntegrandSpec(BaseModel):
    model_config = ConfigDict(frozen=True)

    field: FieldKind = FieldKind.ELECTRIC
    medium: Medium = Field(default_factory=Medium)
    z: float = Field(default=0.0, ge=0.0)
    renormalized: bool = False


class QuadratureConfig(BaseModel):
    model_config = ConfigDict(frozen=True)

    rel_tol: float = Field(default=1e-9, gt=0.0)
    abs_tol: float = Field(default=1e-12, ge=0.0)
    radial_nodes: int = Field(default=96, ge=8)
    angular_subdivision_limit: int = Field(default=40, ge=1)
    oscillation_guard: int = Field(default=8, ge=2)
    max_z_over_eta: float = Field(default=1e3, gt=0.0)
    radial_rule: Literal["laplace", "laguerre"] = "laplace"


class ChannelValues(BaseModel):
    model_config = ConfigDict(frozen=True)

    traveling: float = 0.0
    evanescent: float = 0.0


class FluctuationResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    value: float
    error_estimate: float = Field(ge=0.0)
    evaluations: int = 0
    channels: ChannelValues = Field(default_factory=ChannelValues)


class ClosedFormQuery(BaseModel):
    model_config = ConfigDict(frozen=True)

    field: FieldKind = FieldKind.ELECTRIC
    variant: ClosedFormVariant
    eta: float = Field(default=0.0, ge=0.0)
    z: float = Field(default=0.0, ge=0.0)


class PeakStructure(BaseModel):
    model_config = ConfigDict(frozen=True)

    z_min: float
    f_min: float
    z_max: float
    f_max: float
    width: float
    z_zero: float  # sign change of the renormalized electric density


class SurfaceLayer(BaseModel):
    """Split of the spatial integral at the sign change of the renormalized density."""
    model_config = ConfigDict(frozen=True)

    z_zero: float
    inner: float
    outer: float


class PolarizableBody(BaseModel):
    model_config = ConfigDict(frozen=True)

    alpha: float = Field(ge=0.0)
    kind: FieldKind = FieldKind.ELECTRIC


class ZGrid(BaseModel):
    model_config = ConfigDict(frozen=True)

    min: float = Field(default=0.0, ge=0.0)
    max: float = 1.0
    count: int = Field(default=1, ge=1)
    spacing: Literal["linear", "log"] = "linear"

    @model_validator(mode="after")
    def _check_bounds(self):
        if self.max < self.min:
            raise ValueError("z_grid max must be >= min")
        if self.spacing == "log" and self.min <= 0.0:
            raise ValueError("log spacing requires min > 0")
        return self

    def points(self) -> List[float]:
        if self.count == 1:
            return [float(self.min)]
        if self.spacing == "log":
            return [float(v) for v in np.geomspace(self.min, self.max, self.count)]
        return [float(v) for v in np.linspace(self.min, self.max, self.count)]


class SweepSpec(BaseModel):
    model_config = ConfigDict(frozen=True)

    z_grid: ZGrid = Field(default_factory=ZGrid)
    n_values: List[RefractiveIndex] = Field(default_factory=lambda: [INFINITE_INDEX])
    eta_values: List[float] = Field(default_factory=lambda: [1.0])  # seconds when units == "si"
    field: Literal["E", "B", "both"] = "E"
    renormalize: bool = False
    units: Literal["natural", "si"] = "natural"

    @field_validator("n_values", mode="before")
    @classmethod
    def _parse_indices(cls, values):
        return [parse_refractive_index(v) for v in values]

    @field_validator("n_values")
    @classmethod
    def _check_indices(cls, values):
        if not values:
            raise ValueError("at least one refractive index is required")
        for value in values:
            if not is_infinite_index(value) and value < 1.0:
                raise ValueError(f"refractive index must be >= 1, got {value}")
        return values

    @field_validator("eta_values")
    @classmethod
    def _check_etas(cls, values):
        if not values:
            raise ValueError("at least one eta value is required")
        if any(v < 0.0 or math.isnan(v) for v in values):
            raise ValueError("eta values must be >= 0")
        return values

    def fields(self) -> List[FieldKind]:
        if self.field == "both":
            return [FieldKind.ELECTRIC, FieldKind.MAGNETIC]
        return [FieldKind.ELECTRIC if self.field == "E" else FieldKind.MAGNETIC]


FIELD_LABELS: Dict[FieldKind, str] = {FieldKind.ELECTRIC: "E", FieldKind.MAGNETIC: "B"}


class OutputRecord(BaseModel):
    """One emitted sweep row; column order is the CSV header order."""
    model_config = ConfigDict(frozen=True)

    z: float
    n: RefractiveIndex
    eta: float
    field: Literal["E", "B"]
    value: float
    error_estimate: float = 0.0
    channel_traveling: float = 0.0
    channel_evanescent: float = 0.0
    method: Method = Method.QUADRATURE
    status: RowStatus = RowStatus.OK


OUTPUT_COLUMNS = list(OutputRecord.model_fields.keys())
