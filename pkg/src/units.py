"""
Conversion between natural units (hbar = c = 1, lengths in metres) and SI.

Field fluctuations use the Gaussian convention, so <E^2> carries units of
energy density. A time eta enters the natural system as the length c * eta.
"""

from typing import Dict, Literal

# CODATA 2018 exact/recommended values
PHYSICAL_CONSTANTS: Dict[str, float] = {
    "hbar": 1.054571817e-34,  # J s
    "c": 299792458.0,  # m / s
}

HBAR = PHYSICAL_CONSTANTS["hbar"]
SPEED_OF_LIGHT = PHYSICAL_CONSTANTS["c"]
HBAR_C = HBAR * SPEED_OF_LIGHT  # J m

Direction = Literal["to_si", "to_natural"]

# multiply a natural value by this factor to get SI
QUANTITY_FACTORS: Dict[str, float] = {
    "fluctuation": HBAR_C,  # 1/m^4 -> J/m^3
    "energy_density": HBAR_C,  # 1/m^4 -> J/m^3
    "energy": HBAR_C,  # 1/m -> J
    "length": 1.0,  # m -> m
    "time": 1.0 / SPEED_OF_LIGHT,  # m -> s
    "frequency": SPEED_OF_LIGHT,  # 1/m -> Hz
}


def convert_units(value: float, kind: str, direction: Direction = "to_si") -> float:
    """
    Convert a quantity between natural units and SI.

    Args:
        value: Quantity to convert
        kind: One of the keys of QUANTITY_FACTORS
        direction: "to_si" or "to_natural"

    Returns:
        Converted value

    Raises:
        ValueError: Unknown quantity kind or direction
    """
    if kind not in QUANTITY_FACTORS:
        raise ValueError(f"unknown quantity kind '{kind}', expected one of {list(QUANTITY_FACTORS)}")
    factor = QUANTITY_FACTORS[kind]
    if direction == "to_si":
        return value * factor
    if direction == "to_natural":
        return value / factor
    raise ValueError(f"unknown direction '{direction}', expected 'to_si' or 'to_natural'")


def cutoff_frequency_to_eta(frequency_hz: float) -> float:
    """Cutoff timescale eta = 1/omega_c in seconds."""
    if frequency_hz <= 0.0:
        raise ValueError("cutoff frequency must be > 0")
    return 1.0 / frequency_hz


def eta_to_cutoff_frequency(eta_s: float) -> float:
    if eta_s <= 0.0:
        raise ValueError("eta must be > 0")
    return 1.0 / eta_s
