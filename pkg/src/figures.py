"""
Data behind the two standard plots of the renormalized electric conductor
fluctuation: the cutoff curve against the ideal law in SI units, and the
collapse of the surface peaks as eta decreases. Plotting is left to
external tools.
"""

import math
from pathlib import Path
from typing import Optional

import numpy as np
import pandas as pd

from src.closed_forms import conductor_renorm, ideal_renorm
from src.config import AppConfig, get_config
from src.exceptions import SurfaceDivergence
from src.units import convert_units, cutoff_frequency_to_eta

CUTOFF_FREQUENCY_HZ = 2e16
FIGURE_ONE_STEPS = 200  # z = c eta k / 40 for k = 1..200
FIGURE_TWO_ETAS = [1.0, 0.5, 0.25, 0.125]
FIGURE_TWO_Z_MAX = 10.0


def _ideal_or_inf(z: float) -> float:
    try:
        return ideal_renorm(z)
    except SurfaceDivergence:
        return math.inf


def cutoff_curve_frame() -> pd.DataFrame:
    """Cutoff and ideal curves in SI (J/m^3) at 1/eta = 2e16 Hz over z in (0, 5 c eta]."""
    eta_length = convert_units(cutoff_frequency_to_eta(CUTOFF_FREQUENCY_HZ), "time", "to_natural")
    z_values = eta_length * np.arange(1, FIGURE_ONE_STEPS + 1) / 40.0
    return pd.DataFrame({
        "z_m": z_values,
        "cutoff": [convert_units(conductor_renorm(eta_length, z), "fluctuation", "to_si") for z in z_values],
        "ideal": [convert_units(ideal_renorm(z), "fluctuation", "to_si") for z in z_values],
    })


def peak_collapse_frame(points: int) -> pd.DataFrame:
    """One column per eta in FIGURE_TWO_ETAS plus the ideal curve, natural units, z in [0, 10]."""
    z_values = np.linspace(0.0, FIGURE_TWO_Z_MAX, points)
    columns = {"z": z_values}
    for eta in FIGURE_TWO_ETAS:
        columns[f"eta={eta:g}"] = [conductor_renorm(eta, z) for z in z_values]
    columns["ideal"] = [_ideal_or_inf(z) for z in z_values]
    return pd.DataFrame(columns)


def emit_figure_data(figure: int, out_path: Optional[str] = None,
                     config: Optional[AppConfig] = None) -> pd.DataFrame:
    """
    Build (and optionally write as CSV) the data of figure 1 or 2.

    Args:
        figure: 1 for the SI cutoff curve, 2 for the eta sequence
        out_path: CSV destination; nothing is written when None
        config: Supplies figure_points for figure 2

    Returns:
        The figure's DataFrame
    """
    config = config or get_config()
    if figure == 1:
        frame = cutoff_curve_frame()
    elif figure == 2:
        frame = peak_collapse_frame(config.figure_points)
    else:
        raise ValueError(f"unknown figure {figure}, expected 1 or 2")

    if out_path:
        Path(out_path).parent.mkdir(parents=True, exist_ok=True)
        frame.to_csv(out_path, index=False, float_format="%.16e", lineterminator="\n")
    return frame
