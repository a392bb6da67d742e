"""
Kinematics and amplitude factors of the vacuum-side traveling and evanescent modes.

Natural units (hbar = c = 1). Every function works elementwise on numpy
arrays as well as on plain floats. The refractive index may be the
distinguished value ``"inf"``, in which case the analytic limits are used.
"""

import numpy as np

from src.exceptions import InvalidDomain
from src.models import (
    ArrayLike,
    Channel,
    FieldKind,
    ModeFactors,
    ModeFamily,
    Polarization,
    RefractiveIndex,
    WaveVectors,
    is_infinite_index,
)


def _check_index(n: RefractiveIndex) -> None:
    if is_infinite_index(n):
        return
    if not np.isfinite(n) or n < 1.0:
        raise InvalidDomain(f"refractive index must be >= 1, got {n}")


def _check_non_negative(name: str, value: ArrayLike) -> np.ndarray:
    array = np.asarray(value, dtype=float)
    if np.any(array < 0.0) or np.any(np.isnan(array)):
        raise InvalidDomain(f"{name} must be >= 0")
    return array


def scalar_or_array(value: np.ndarray) -> ArrayLike:
    return float(value) if np.ndim(value) == 0 else value


def dielectric_kz(k_par: ArrayLike, k_z: ArrayLike, n: RefractiveIndex) -> ArrayLike:
    """Normal wavenumber inside the dielectric, sqrt((n^2-1) k_par^2 + n^2 k_z^2)."""
    _check_index(n)
    k_par = _check_non_negative("k_par", k_par)
    k_z = _check_non_negative("k_z", k_z)
    if is_infinite_index(n):
        return scalar_or_array(np.full(np.broadcast(k_par, k_z).shape, np.inf))
    # (n^2 - 1) written as (n - 1)(n + 1) keeps precision for n close to 1
    return scalar_or_array(np.sqrt((n - 1.0) * (n + 1.0) * k_par**2 + n**2 * k_z**2))


def evanescent_kappa_max(k_par: ArrayLike, n: RefractiveIndex) -> ArrayLike:
    """Upper edge of the evanescent strip, sqrt(n^2-1) k_par / n."""
    _check_index(n)
    k_par = _check_non_negative("k_par", k_par)
    return scalar_or_array(index_ratio(n) * k_par)


def index_ratio(n: RefractiveIndex) -> float:
    """sqrt(n^2 - 1) / n, the sine of the critical angle's complement; 1 for the conductor."""
    if is_infinite_index(n):
        return 1.0
    return float(np.sqrt((n - 1.0) * (n + 1.0)) / n)


def fresnel_factors(k_par: ArrayLike, k_z: ArrayLike, n: RefractiveIndex) -> ModeFactors:
    """Reflection factors of R modes and vacuum-side transmission factors of L modes."""
    _check_index(n)
    k_par = _check_non_negative("k_par", k_par)
    k_z = _check_non_negative("k_z", k_z)
    if np.any(k_z == 0.0):
        raise InvalidDomain("fresnel_factors requires k_z > 0 (grazing incidence is an open endpoint)")

    if is_infinite_index(n):
        k = np.hypot(k_par, k_z)
        shape = np.broadcast(k_par, k_z).shape
        return ModeFactors(
            r_te=scalar_or_array(np.full(shape, -1.0)),
            r_tm=scalar_or_array(np.full(shape, 1.0)),
            t_te=scalar_or_array(np.full(shape, 2.0)),
            t_tm=scalar_or_array(2.0 * k / k_z),
        )

    k_dz = np.asarray(dielectric_kz(k_par, k_z, n))
    n2 = n * n
    return ModeFactors(
        r_te=scalar_or_array((k_z - k_dz) / (k_z + k_dz)),
        r_tm=scalar_or_array((n2 * k_z - k_dz) / (n2 * k_z + k_dz)),
        t_te=scalar_or_array(2.0 * k_dz / (k_dz + k_z)),
        t_tm=scalar_or_array(2.0 * n * k_dz / (k_dz + n2 * k_z)),
    )


def evanescent_factors(k_par: ArrayLike, kappa: ArrayLike, n: RefractiveIndex):
    """
    Squared moduli of the L-mode transmission factors on the evanescent strip.

    Returns:
        Tuple (|t_te|^2, |t_tm|^2) with k_dz^2 = (n^2-1) k_par^2 - n^2 kappa^2
    """
    _check_index(n)
    if is_infinite_index(n):
        raise InvalidDomain("evanescent factors have no finite limit for n = inf")
    k_par = _check_non_negative("k_par", k_par)
    kappa = _check_non_negative("kappa", kappa)
    n2 = n * n
    k_dz2 = (n - 1.0) * (n + 1.0) * k_par**2 - n2 * kappa**2
    if np.any(k_dz2 < 0.0):
        raise InvalidDomain("kappa outside the evanescent strip [0, kappa_max)")
    t_te2 = 4.0 * k_dz2 / (k_dz2 + kappa**2)
    t_tm2 = 4.0 * n2 * k_dz2 / (k_dz2 + n2 * n2 * kappa**2)
    return scalar_or_array(t_te2), scalar_or_array(t_tm2)


def l_channel_measure(k_par: ArrayLike, k_z: ArrayLike, n: RefractiveIndex) -> ArrayLike:
    """Jacobian n^2 k_z / k_dz of d^3k_d -> d^3k for traveling L modes."""
    _check_index(n)
    if is_infinite_index(n):
        raise InvalidDomain("the L-mode measure vanishes identically for n = inf")
    k_dz = np.asarray(dielectric_kz(k_par, k_z, n))
    return scalar_or_array(n * n * np.asarray(k_z, dtype=float) / k_dz)


def traveling_wavevectors(k_par: float, k_z: float, n: RefractiveIndex,
                          channel: Channel = Channel.R_TRAVELING) -> WaveVectors:
    if channel == Channel.L_EVANESCENT:
        raise InvalidDomain("use evanescent_wavevectors for the evanescent channel")
    return WaveVectors(
        k_par=float(k_par),
        k_z=float(k_z),
        k_dz=float(dielectric_kz(k_par, k_z, n)),
        k=float(np.hypot(k_par, k_z)),
        channel=channel,
    )


def evanescent_wavevectors(k_par: float, kappa: float, n: RefractiveIndex) -> WaveVectors:
    _check_index(n)
    if is_infinite_index(n):
        raise InvalidDomain("the evanescent channel is not defined for n = inf")
    kappa_max = evanescent_kappa_max(k_par, n)
    if kappa < 0.0 or kappa >= kappa_max:
        raise InvalidDomain(f"kappa={kappa} outside [0, {kappa_max})")
    k_dz2 = (n - 1.0) * (n + 1.0) * k_par**2 - n * n * kappa**2
    return WaveVectors(
        k_par=float(k_par),
        kappa=float(kappa),
        k_dz=float(np.sqrt(k_dz2)),
        k=float(np.sqrt(k_par**2 - kappa**2)),
        channel=Channel.L_EVANESCENT,
    )


def interference_weights(k_par: ArrayLike, k_z: ArrayLike, field: FieldKind):
    """Weights of the TE and TM reflected-wave interference terms, (c_te, c_tm)."""
    k2 = np.asarray(k_par, dtype=float) ** 2 + np.asarray(k_z, dtype=float) ** 2
    if field == FieldKind.ELECTRIC:
        return 1.0, 2.0 * k_par**2 / k2 - 1.0
    return (k_par**2 - k_z**2) / k2, 1.0


def mode_intensity(family: ModeFamily, pol: Polarization, k_par: ArrayLike, k_z: ArrayLike,
                   z: float, n: RefractiveIndex,
                   field: FieldKind = FieldKind.ELECTRIC) -> ArrayLike:
    """
    (2 pi)^3 times the squared modulus of one vacuum-side mode at height z.

    The polarization vectors are the explicit unit vectors of the traveling
    modes, so only the amplitude factors and the interference phase remain.

    Args:
        family: R (incident from vacuum) or L (incident from the dielectric)
        pol: TE or TM
        k_par, k_z: vacuum wavevector components (k_z > 0)
        z: height above the interface (>= 0)
        n: refractive index or "inf"
        field: electric field (the mode function) or magnetic field (its curl / k)

    Returns:
        Dimensionless intensity
    """
    if z < 0.0:
        raise InvalidDomain("mode intensities are defined on the vacuum side z >= 0")
    factors = fresnel_factors(k_par, k_z, n)
    if family == ModeFamily.L:
        if is_infinite_index(n):
            shape = np.broadcast(np.asarray(k_par), np.asarray(k_z)).shape
            return scalar_or_array(np.zeros(shape))
        t = factors.t_te if pol == Polarization.TE else factors.t_tm
        return scalar_or_array(np.asarray(t) ** 2 / (n * n))

    k_par = np.asarray(k_par, dtype=float)
    k_z = np.asarray(k_z, dtype=float)
    c_te, c_tm = interference_weights(k_par, k_z, field)
    r = np.asarray(factors.r_te if pol == Polarization.TE else factors.r_tm)
    weight = c_te if pol == Polarization.TE else c_tm
    phase = np.cos(2.0 * k_z * z)
    return scalar_or_array(1.0 + r**2 + 2.0 * r * weight * phase)
