"""
Integrands of the regulated field fluctuations <E^2>_eta and <B^2>_eta.

Pointwise densities are given over the (k_par, k_z) quarter-plane (traveling
R and L modes) and the (k_par, kappa) evanescent strip. They carry the factor
k_par * k but neither the global hbar c / (2 pi) nor the cutoff e^(-eta k);
the quadrature layer owns both.

The scale-free coefficient functions at the bottom express the same
integrands in polar variables, where every k-dependence except the cutoff
and the interference phase drops out.
"""

import numpy as np

from src.exceptions import InvalidDomain
from src.models import ArrayLike, FieldKind, IntegrandSpec, Medium
from src.modes import (
    scalar_or_array,
    dielectric_kz,
    evanescent_factors,
    evanescent_kappa_max,
    fresnel_factors,
    index_ratio,
    interference_weights,
)


def _require_finite_index(spec: IntegrandSpec) -> float:
    if spec.medium.is_conductor:
        raise InvalidDomain("n = inf has no finite-n integrand; use conductor_limit")
    return float(spec.medium.n)


def _traveling(k_par: ArrayLike, k_z: ArrayLike, spec: IntegrandSpec, field: FieldKind) -> ArrayLike:
    n = _require_finite_index(spec)
    k_par = np.asarray(k_par, dtype=float)
    k_z = np.asarray(k_z, dtype=float)
    factors = fresnel_factors(k_par, k_z, n)
    k_dz = np.asarray(dielectric_kz(k_par, k_z, n))
    k = np.hypot(k_par, k_z)
    c_te, c_tm = interference_weights(k_par, k_z, field)
    phase = np.cos(2.0 * k_z * spec.z)

    r_te, r_tm = np.asarray(factors.r_te), np.asarray(factors.r_tm)
    t_te, t_tm = np.asarray(factors.t_te), np.asarray(factors.t_tm)
    brace = (2.0 + r_te**2 + r_tm**2
             + 2.0 * c_te * r_te * phase
             + 2.0 * c_tm * r_tm * phase
             + (k_z / k_dz) * (t_te**2 + t_tm**2))
    return scalar_or_array(k_par * k * brace)


def electric_traveling(k_par: ArrayLike, k_z: ArrayLike, spec: IntegrandSpec) -> ArrayLike:
    """Traveling R + L density of <E^2>; equals 4 k_par k for n = 1."""
    return _traveling(k_par, k_z, spec, FieldKind.ELECTRIC)


def magnetic_traveling(k_par: ArrayLike, k_z: ArrayLike, spec: IntegrandSpec) -> ArrayLike:
    """Traveling R + L density of <B^2>; TE interference weighted by (k_par^2 - k_z^2)/k^2."""
    return _traveling(k_par, k_z, spec, FieldKind.MAGNETIC)


def electric_evanescent(k_par: ArrayLike, kappa: ArrayLike, spec: IntegrandSpec) -> ArrayLike:
    """
    Evanescent L-mode density on 0 <= kappa < sqrt(n^2-1) k_par / n.

    The vacuum total wavenumber is k = sqrt(k_par^2 - kappa^2); the strip is
    empty for n = 1 and the density is zero there.
    """
    n = _require_finite_index(spec)
    k_par = np.asarray(k_par, dtype=float)
    kappa = np.asarray(kappa, dtype=float)
    if np.any(kappa < 0.0) or np.any(k_par < 0.0):
        raise InvalidDomain("k_par and kappa must be >= 0")
    if n == 1.0:
        return scalar_or_array(np.zeros(np.broadcast(k_par, kappa).shape))
    kappa_max = np.asarray(evanescent_kappa_max(k_par, n))
    if np.any(kappa >= kappa_max):
        raise InvalidDomain("kappa outside the evanescent strip [0, kappa_max)")

    t_te2, t_tm2 = evanescent_factors(k_par, kappa, n)
    k_dz = np.sqrt((n - 1.0) * (n + 1.0) * k_par**2 - n * n * kappa**2)
    k = np.sqrt(k_par**2 - kappa**2)
    density = k_par * k * (kappa / k_dz) * (np.asarray(t_te2) + np.asarray(t_tm2)) * np.exp(-2.0 * kappa * spec.z)
    return scalar_or_array(density)


def magnetic_evanescent(k_par: ArrayLike, kappa: ArrayLike, spec: IntegrandSpec) -> ArrayLike:
    """Evanescent density of <B^2>; identical to the electric one."""
    return electric_evanescent(k_par, kappa, spec)


def conductor_limit(k_par: ArrayLike, k_z: ArrayLike, z: float, field: FieldKind) -> ArrayLike:
    """n -> inf density: 4 (k_par/k)(k_par^2 + 2 k_z^2 sin^2(k_z z)), cos^2 for the magnetic field."""
    if z < 0.0:
        raise InvalidDomain("z must be >= 0")
    k_par = np.asarray(k_par, dtype=float)
    k_z = np.asarray(k_z, dtype=float)
    if np.any(k_par < 0.0) or np.any(k_z < 0.0):
        raise InvalidDomain("wavenumbers must be >= 0")
    k = np.hypot(k_par, k_z)
    trig = np.sin(k_z * z) if field == FieldKind.ELECTRIC else np.cos(k_z * z)
    return scalar_or_array(4.0 * (k_par / k) * (k_par**2 + 2.0 * k_z**2 * trig**2))


def renormalized_integrand(k_par: ArrayLike, q: ArrayLike, spec: IntegrandSpec,
                           evanescent: bool = False) -> ArrayLike:
    """
    Density with the free-vacuum (n = 1) density subtracted pointwise.

    Args:
        k_par: transverse wavenumber
        q: k_z on the traveling channel, kappa on the evanescent one
        spec: integrand specification (medium, field, z)
        evanescent: select the evanescent channel (never subtracted, its n = 1 value is zero)
    """
    if spec.medium.is_conductor:
        if evanescent:
            return scalar_or_array(np.zeros(np.broadcast(np.asarray(k_par), np.asarray(q)).shape))
        k_par = np.asarray(k_par, dtype=float)
        k_z = np.asarray(q, dtype=float)
        sign = -1.0 if spec.field == FieldKind.ELECTRIC else 1.0
        k = np.hypot(k_par, k_z)
        return scalar_or_array(sign * 4.0 * k_par * k_z**2 / k * np.cos(2.0 * k_z * spec.z))

    if evanescent:
        return electric_evanescent(k_par, q, spec)
    vacuum = spec.model_copy(update={"medium": Medium(n=1.0, eta=spec.medium.eta)})
    return scalar_or_array(np.asarray(_traveling(k_par, q, spec, spec.field))
                            - np.asarray(_traveling(k_par, q, vacuum, spec.field)))


def field_integrand(k_par: ArrayLike, q: ArrayLike, spec: IntegrandSpec,
                    evanescent: bool = False) -> ArrayLike:
    """Density selected by spec (field, medium, renormalization) on one channel."""
    if spec.renormalized:
        return renormalized_integrand(k_par, q, spec, evanescent=evanescent)
    if spec.medium.is_conductor:
        if evanescent:
            return scalar_or_array(np.zeros(np.broadcast(np.asarray(k_par), np.asarray(q)).shape))
        return conductor_limit(k_par, q, spec.z, spec.field)
    if evanescent:
        return electric_evanescent(k_par, q, spec)
    return _traveling(k_par, q, spec, spec.field)


def traveling_coefficients(x: ArrayLike, spec: IntegrandSpec):
    """
    Polar decomposition of the traveling density.

    With x = cos(theta) = k_z / k the measure k_par k dk_par dk_z becomes
    k^3 dk dx and the density reads k^3 [A(x) + B(x) cos(2 k z x)].

    Returns:
        Tuple (A, B) evaluated at x in (0, 1)
    """
    x = np.asarray(x, dtype=float)
    if spec.medium.is_conductor:
        sign = -1.0 if spec.field == FieldKind.ELECTRIC else 1.0
        steady = np.zeros_like(x) if spec.renormalized else np.full_like(x, 4.0)
        return steady, sign * 4.0 * x**2

    n = float(spec.medium.n)
    k_par = np.sqrt(np.clip(1.0 - x**2, 0.0, None))
    factors = fresnel_factors(k_par, x, n)
    k_dz = np.asarray(dielectric_kz(k_par, x, n))
    c_te, c_tm = interference_weights(k_par, x, spec.field)
    r_te, r_tm = np.asarray(factors.r_te), np.asarray(factors.r_tm)
    t_te, t_tm = np.asarray(factors.t_te), np.asarray(factors.t_tm)

    steady = 2.0 + r_te**2 + r_tm**2 + (x / k_dz) * (t_te**2 + t_tm**2)
    if spec.renormalized:
        steady = steady - 4.0
    interference = 2.0 * c_te * r_te + 2.0 * c_tm * r_tm
    return steady, interference


def evanescent_coefficients(phi: ArrayLike, spec: IntegrandSpec):
    """
    Polar decomposition of the evanescent density.

    With kappa = kappa_max(k_par) sin(phi) the density times dk_par dkappa is
    k_par^3 G(phi) exp(-k_par lambda(phi)) dk_par dphi, the exponent
    collecting the cutoff eta k and the decay 2 kappa z.

    Returns:
        Tuple (G, lambda) evaluated at phi in (0, pi/2)
    """
    phi = np.asarray(phi, dtype=float)
    eta = spec.medium.eta
    if spec.medium.is_conductor or spec.medium.n == 1.0:
        return np.zeros_like(phi), np.full_like(phi, eta)

    n = float(spec.medium.n)
    ratio = index_ratio(n)
    sin_phi, cos_phi = np.sin(phi), np.cos(phi)
    s = np.sqrt(1.0 - (ratio * sin_phi) ** 2)
    n2 = n * n
    te = 4.0 * n2 * cos_phi**2 / (n2 * cos_phi**2 + sin_phi**2)
    tm = 4.0 * n2 * cos_phi**2 / (cos_phi**2 + n2 * sin_phi**2)
    weight = s * ratio * sin_phi / n * (te + tm)
    exponent = eta * s + 2.0 * spec.z * ratio * sin_phi
    return weight, exponent


