"""
Derived physics on top of the closed forms and the quadrature: routing of a
single fluctuation evaluation, the surface-divergence peak structure, the
zero-total-energy identity and far-zone Casimir-Polder energies.
"""

import math
from typing import List, Optional, Tuple

from scipy.integrate import quad
from scipy.optimize import brentq

from src.closed_forms import (
    SQRT12,
    conductor_raw,
    conductor_renorm,
    conductor_renorm_antiderivative,
    ideal_renorm,
    vacuum_fluct,
)
from src.exceptions import InvalidDomain
from src.models import (
    ChannelValues,
    FieldKind,
    FluctuationResult,
    IntegrandSpec,
    Medium,
    Method,
    PeakStructure,
    PolarizableBody,
    QuadratureConfig,
    SurfaceLayer,
)
from src.quadrature import integrate_fluctuation

# spatial integrals are done numerically up to this many eta, analytically beyond
TAIL_START = 1e3


def _closed(value: float) -> FluctuationResult:
    return FluctuationResult(value=value, error_estimate=0.0, evaluations=0,
                             channels=ChannelValues(traveling=value, evanescent=0.0))


def compute_fluctuation(medium: Medium, z: float, field: FieldKind, renormalized: bool,
                        config: Optional[QuadratureConfig] = None) -> Tuple[FluctuationResult, Method]:
    """
    Fluctuation at height z, routed to a closed form whenever one is exact.

    n = inf uses the conductor closed forms (the ideal ones at eta = 0),
    n = 1 the vacuum ones; every other medium goes through the quadrature.

    Returns:
        Tuple of (result, method)
    """
    if z < 0.0:
        raise InvalidDomain("z must be >= 0")
    if medium.is_conductor:
        if medium.is_ideal:
            if not renormalized:
                return _closed(vacuum_fluct(medium.eta, field)), Method.CLOSED_FORM
            return _closed(ideal_renorm(z, field)), Method.CLOSED_FORM
        if renormalized:
            return _closed(conductor_renorm(medium.eta, z, field)), Method.CLOSED_FORM
        return _closed(conductor_raw(medium.eta, z, field)), Method.CLOSED_FORM
    if medium.is_vacuum:
        if renormalized:
            return _closed(0.0), Method.CLOSED_FORM
        return _closed(vacuum_fluct(medium.eta, field)), Method.CLOSED_FORM

    spec = IntegrandSpec(field=field, medium=medium, z=z, renormalized=renormalized)
    return integrate_fluctuation(spec, config), Method.QUADRATURE


def _second_derivative(u: float) -> float:
    # d^2/du^2 of (12u^2 - 1)/(4u^2 + 1)^3, up to the positive factor 48
    return (80.0 * u**4 - 40.0 * u**2 + 1.0) / (4.0 * u * u + 1.0) ** 5


def peak_structure(eta: float) -> PeakStructure:
    """
    Extrema, inflection width and sign change of the renormalized electric conductor density.

    Args:
        eta: Cutoff timescale (> 0)

    Returns:
        PeakStructure; the width is the distance of the inflection points around the maximum
    """
    if eta <= 0.0:
        raise InvalidDomain("peak_structure requires eta > 0")
    inner = brentq(_second_derivative, 0.0, 0.5, xtol=1e-15, rtol=1e-12)
    outer = brentq(_second_derivative, 0.5, 2.0, xtol=1e-15, rtol=1e-12)
    return PeakStructure(
        z_min=0.0,
        f_min=conductor_renorm(eta, 0.0),
        z_max=eta / 2.0,
        f_max=conductor_renorm(eta, eta / 2.0),
        width=(outer - inner) * eta,
        z_zero=sign_change_height(eta),
    )


def sign_change_height(eta: float) -> float:
    """Height eta/sqrt(12) where the renormalized conductor density changes sign."""
    if eta <= 0.0:
        raise InvalidDomain("sign_change_height requires eta > 0")
    return eta / SQRT12


def spatial_energy_integral(eta: float, field: FieldKind = FieldKind.ELECTRIC) -> float:
    """Integral of the renormalized conductor density over z in [0, inf); vanishes identically."""
    if eta <= 0.0:
        raise InvalidDomain("spatial_energy_integral requires eta > 0")
    end = TAIL_START * eta
    scale = 4.0 / (math.pi * eta**3)
    points = [eta / SQRT12, eta / 2.0, eta, 10.0 * eta, 100.0 * eta]
    body, _ = quad(lambda z: conductor_renorm(eta, z, field), 0.0, end,
                   points=points, limit=200, epsabs=1e-13 * scale, epsrel=1e-12)
    # the primitive vanishes at infinity
    tail = -conductor_renorm_antiderivative(eta, end, field)
    return body + tail


def surface_layer(eta: float, field: FieldKind = FieldKind.ELECTRIC) -> SurfaceLayer:
    """
    Split the spatial integral at the sign change z = eta/sqrt(12).

    The layer next to the surface holds -(4/pi)(9/(16 sqrt(12)))/eta^3 for the
    electric field; the rest of the half-space holds the opposite amount.
    """
    z_zero = sign_change_height(eta)
    inner = conductor_renorm_antiderivative(eta, z_zero, field)
    return SurfaceLayer(z_zero=z_zero, inner=inner, outer=-inner)


def casimir_polder(body: PolarizableBody, d: float, medium: Medium,
                   config: Optional[QuadratureConfig] = None) -> float:
    """
    Far-zone Casimir-Polder energy -(alpha/2) <F^2>_R(d) of a polarizable body.

    The body must sit farther from the surface than the wavelength of its
    main transition; that condition is not checked.

    Args:
        body: Static polarizability and the field it couples to
        d: Distance from the surface
        medium: Half-space medium and cutoff (eta = 0 for the ideal conductor)
        config: Quadrature settings for finite n

    Raises:
        SurfaceDivergence: d = 0 in the ideal-conductor limit
    """
    result, _ = compute_fluctuation(medium, d, body.kind, renormalized=True, config=config)
    return -0.5 * body.alpha * result.value


def ideal_limit_convergence(z: float, etas: List[float]) -> List[float]:
    """Relative deviations |conductor_renorm(eta, z)/ideal_renorm(z) - 1|, about (5/6)(eta/z)^2."""
    if z <= 0.0:
        raise InvalidDomain("ideal_limit_convergence requires z > 0")
    ideal = ideal_renorm(z)
    deviations = []
    for eta in etas:
        if eta < 0.0:
            raise InvalidDomain(f"eta must be >= 0, got {eta}")
        if eta == 0.0:
            deviations.append(0.0)
            continue
        deviations.append(abs(conductor_renorm(eta, z) / ideal - 1.0))
    return deviations


def renormalized_energy_density(eta: float, z: float, medium: Medium,
                                config: Optional[QuadratureConfig] = None) -> float:
    """(<E^2>_R + <B^2>_R)/(8 pi) at height z (Gaussian units); zero for the conductor."""
    medium = medium.model_copy(update={"eta": eta})
    electric, _ = compute_fluctuation(medium, z, FieldKind.ELECTRIC, renormalized=True, config=config)
    magnetic, _ = compute_fluctuation(medium, z, FieldKind.MAGNETIC, renormalized=True, config=config)
    return (electric.value + magnetic.value) / (8.0 * math.pi)
