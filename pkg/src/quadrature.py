"""
Semi-infinite two-dimensional quadrature of the regulated fluctuation integrals.

Both channels are integrated in polar variables. The exponential cutoff is
purely radial there, so the radial integral is taken with an exponentially
weighted rule and only a one-dimensional angular integral is left to the
adaptive driver:

    traveling:   x = cos(theta) = k_z / k in (0, 1), radial variable k
    evanescent:  kappa = kappa_max(k_par) sin(phi), phi in (0, pi/2),
                 radial variable k_par

The angular driver is QUADPACK's adaptive Gauss-Kronrod bisection
(scipy.integrate.quad), an open rule that never samples x = 0 or
phi = pi/2 where the k_z / k_dz and kappa / k_dz factors live.
"""

import math
from functools import lru_cache
from typing import Callable, List, Optional, Tuple

import numpy as np
from scipy.integrate import quad
from scipy.special import roots_genlaguerre

from src.exceptions import InvalidDomain, NonConvergence
from src.integrand import evanescent_coefficients, field_integrand, traveling_coefficients
from src.models import (
    INFINITE_INDEX,
    ChannelValues,
    FieldKind,
    FluctuationResult,
    IntegrandSpec,
    Medium,
    QuadratureConfig,
)
from src.modes import index_ratio

TWO_PI = 2.0 * math.pi
HALF_PI = 0.5 * math.pi

# sin(phi) above this is treated as the closed edge kappa = kappa_max
_EDGE = 1.0 - 1e-15


def laplace_moment(eta: float, a=0.0):
    """
    Integral of k^3 exp(-eta k) cos(a k) over k in (0, inf).

    Equals 6 Re (eta - i a)^-4, written in real arithmetic.
    """
    a = np.asarray(a, dtype=float)
    eta2 = eta * eta
    a2 = a * a
    return 6.0 * (eta2 * eta2 - 6.0 * eta2 * a2 + a2 * a2) / (eta2 + a2) ** 4


@lru_cache(maxsize=8)
def _laguerre_rule(nodes: int) -> Tuple[np.ndarray, np.ndarray]:
    # generalized rule for the weight t^3 exp(-t)
    t, w = roots_genlaguerre(nodes, 3.0)
    return t, w


def _laguerre_radial(F: Callable[[np.ndarray], np.ndarray], decay: float, nodes: int) -> float:
    """Integral of exp(-decay k) F(k) over k in (0, inf) on the t^3 exp(-t) Gauss-Laguerre nodes."""
    t, w = _laguerre_rule(nodes)
    return float(np.sum(w * np.asarray(F(t / decay)) / t**3) / decay)


def oscillation_panels(z: float, eta: float, guard: int) -> int:
    """Angular panels needed for `guard` panels per period of cos(2 k z x) at k ~ 3/eta."""
    if z <= 0.0:
        return 1
    return guard * max(1, math.ceil(3.0 * z / (math.pi * eta)))


def _material_points(medium: Medium) -> List[float]:
    """Decades around sqrt(n^2-1)/n^2, where r_tm changes sign and t_tm peaks."""
    if medium.is_conductor or medium.n <= 1.0:
        return []
    n = medium.n
    p = math.sqrt((n - 1.0) * (n + 1.0)) / (n * n) / 10.0
    points = []
    while p < 1.0:
        points.append(p)
        p *= 10.0
    return points


def _angular_breakpoints(spec: IntegrandSpec, config: QuadratureConfig) -> List[float]:
    """Seed breakpoints in x (or sin(phi)) at the material and oscillation scales."""
    points = _material_points(spec.medium)
    if spec.z > 0.0:
        p = spec.medium.eta / (2.0 * spec.z)
        while p < 1.0:
            points.append(p)
            p *= 2.0
    if config.radial_rule == "laguerre":
        panels = oscillation_panels(spec.z, spec.medium.eta, config.oscillation_guard)
        points.extend(j / panels for j in range(1, panels))
    return sorted({p for p in points if 0.0 < p < 1.0})


def _adaptive(f: Callable[[float], float], upper: float, points: List[float],
              config: QuadratureConfig) -> Tuple[float, float, int, bool]:
    limit = len(points) + 1 + config.angular_subdivision_limit
    result = quad(
        f, 0.0, upper,
        points=points or None,
        limit=limit,
        epsabs=TWO_PI * config.abs_tol / 4.0,
        epsrel=config.rel_tol / 2.0,
        full_output=1,
    )
    value, error, info = result[0], result[1], result[2]
    # quad appends a message only when the requested accuracy was not reached
    converged = len(result) == 3
    return value, error, int(info["neval"]), converged


def _check_height(z: float, eta: float, config: QuadratureConfig) -> None:
    if eta <= 0.0:
        raise InvalidDomain("quadrature requires eta > 0 (the eta = 0 integral diverges)")
    if z / eta > config.max_z_over_eta:
        raise NonConvergence(
            f"z/eta = {z / eta:g} exceeds the quadrature cap {config.max_z_over_eta:g}; use the closed forms"
        )
    if config.radial_rule == "laguerre" and z / eta > config.radial_nodes / 96.0:
        raise NonConvergence(
            f"the Gauss-Laguerre rule with {config.radial_nodes} nodes does not resolve z/eta = {z / eta:g}"
        )


def _integrate_traveling(spec: IntegrandSpec, config: QuadratureConfig) -> Tuple[float, float, int, bool]:
    eta, z = spec.medium.eta, spec.z
    points = _angular_breakpoints(spec, config)

    if config.radial_rule == "laguerre":
        def integrand(x: float) -> float:
            sin_theta = math.sqrt(1.0 - x * x)

            def radial(k):
                return field_integrand(k * sin_theta, k * x, spec) * k / sin_theta

            return _laguerre_radial(radial, eta, config.radial_nodes)
        evals_per_node = config.radial_nodes
    else:
        steady_moment = float(laplace_moment(eta))

        def integrand(x: float) -> float:
            steady, interference = traveling_coefficients(x, spec)
            return float(steady * steady_moment + interference * laplace_moment(eta, 2.0 * z * x))
        evals_per_node = 1

    value, error, neval, converged = _adaptive(integrand, 1.0, points, config)
    return value, error, neval * evals_per_node, converged


def _integrate_evanescent(spec: IntegrandSpec, config: QuadratureConfig) -> Tuple[float, float, int, bool]:
    medium = spec.medium
    if medium.is_conductor or medium.n == 1.0:
        return 0.0, 0.0, 0, True

    eta = medium.eta
    # near-critical TE modes sit within ~1/n of phi = pi/2
    points = sorted({math.asin(p) for p in _angular_breakpoints(spec, config)}
                    | {HALF_PI - p for p in _material_points(medium) if p < HALF_PI})

    if config.radial_rule == "laguerre":
        ratio = index_ratio(medium.n)

        def integrand(phi: float) -> float:
            sin_phi, cos_phi = math.sin(phi), math.cos(phi)
            if sin_phi >= _EDGE:
                return 0.0
            decay = eta * math.sqrt(1.0 - (ratio * sin_phi) ** 2)

            def radial(k_par):
                kappa = ratio * k_par * sin_phi
                return field_integrand(k_par, kappa, spec, evanescent=True) * ratio * k_par * cos_phi

            return _laguerre_radial(radial, decay, config.radial_nodes)
        evals_per_node = config.radial_nodes
    else:
        def integrand(phi: float) -> float:
            weight, exponent = evanescent_coefficients(phi, spec)
            return float(weight * 6.0 / exponent**4)
        evals_per_node = 1

    value, error, neval, converged = _adaptive(integrand, HALF_PI, points, config)
    return value, error, neval * evals_per_node, converged


def _assemble(spec: IntegrandSpec, config: QuadratureConfig,
              traveling: Tuple[float, float, int, bool],
              evanescent: Tuple[float, float, int, bool]) -> FluctuationResult:
    t_value, t_error, t_evals, t_ok = traveling
    e_value, e_error, e_evals, e_ok = evanescent
    channels = ChannelValues(traveling=t_value / TWO_PI, evanescent=e_value / TWO_PI)
    value = channels.traveling + channels.evanescent
    error = (t_error + e_error) / TWO_PI
    evaluations = t_evals + e_evals
    target = max(config.rel_tol * (abs(channels.traveling) + abs(channels.evanescent)), config.abs_tol)
    if not (t_ok and e_ok) or error > target:
        raise NonConvergence(
            f"quadrature did not reach the tolerance at z={spec.z:g}, n={spec.medium.n}, "
            f"eta={spec.medium.eta:g} (error {error:.3e} > target {target:.3e})",
            value=value,
            error_estimate=error,
            evaluations=evaluations,
        )
    return FluctuationResult(value=value, error_estimate=error, evaluations=evaluations, channels=channels)


def integrate_fluctuation(spec: IntegrandSpec, config: Optional[QuadratureConfig] = None) -> FluctuationResult:
    """
    Regulated fluctuation (1/2pi)[traveling + evanescent] in natural units.

    Args:
        spec: field, medium (n, eta > 0), height z and renormalization flag
        config: quadrature tolerances and budgets

    Returns:
        FluctuationResult with per-channel partial values

    Raises:
        InvalidDomain: eta <= 0
        NonConvergence: budget exhausted, or z/eta beyond the quadrature cap
    """
    config = config or QuadratureConfig()
    _check_height(spec.z, spec.medium.eta, config)
    return _assemble(spec, config, _integrate_traveling(spec, config), _integrate_evanescent(spec, config))


def integrate_renormalized_conductor(z: float, eta: float, field: FieldKind = FieldKind.ELECTRIC,
                                     config: Optional[QuadratureConfig] = None) -> FluctuationResult:
    """Renormalized n -> inf fluctuation from its single integrand -/+ 4 k_par k_z^2 / k cos(2 k_z z)."""
    config = config or QuadratureConfig()
    if z < 0.0:
        raise InvalidDomain("z must be >= 0")
    spec = IntegrandSpec(field=field, medium=Medium(n=INFINITE_INDEX, eta=max(eta, 0.0)), z=z, renormalized=True)
    _check_height(z, eta, config)
    return _assemble(spec, config, _integrate_traveling(spec, config), (0.0, 0.0, 0, True))


def radial_weight_self_test(config: Optional[QuadratureConfig] = None) -> float:
    """Integral of k_par k exp(-k) over the quarter-plane through the configured radial rule (exactly 6)."""
    config = config or QuadratureConfig()
    if config.radial_rule == "laguerre":
        def integrand(x: float) -> float:
            sin_theta = math.sqrt(1.0 - x * x)

            def radial(k):
                k_par, k_z = k * sin_theta, k * x
                return k_par * np.hypot(k_par, k_z) * k / sin_theta

            return _laguerre_radial(radial, 1.0, config.radial_nodes)
    else:
        def integrand(x: float) -> float:
            return float(laplace_moment(1.0))

    value, _ = quad(integrand, 0.0, 1.0)
    return value
