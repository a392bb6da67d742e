"""
Closed-form fluctuations of the vacuum, the n -> inf conductor and its ideal
(eta -> 0) limit, in natural units (hbar = c = 1).

These evaluators share no code with the quadrature path so that each can
check the other.
"""

import math

from src.exceptions import DivergentLimit, InvalidDomain, SurfaceDivergence
from src.models import ClosedFormQuery, ClosedFormVariant, FieldKind

SQRT12 = math.sqrt(12.0)


def _sign(field: FieldKind) -> float:
    # renormalized electric and magnetic conductor terms are exact opposites
    return 1.0 if field == FieldKind.ELECTRIC else -1.0


def _check_eta(eta: float) -> None:
    if eta < 0.0 or math.isnan(eta):
        raise InvalidDomain(f"eta must be >= 0, got {eta}")
    if eta == 0.0:
        raise DivergentLimit("the regulated closed forms diverge at eta = 0; use ideal_renorm")


def _check_height(z: float) -> None:
    if z < 0.0 or math.isnan(z):
        raise InvalidDomain(f"z must be >= 0, got {z}")


def vacuum_fluct(eta: float, field: FieldKind = FieldKind.ELECTRIC) -> float:
    """Free-vacuum fluctuation 12/(pi eta^4), the same for both fields."""
    _check_eta(eta)
    return 12.0 / (math.pi * eta**4)


def conductor_renorm(eta: float, z: float, field: FieldKind = FieldKind.ELECTRIC) -> float:
    """
    Renormalized conductor fluctuation (4/pi)(12 z^2 - eta^2)/(4 z^2 + eta^2)^3.

    Positive for the electric field above z = eta/sqrt(12); the magnetic
    field carries the opposite sign.
    """
    _check_eta(eta)
    _check_height(z)
    # factored numerator stays accurate next to its root z = eta/sqrt(12)
    numerator = (SQRT12 * z - eta) * (SQRT12 * z + eta)
    return _sign(field) * 4.0 / math.pi * numerator / (4.0 * z * z + eta * eta) ** 3


def conductor_raw(eta: float, z: float, field: FieldKind = FieldKind.ELECTRIC) -> float:
    return vacuum_fluct(eta, field) + conductor_renorm(eta, z, field)


def ideal_renorm(z: float, field: FieldKind = FieldKind.ELECTRIC) -> float:
    """Ideal-conductor limit +/- 3/(4 pi z^4)."""
    _check_height(z)
    if z == 0.0:
        raise SurfaceDivergence("the ideal-conductor fluctuation diverges at the interface z = 0")
    return _sign(field) * 3.0 / (4.0 * math.pi * z**4)


def conductor_renorm_antiderivative(eta: float, z: float, field: FieldKind = FieldKind.ELECTRIC) -> float:
    """Primitive -(4/pi) z/(4 z^2 + eta^2)^2 of conductor_renorm in z; zero at z = 0 and z -> inf."""
    _check_eta(eta)
    _check_height(z)
    return -_sign(field) * 4.0 / math.pi * z / (4.0 * z * z + eta * eta) ** 2


def evaluate(query: ClosedFormQuery) -> float:
    """Dispatch a ClosedFormQuery to its evaluator."""
    if query.variant == ClosedFormVariant.VACUUM:
        return vacuum_fluct(query.eta, query.field)
    if query.variant == ClosedFormVariant.CONDUCTOR_RAW:
        return conductor_raw(query.eta, query.z, query.field)
    if query.variant == ClosedFormVariant.CONDUCTOR_RENORM:
        return conductor_renorm(query.eta, query.z, query.field)
    return ideal_renorm(query.z, query.field)
