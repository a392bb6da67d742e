#!/usr/bin/env python3
"""
Test script for the fluctuation quadrature.
Compares against the closed forms and checks the limits in n.
"""

import sys
import os
import math

# Add src to path for imports
sys.path.append(os.path.join(os.path.dirname(__file__), 'src'))

from src.closed_forms import conductor_renorm, vacuum_fluct
from src.exceptions import InvalidDomain, NonConvergence
from src.models import FieldKind, IntegrandSpec, Medium, QuadratureConfig
from src.quadrature import (
    integrate_fluctuation,
    integrate_renormalized_conductor,
    laplace_moment,
    oscillation_panels,
    radial_weight_self_test,
)

ORACLE_CONFIG = QuadratureConfig(rel_tol=1e-8, abs_tol=1e-16, angular_subdivision_limit=200)
LARGE_N_CONFIG = QuadratureConfig(rel_tol=1e-7, angular_subdivision_limit=200)


def _raises(exc_type, fn, *args, **kwargs) -> bool:
    try:
        fn(*args, **kwargs)
    except exc_type:
        return True
    return False


def _dielectric(n, z, eta=1.0, field=FieldKind.ELECTRIC, renormalized=False, config=None):
    spec = IntegrandSpec(field=field, medium=Medium(n=n, eta=eta), z=z, renormalized=renormalized)
    return integrate_fluctuation(spec, config)


def test_laplace_moment():
    assert math.isclose(float(laplace_moment(1.0)), 6.0, rel_tol=1e-15)
    assert math.isclose(float(laplace_moment(2.0)), 6.0 / 16.0, rel_tol=1e-15)
    # 6 Re (1 - i)^-4 = 6 Re(-1/4)
    assert math.isclose(float(laplace_moment(1.0, 1.0)), -1.5, rel_tol=1e-15)
    assert oscillation_panels(0.0, 1.0, 8) == 1
    assert oscillation_panels(10.0, 1.0, 8) == 8 * math.ceil(30.0 / math.pi)
    print("✅ Laplace moments and panel counts")


def test_radial_self_test():
    assert math.isclose(radial_weight_self_test(), 6.0, rel_tol=1e-12)
    assert math.isclose(radial_weight_self_test(QuadratureConfig(radial_rule="laguerre")), 6.0, rel_tol=1e-10)
    print("✅ Radial weight self-test gives 6")


def test_vacuum():
    """n = 1 reproduces 12/(pi eta^4) at every height."""
    for z in (0.0, 0.7, 5.0):
        result = _dielectric(1.0, z)
        assert math.isclose(result.value, 12.0 / math.pi, rel_tol=1e-6)
        assert result.channels.evanescent == 0.0
    assert math.isclose(_dielectric(1.0, 0.0, eta=0.5).value, vacuum_fluct(0.5), rel_tol=1e-6)
    print("✅ Vacuum value 12/pi")


def test_conductor_examples():
    assert math.isclose(integrate_renormalized_conductor(0.0, 1.0).value, -4.0 / math.pi, rel_tol=1e-6)
    assert math.isclose(integrate_renormalized_conductor(0.5, 2.0).value, -4.0 / (125.0 * math.pi), rel_tol=1e-6)
    assert math.isclose(integrate_renormalized_conductor(10.0, 1.0).value, conductor_renorm(1.0, 10.0), rel_tol=1e-6)
    magnetic = integrate_renormalized_conductor(0.5, 1.0, FieldKind.MAGNETIC)
    assert math.isclose(magnetic.value, -1.0 / math.pi, rel_tol=1e-6)
    via_spec = _dielectric("inf", 0.5, renormalized=True)
    assert math.isclose(via_spec.value, 1.0 / math.pi, rel_tol=1e-6)
    raw = _dielectric("inf", 0.5)
    assert math.isclose(raw.value, 13.0 / math.pi, rel_tol=1e-6)
    print("✅ Conductor examples from the quadrature")


def test_conductor_oracle_grid():
    """Quadrature against the closed form over eta x z/eta."""
    for eta in (0.5, 1.0, 2.0):
        for ratio in (0.0, 0.25, 0.5, 1.0, 2.0, 5.0, 20.0):
            z = ratio * eta
            for field in FieldKind:
                result = integrate_renormalized_conductor(z, eta, field, ORACLE_CONFIG)
                expected = conductor_renorm(eta, z, field)
                assert math.isclose(result.value, expected, rel_tol=1e-6), (eta, z, field, result.value, expected)
    print("✅ Conductor oracle grid (42 points)")


def test_error_honesty():
    """The claimed error covers the true deviation on at least 95% of the oracle grid."""
    covered = 0
    total = 0
    for eta in (0.5, 1.0, 2.0):
        for ratio in (0.0, 0.25, 0.5, 1.0, 2.0, 5.0, 20.0):
            z = ratio * eta
            result = integrate_renormalized_conductor(z, eta)
            assert result.error_estimate >= 0.0
            total += 1
            if abs(result.value - conductor_renorm(eta, z)) <= result.error_estimate:
                covered += 1
    assert covered >= 0.95 * total, f"{covered}/{total}"
    print(f"✅ Error estimates cover {covered}/{total} oracle points")


def test_quadrature_duality():
    for z in (0.0, 0.3, 1.7):
        electric = integrate_renormalized_conductor(z, 1.0, FieldKind.ELECTRIC)
        magnetic = integrate_renormalized_conductor(z, 1.0, FieldKind.MAGNETIC)
        assert math.isclose(electric.value, -magnetic.value, rel_tol=1e-12)
    print("✅ Quadrature E/B duality")


def test_scaling_covariance():
    """value(lambda eta, lambda z) = value(eta, z) / lambda^4 for a dielectric, lambda in {0.5, 2}."""
    base = _dielectric(1.5, 0.4)
    for factor in (0.5, 2.0):
        scaled = _dielectric(1.5, 0.4 * factor, eta=factor)
        assert math.isclose(scaled.value, base.value / factor**4, rel_tol=1e-7), factor
    print("✅ Scaling covariance for n = 1.5")


def test_rules_agree():
    """Laplace moments and Gauss-Laguerre nodes give the same dielectric value at small z."""
    laguerre = QuadratureConfig(radial_rule="laguerre")
    for field in FieldKind:
        a = _dielectric(1.5, 0.2, field=field)
        b = _dielectric(1.5, 0.2, field=field, config=laguerre)
        assert math.isclose(a.value, b.value, rel_tol=1e-7)
        assert math.isclose(a.channels.evanescent, b.channels.evanescent, rel_tol=1e-7)
    print("✅ Radial rules agree")


def test_evanescent_channel():
    assert _dielectric(1.0, 0.5).channels.evanescent == 0.0
    assert _dielectric("inf", 0.5).channels.evanescent == 0.0
    values = [_dielectric(n, 0.5, config=LARGE_N_CONFIG).channels.evanescent for n in (10.0, 100.0, 1e3, 1e4)]
    assert all(v > 0.0 for v in values)
    assert all(a > b for a, b in zip(values, values[1:]))
    print("✅ Evanescent channel vanishes for n = 1 and decays with n at z > 0")


def test_surface_evanescent_growth():
    """At z = 0 near-critical TE modes make the evanescent channel grow as 4 n / (pi eta^4)."""
    result = _dielectric(1e3, 0.0, config=LARGE_N_CONFIG)
    assert math.isclose(result.channels.evanescent, 4.0e3 / math.pi, rel_tol=1e-2)
    print("✅ Evanescent channel at the surface grows linearly in n")


def test_conductor_limit():
    """Renormalized electric fluctuation approaches the conductor one for z > 0."""
    for z in (0.5, 1.0, 2.0):
        result = _dielectric(1e4, z, renormalized=True, config=LARGE_N_CONFIG)
        assert math.isclose(result.value, conductor_renorm(1.0, z), rel_tol=1e-2), (z, result.value)

    coarse = _dielectric(1e2, 1.0, renormalized=True, config=LARGE_N_CONFIG)
    fine = _dielectric(1e4, 1.0, renormalized=True, config=LARGE_N_CONFIG)
    target = conductor_renorm(1.0, 1.0)
    assert abs(fine.value - target) < abs(coarse.value - target)

    for z in (0.5, 1.0, 2.0):
        very_fine = _dielectric(1e6, z, renormalized=True, config=LARGE_N_CONFIG)
        assert math.isclose(very_fine.value, conductor_renorm(1.0, z), rel_tol=1e-3), (z, very_fine.value)
    print("✅ n -> inf approaches the conductor away from the surface")


def test_vacuum_null():
    """n = 1 + 1e-6 is indistinguishable from the vacuum."""
    for z in (0.0, 1.0):
        result = _dielectric(1.0 + 1e-6, z, renormalized=True)
        assert abs(result.value) <= 1e-4 * 12.0 / math.pi, (z, result.value)
    print("✅ Near-vacuum null test")


def test_errors():
    assert _raises(InvalidDomain, _dielectric, 1.5, 0.5, eta=0.0)
    assert _raises(NonConvergence, _dielectric, 1.5, 1001.0)
    assert _raises(NonConvergence, integrate_renormalized_conductor, 2000.0, 1.0)
    assert _raises(InvalidDomain, integrate_renormalized_conductor, -1.0, 1.0)
    # the Gauss-Laguerre rule refuses heights it cannot resolve
    assert _raises(NonConvergence, _dielectric, 1.5, 5.0, config=QuadratureConfig(radial_rule="laguerre"))
    print("✅ Domain and convergence errors")


def main():
    """Run all quadrature tests."""
    print("🧪 Testing Quadrature")
    print("=" * 50)

    tests = [
        test_laplace_moment,
        test_radial_self_test,
        test_vacuum,
        test_conductor_examples,
        test_conductor_oracle_grid,
        test_error_honesty,
        test_quadrature_duality,
        test_scaling_covariance,
        test_rules_agree,
        test_evanescent_channel,
        test_surface_evanescent_growth,
        test_conductor_limit,
        test_vacuum_null,
        test_errors,
    ]

    passed = 0
    for test in tests:
        try:
            test()
            passed += 1
        except (AssertionError, NonConvergence) as e:
            print(f"❌ {test.__name__} failed: {e}")

    print(f"\n📊 Test Results: {passed}/{len(tests)} tests passed")
    return passed == len(tests)


if __name__ == "__main__":
    success = main()
    sys.exit(0 if success else 1)
