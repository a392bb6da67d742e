#!/usr/bin/env python3
"""
Test script for mode kinematics and amplitude factors.
Covers wavevectors, Fresnel-type factors, flux conservation and mode intensities.
"""

import sys
import os
import math

import numpy as np

# Add src to path for imports
sys.path.append(os.path.join(os.path.dirname(__file__), 'src'))

from src.exceptions import InvalidDomain
from src.models import Channel, FieldKind, ModeFamily, Polarization
from src.modes import (
    dielectric_kz,
    evanescent_factors,
    evanescent_kappa_max,
    evanescent_wavevectors,
    fresnel_factors,
    l_channel_measure,
    mode_intensity,
    traveling_wavevectors,
)


def _raises(exc_type, fn, *args, **kwargs) -> bool:
    try:
        fn(*args, **kwargs)
    except exc_type:
        return True
    return False


def test_dielectric_kz():
    """Normal wavenumber inside the dielectric."""
    assert dielectric_kz(0.0, 1.0, 2.0) == 2.0
    assert dielectric_kz(1.0, 1.0, 1.0) == 1.0
    assert math.isclose(dielectric_kz(3.0, 4.0, 2.0), math.sqrt(91.0), rel_tol=1e-15)
    assert math.isinf(dielectric_kz(1.0, 1.0, "inf"))
    assert _raises(InvalidDomain, dielectric_kz, 1.0, 1.0, 0.5)
    assert _raises(InvalidDomain, dielectric_kz, -1.0, 1.0, 2.0)
    print("✅ dielectric_kz examples and domain checks pass")


def test_evanescent_kappa_max():
    """Upper edge of the evanescent strip."""
    assert evanescent_kappa_max(1.0, 1.0) == 0.0
    assert math.isclose(evanescent_kappa_max(1.0, math.sqrt(2.0)), 1.0 / math.sqrt(2.0), rel_tol=1e-12)
    assert evanescent_kappa_max(2.0, "inf") == 2.0
    for n in [1.0001, 1.5, 10.0, 1e6]:
        assert evanescent_kappa_max(1.0, n) < 1.0
    print("✅ evanescent_kappa_max examples pass")


def test_fresnel_examples():
    """Reflection and transmission factors at known points."""
    vacuum = fresnel_factors(0.7, 1.3, 1.0)
    assert vacuum.r_te == 0.0 and vacuum.r_tm == 0.0
    assert vacuum.t_te == 1.0 and vacuum.t_tm == 1.0

    normal = fresnel_factors(0.0, 1.0, 2.0)
    assert math.isclose(normal.r_te, -1.0 / 3.0, rel_tol=1e-15)
    assert math.isclose(normal.r_tm, 1.0 / 3.0, rel_tol=1e-15)

    conductor = fresnel_factors(3.0, 4.0, "inf")
    assert conductor.r_te == -1.0 and conductor.r_tm == 1.0
    assert conductor.t_te == 2.0
    assert math.isclose(conductor.t_tm, 2.0 * 5.0 / 4.0, rel_tol=1e-15)

    assert _raises(InvalidDomain, fresnel_factors, 1.0, 0.0, 2.0)
    print("✅ fresnel_factors examples pass")


def test_flux_conservation():
    """r^2 + (k_z/k_dz) t^2 = 1 for both polarizations on random samples."""
    rng = np.random.default_rng(12345)
    for n in [1.0, 1.000001, 1.5, 4.0, 1e3]:
        k_par = rng.uniform(0.0, 10.0, 2000)
        k_z = rng.uniform(1e-3, 10.0, 2000)
        factors = fresnel_factors(k_par, k_z, n)
        k_dz = dielectric_kz(k_par, k_z, n)
        te = factors.r_te**2 + (k_z / k_dz) * factors.t_te**2
        tm = factors.r_tm**2 + (k_z / k_dz) * factors.t_tm**2
        assert np.max(np.abs(te - 1.0)) < 1e-12
        assert np.max(np.abs(tm - 1.0)) < 1e-12
    print("✅ Flux conservation holds on 10^4 samples")


def test_monotonic_in_n():
    """r_te decreases and r_tm increases with n at fixed incidence."""
    indices = [1.0, 1.5, 2.0, 5.0, 10.0, 100.0]
    r_te = [fresnel_factors(1.0, 1.0, n).r_te for n in indices]
    r_tm = [fresnel_factors(1.0, 1.0, n).r_tm for n in indices]
    assert all(a > b for a, b in zip(r_te, r_te[1:]))
    assert all(a < b for a, b in zip(r_tm, r_tm[1:]))
    print("✅ Reflection factors are monotonic in n")


def test_channel_continuity():
    """Evanescent transmission moduli at kappa -> 0 match traveling ones at k_z -> 0."""
    n = 1.7
    t_te2, t_tm2 = evanescent_factors(1.0, 1e-9, n)
    traveling = fresnel_factors(1.0, 1e-9, n)
    assert math.isclose(t_te2, traveling.t_te**2, rel_tol=1e-6)
    assert math.isclose(t_tm2, traveling.t_tm**2, rel_tol=1e-6)
    assert math.isclose(t_tm2, 4.0 * n * n, rel_tol=1e-6)
    assert _raises(InvalidDomain, evanescent_factors, 1.0, 0.9, 1.5)
    print("✅ Channel boundary continuity holds")


def test_l_channel_measure():
    assert math.isclose(l_channel_measure(0.3, 0.8, 1.0), 1.0, rel_tol=1e-15)
    assert math.isclose(l_channel_measure(0.0, 1.0, 2.0), 2.0, rel_tol=1e-15)
    print("✅ L-channel measure examples pass")


def test_wavevectors():
    """Kinematic records on both channels."""
    wv = traveling_wavevectors(3.0, 4.0, 2.0)
    assert wv.k == 5.0 and wv.channel == Channel.R_TRAVELING
    assert math.isclose(wv.k_dz, math.sqrt(91.0), rel_tol=1e-15)

    ev = evanescent_wavevectors(1.0, 0.5, math.sqrt(2.0))
    assert ev.channel == Channel.L_EVANESCENT
    assert math.isclose(ev.k_dz, 1.0 / math.sqrt(2.0), rel_tol=1e-12)
    assert math.isclose(ev.k, math.sqrt(0.75), rel_tol=1e-15)
    assert _raises(InvalidDomain, evanescent_wavevectors, 1.0, 0.75, math.sqrt(2.0))
    assert _raises(InvalidDomain, evanescent_wavevectors, 1.0, 0.1, "inf")
    print("✅ Wavevector constructors pass")


def test_mode_intensity():
    """Intensity examples for R and L families."""
    assert math.isclose(mode_intensity(ModeFamily.R, Polarization.TE, 0.4, 0.9, 2.5, 1.0), 1.0, rel_tol=1e-15)
    assert math.isclose(mode_intensity(ModeFamily.R, Polarization.TE, 0.0, 1.0, 0.0, 2.0), 4.0 / 9.0, rel_tol=1e-14)
    assert math.isclose(mode_intensity(ModeFamily.L, Polarization.TE, 0.4, 0.9, 1.0, 1.0), 1.0, rel_tol=1e-15)
    assert mode_intensity(ModeFamily.L, Polarization.TM, 0.4, 0.9, 1.0, "inf") == 0.0
    # standing wave at a conductor: the magnetic TM intensity at z = 0 is 4
    assert math.isclose(
        mode_intensity(ModeFamily.R, Polarization.TM, 0.5, 0.5, 0.0, "inf", field=FieldKind.MAGNETIC),
        4.0, rel_tol=1e-15,
    )
    assert _raises(InvalidDomain, mode_intensity, ModeFamily.R, Polarization.TE, 1.0, 1.0, -0.1, 2.0)
    print("✅ mode_intensity examples pass")


def main():
    """Run all mode tests."""
    print("🧪 Testing Modes")
    print("=" * 50)

    tests = [
        test_dielectric_kz,
        test_evanescent_kappa_max,
        test_fresnel_examples,
        test_flux_conservation,
        test_monotonic_in_n,
        test_channel_continuity,
        test_l_channel_measure,
        test_wavevectors,
        test_mode_intensity,
    ]

    passed = 0
    for test in tests:
        try:
            test()
            passed += 1
        except AssertionError as e:
            print(f"❌ {test.__name__} failed: {e}")

    print(f"\n📊 Test Results: {passed}/{len(tests)} tests passed")
    return passed == len(tests)


if __name__ == "__main__":
    success = main()
    sys.exit(0 if success else 1)
