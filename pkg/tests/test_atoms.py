"""Steady-state amplitude tests.

The generic-parameter expected values were frozen from an independent
high-precision evaluation (mpmath at 60 digits) of the same closed-form
expressions, written down before the implementation ran.
"""

import cmath
import math
import random

import pytest

from eitm import (
    AtomState,
    DampingMode,
    DegenerateInput,
    FourLevelParams,
    Model,
    PoleError,
    ThreeLevelParams,
    detunings_model1,
    detunings_model2,
    normalize,
    pure_density,
    steady_amplitudes_model1,
    steady_amplitudes_model2,
)

# one generic damped configuration per model, nothing special about it
P1 = FourLevelParams(omega=2.5, omega_s=1.5, omega_ba=2.0, omega_ca=4.0,
                     omega_dc=1.7, rabi_ba=0.5 + 0.2j, rabi_cb=0.7,
                     rabi_dc=1.2 - 0.3j, gamma_c=0.4, gamma_d=0.9)
P1_CB = -1.0 - 0.4j
P1_CC = 0.263837100691201195591257238931 - 0.488182327666728937044647861012j
P1_CD = 0.31886418830562301513170184943 + 0.472490192415467961890528675509j

P2 = ThreeLevelParams(omega=2.1, omega_s=1.9, omega_da=5.0, omega_dc=2.0,
                      rabi=0.75 + 0.1j, rabi_s=1.5 - 0.5j,
                      gamma_c=0.2, gamma_d=0.6)
P2_CD = 0.345896798259247746347528753497 + 0.457802300279763755051290021759j
P2_CC = -0.351258936897730805097917314268 - 0.657833385141436120609263288778j

# weak-drive three-level point on the fig5a curve at rabi_s = 10
P5 = ThreeLevelParams(omega=4.65, omega_s=1.81, omega_da=20.0, omega_dc=1.8,
                      rabi=0.00001, rabi_s=10.0)
P5_CD = -4.26265625748359595766080750994e-6
P5_CC = -4.78950141290291680636045787634e-6


def test_model1_generic_damped_amplitudes():
    s = steady_amplitudes_model1(P1, DampingMode.ON)
    ca, cb, cc, cd = s.amplitudes
    assert ca == 1.0
    assert abs(cb - P1_CB) < 1e-14
    assert abs(cc - P1_CC) < 1e-14
    assert abs(cd - P1_CD) < 1e-14
    assert s.normalized is False
    assert s.model is Model.FOUR_LEVEL


def test_model2_generic_damped_amplitudes():
    s = steady_amplitudes_model2(P2, DampingMode.ON)
    ca, cd, cc = s.amplitudes
    assert ca == 1.0
    assert abs(cd - P2_CD) < 1e-14
    assert abs(cc - P2_CC) < 1e-14
    assert s.model is Model.THREE_LEVEL


def test_model2_weak_drive_amplitudes():
    s = steady_amplitudes_model2(P5, DampingMode.OFF)
    _, cd, cc = s.amplitudes
    assert abs(cd - P5_CD) < 1e-18
    assert abs(cc - P5_CC) < 1e-18


def test_ground_amplitude_is_exactly_one():
    rng = random.Random(20260816)
    for _ in range(50):
        p1 = FourLevelParams(
            omega=rng.uniform(1, 3), omega_s=rng.uniform(1, 3),
            omega_ba=rng.uniform(3.2, 4.0), omega_ca=rng.uniform(5.0, 5.8),
            omega_dc=rng.uniform(0.5, 2.5),
            rabi_ba=complex(rng.uniform(-1, 1), rng.uniform(-1, 1)),
            rabi_cb=rng.uniform(0.1, 1.0), rabi_dc=rng.uniform(0.5, 2.0),
            gamma_c=rng.uniform(0, 1), gamma_d=rng.uniform(0, 1))
        p2 = ThreeLevelParams(
            omega=rng.uniform(1, 3), omega_s=rng.uniform(1, 3),
            omega_da=rng.uniform(14, 16), omega_dc=rng.uniform(0.5, 2.5),
            rabi=complex(rng.uniform(-1, 1), rng.uniform(-1, 1)),
            rabi_s=rng.uniform(1.0, 3.0),
            gamma_c=rng.uniform(0, 1), gamma_d=rng.uniform(0, 1))
        for mode in (DampingMode.OFF, DampingMode.ON):
            assert steady_amplitudes_model1(p1, mode).amplitudes[0] == 1.0
            assert steady_amplitudes_model2(p2, mode).amplitudes[0] == 1.0


def test_evaluation_is_idempotent():
    a = steady_amplitudes_model1(P1, DampingMode.ON).amplitudes
    b = steady_amplitudes_model1(P1, DampingMode.ON).amplitudes
    assert a == b
    c = steady_amplitudes_model2(P2, DampingMode.ON).amplitudes
    d = steady_amplitudes_model2(P2, DampingMode.ON).amplitudes
    assert c == d


def test_damping_off_equals_zero_rates():
    import dataclasses
    p_zero = dataclasses.replace(P1, gamma_c=0.0, gamma_d=0.0)
    off = steady_amplitudes_model1(p_zero, DampingMode.OFF).amplitudes
    on = steady_amplitudes_model1(p_zero, DampingMode.ON).amplitudes
    assert all(abs(x - y) <= 1e-15 for x, y in zip(off, on))

    p2_zero = dataclasses.replace(P2, gamma_c=0.0, gamma_d=0.0)
    off2 = steady_amplitudes_model2(p2_zero, DampingMode.OFF).amplitudes
    on2 = steady_amplitudes_model2(p2_zero, DampingMode.ON).amplitudes
    assert all(abs(x - y) <= 1e-15 for x, y in zip(off2, on2))


def test_amplitudes_depend_only_on_detunings():
    # shift all frequencies so every detuning stays put
    import dataclasses
    t = 0.37
    shifted1 = dataclasses.replace(P1, omega=P1.omega + t,
                                   omega_ba=P1.omega_ba + t,
                                   omega_ca=P1.omega_ca + 2 * t)
    a = steady_amplitudes_model1(P1, DampingMode.ON).amplitudes
    b = steady_amplitudes_model1(shifted1, DampingMode.ON).amplitudes
    assert all(abs(x - y) < 1e-12 for x, y in zip(a, b))

    shifted2 = dataclasses.replace(P2, omega=P2.omega + t,
                                   omega_da=P2.omega_da + 2 * t)
    c = steady_amplitudes_model2(P2, DampingMode.ON).amplitudes
    d = steady_amplitudes_model2(shifted2, DampingMode.ON).amplitudes
    assert all(abs(x - y) < 1e-12 for x, y in zip(c, d))


def test_model1_detuning_storage_under_damping():
    d = detunings_model1(P1, DampingMode.ON)
    assert d.delta1 == P1.omega - P1.omega_ba
    assert d.delta2.imag == P1.gamma_c
    assert (d.delta2 + d.Delta).imag == pytest.approx(P1.gamma_d, abs=1e-15)
    undamped = detunings_model1(P1, DampingMode.OFF)
    assert undamped.delta2.imag == 0.0
    assert undamped.Delta.imag == 0.0


def test_model2_detuning_storage_under_damping():
    d = detunings_model2(P2, DampingMode.ON)
    assert d.delta.imag == P2.gamma_d
    assert (d.delta - d.Delta).imag == pytest.approx(P2.gamma_c, abs=1e-15)
    assert d.delta.real == 2 * P2.omega + P2.omega_s - P2.omega_da


def test_model2_zero_relative_detuning_kills_cd():
    # delta - Delta = 2w - w_da + w_dc = 0 makes the d-level amplitude vanish
    p = ThreeLevelParams(omega=8.0, omega_s=4.0, omega_da=20.0, omega_dc=4.0,
                         rabi=0.01, rabi_s=10.0)
    s = steady_amplitudes_model2(p, DampingMode.OFF)
    assert s.amplitudes[1] == 0.0


def test_model1_pole_guards():
    import dataclasses
    with pytest.raises(PoleError):
        steady_amplitudes_model1(
            dataclasses.replace(P1, omega_ba=P1.omega), DampingMode.ON)
    # delta2 = 0 without damping
    with pytest.raises(PoleError):
        steady_amplitudes_model1(
            dataclasses.replace(P1, omega_ca=2 * P1.omega, gamma_c=0.0,
                                gamma_d=0.0), DampingMode.ON)
    # coupled denominator: delta2 = 1, Delta = 0, |rabi_dc| = 1
    p = FourLevelParams(omega=2.5, omega_s=1.0, omega_ba=2.0, omega_ca=4.0,
                        omega_dc=1.0, rabi_ba=0.1, rabi_cb=0.1, rabi_dc=1.0)
    with pytest.raises(PoleError):
        steady_amplitudes_model1(p, DampingMode.OFF)


def test_model2_degenerate_and_pole_guards():
    import dataclasses
    with pytest.raises(DegenerateInput):
        steady_amplitudes_model2(
            dataclasses.replace(P2, rabi_s=0.0), DampingMode.ON)
    # |rabi_s|^2 = delta * (delta - Delta): delta = 2, Delta = 0, rabi_s = 2
    p = ThreeLevelParams(omega=2.0, omega_s=1.0, omega_da=3.0, omega_dc=1.0,
                         rabi=0.1, rabi_s=2.0)
    with pytest.raises(PoleError):
        steady_amplitudes_model2(p, DampingMode.OFF)


def test_pole_tolerance_is_configurable():
    import dataclasses
    p = dataclasses.replace(P1, omega_ba=P1.omega - 1e-6)
    steady_amplitudes_model1(p, DampingMode.ON)  # fine at the default
    with pytest.raises(PoleError):
        steady_amplitudes_model1(p, DampingMode.ON, pole_tol=1e-3)


def test_normalize_unit_norm_and_phase():
    s = steady_amplitudes_model1(P1, DampingMode.ON)
    n = normalize(s)
    assert n.normalized is True
    assert math.isclose(n.norm_squared(), 1.0, rel_tol=0, abs_tol=1e-14)
    # global phase untouched: components keep their original phases
    for raw, scaled in zip(s.amplitudes, n.amplitudes):
        if abs(raw) > 1e-12:
            assert abs(cmath.phase(raw) - cmath.phase(scaled)) < 1e-12


def test_normalize_rejects_zero_state():
    with pytest.raises(DegenerateInput):
        normalize(AtomState(amplitudes=(0.0, 0.0), normalized=False))


def test_pure_density_projector_properties():
    import numpy as np
    rho = pure_density(normalize(steady_amplitudes_model1(P1, DampingMode.ON)))
    assert rho.shape == (4, 4)
    assert abs(np.trace(rho) - 1.0) < 1e-12
    assert np.max(np.abs(rho - rho.conj().T)) < 1e-15
    assert np.max(np.abs(rho @ rho - rho)) < 1e-12


def test_pure_density_requires_normalized_state():
    with pytest.raises(ValueError):
        pure_density(steady_amplitudes_model1(P1, DampingMode.ON))


def test_parameter_validation():
    with pytest.raises(ValueError):
        FourLevelParams(omega=float("nan"), omega_s=1, omega_ba=2,
                        omega_ca=4, omega_dc=1, rabi_ba=1, rabi_cb=1,
                        rabi_dc=1)
    with pytest.raises(ValueError):
        ThreeLevelParams(omega=1, omega_s=1, omega_da=5, omega_dc=2,
                         rabi=1, rabi_s=1, gamma_c=-0.1)
    with pytest.raises(ValueError):
        FourLevelParams(omega=1, omega_s=1, omega_ba=2, omega_ca=4,
                        omega_dc=1, rabi_ba="text", rabi_cb=1, rabi_dc=1)
