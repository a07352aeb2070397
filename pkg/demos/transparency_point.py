"""Walk through the transparency point of a driven three-level medium.

With the strong-field drive on and no damping, the linear response
vanishes identically where the two-photon detuning matches the relative
detuning (delta = Delta).  This script locates that point three ways:
closed form, dense sweep + feature detector, and the refractive index /
absorption it implies.
"""

import dataclasses
import math

import numpy as np

from eitm import (
    DampingMode,
    Model,
    PhysicalConstants,
    ScanSpec,
    ThreeLevelParams,
    absorption_linear,
    chi1_model2,
    cramer_rao_bound,
    linear_index,
    normalize,
    qfi_pure,
    run_scan,
    steady_amplitudes_model2,
)

K = PhysicalConstants()

params = ThreeLevelParams(omega=8.0, omega_s=4.0, omega_da=20.0,
                          omega_dc=4.0, rabi=0.00001, rabi_s=10.0)

# closed form: delta - Delta = 2*omega - omega_da + omega_dc = 0
omega_clear = (params.omega_da - params.omega_dc) / 2
print(f"transparency expected at omega = {omega_clear}")

chi = chi1_model2(params, K, DampingMode.OFF)
print(f"chi1 at that point        = {chi.value}")
n0 = linear_index(chi)
print(f"refractive index          = {n0.value}")
alpha = absorption_linear(chi, 2 * params.omega + params.omega_s, K)
print(f"linear absorption         = {alpha}")

# the sweep engine should find the same point as a zero crossing
spec = ScanSpec(model=Model.THREE_LEVEL, params=params, swept="omega",
                grid_min=6.0, grid_max=10.0, points=501,
                quantities=("chi1_re", "qfi_omega"),
                damping=DampingMode.OFF)
result = run_scan(spec)
features = result.features["chi1_re"]
for z in features.zeros:
    print(f"detector: zero crossing at omega = {z.location:.6f} "
          f"(cell {z.cell:.2f})")
for p in features.poles:
    print(f"detector: pole crossing at omega = {p.location:.6f}")
if not features.poles:
    print("detector: no pole crossings in the window (as expected)")

# what the transparency point costs in estimation precision
def state(p):
    return normalize(steady_amplitudes_model2(p, DampingMode.OFF))

for omega in (omega_clear, omega_clear + 0.8):
    p = dataclasses.replace(params, omega=omega)
    fisher = qfi_pure(state, "omega", p)
    bound = cramer_rao_bound(fisher)
    print(f"omega = {omega:4.1f}: F = {fisher:.6e}, "
          f"single-shot bound = {bound:.6e}")

# the qfi curve dips where the medium goes transparent
i_min = int(np.nanargmin(result.curves["qfi_omega"]))
print(f"qfi minimum on the grid at omega = {result.grid[i_min]:.4f}")
