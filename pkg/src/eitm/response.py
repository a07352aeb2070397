"""Optical response of the two media: susceptibilities, indices, absorption.

Everything is evaluated in reduced units; the dipole/density prefactors
default to 1 and only matter if a caller supplies physical constants.
"""

from __future__ import annotations

import cmath
import enum
from dataclasses import dataclass

from .atoms import (DEFAULT_POLE_TOL, DampingMode, FourLevelParams, Model,
                    ThreeLevelParams, _abs2, detunings_model1,
                    detunings_model2)
from .errors import DegenerateInput, PoleError

__all__ = [
    "Order",
    "Susceptibility",
    "PhysicalConstants",
    "LinearIndex",
    "chi3_model1",
    "chi1_model2",
    "linear_index",
    "nonlinear_index",
    "wave_intensity",
    "absorption_linear",
    "absorption_saturated",
]


class Order(enum.Enum):
    LINEAR = 1
    THIRD_ORDER = 3


@dataclass(frozen=True)
class Susceptibility:
    value: complex
    order: Order
    damped: bool
    model: Model


@dataclass(frozen=True)
class PhysicalConstants:
    """Number density, dipole elements and unit constants, all default 1."""

    N: float = 1.0
    mu_ad: complex = 1.0
    mu_dc: complex = 1.0
    mu_cb: complex = 1.0
    mu_ba: complex = 1.0
    mu_da: complex = 1.0
    epsilon0: float = 1.0
    hbar: float = 1.0
    c: float = 1.0

    def __post_init__(self):
        for name in ("N", "epsilon0", "hbar", "c"):
            if not float(getattr(self, name)) > 0:
                raise ValueError(f"{name} must be strictly positive")


@dataclass(frozen=True)
class LinearIndex:
    """Principal-branch refractive index with physical-regime flags."""

    value: complex
    negative_permittivity: bool
    subluminal: bool


def chi3_model1(p: FourLevelParams, k: PhysicalConstants = PhysicalConstants(),
                mode: DampingMode = DampingMode.OFF,
                pole_tol: float = DEFAULT_POLE_TOL) -> Susceptibility:
    """Third-order susceptibility of the four-level medium.

    chi3 = -N mu_ad mu_dc mu_cb mu_ba /
           (3 eps0 hbar delta1 [delta2 (delta2+Delta) - |rabi_dc|^2])
    with the damping shifts folded into delta2 and Delta when mode is On.
    """
    d = detunings_model1(p, mode)
    if abs(d.delta1) < pole_tol:
        raise PoleError(f"delta1 = {d.delta1!r} is inside the pole tolerance")
    denom = d.delta2 * (d.delta2 + d.Delta) - _abs2(p.rabi_dc)
    if abs(denom) < pole_tol:
        raise PoleError(f"coupled denominator {denom!r} is inside the pole tolerance")
    value = -(k.N * k.mu_ad * k.mu_dc * k.mu_cb * k.mu_ba) / (
        3 * k.epsilon0 * k.hbar * d.delta1 * denom)
    return Susceptibility(value=complex(value), order=Order.THIRD_ORDER,
                          damped=(mode is DampingMode.ON), model=Model.FOUR_LEVEL)


def chi1_model2(p: ThreeLevelParams, k: PhysicalConstants = PhysicalConstants(),
                mode: DampingMode = DampingMode.OFF,
                pole_tol: float = DEFAULT_POLE_TOL) -> Susceptibility:
    """Linear susceptibility of the three-level medium.

    chi1 = (N |mu_da|^2 / eps0 hbar) (delta - Delta) /
           (|rabi_s|^2 - delta (delta - Delta))
    where delta carries +i*gamma_d and delta - Delta carries +i*gamma_c
    when mode is On.  Undamped values are purely real away from poles.
    """
    d = detunings_model2(p, mode)
    denom = _abs2(p.rabi_s) - d.delta * (d.delta - d.Delta)
    if abs(denom) < pole_tol:
        raise PoleError(f"denominator {denom!r} is inside the pole tolerance")
    value = (k.N * _abs2(k.mu_da) / (k.epsilon0 * k.hbar)) * (
        d.delta - d.Delta) / denom
    return Susceptibility(value=complex(value), order=Order.LINEAR,
                          damped=(mode is DampingMode.ON), model=Model.THREE_LEVEL)


def linear_index(chi1: Susceptibility) -> LinearIndex:
    """Linear refractive index n0 = sqrt(1 + chi1), principal branch.

    The branch is fixed to Im(n0) >= 0 (decaying wave); n0**2 still equals
    1 + chi1 exactly because the flip is a global sign.  Flags mark a
    negative real permittivity and a subluminal (Re n0 < 1) index.
    """
    eps = 1 + chi1.value
    n0 = cmath.sqrt(eps)
    if n0.imag < 0:
        n0 = -n0
    return LinearIndex(value=n0,
                       negative_permittivity=eps.real < 0,
                       subluminal=n0.real < 1)


def nonlinear_index(chi3: Susceptibility, n0: complex,
                    k: PhysicalConstants = PhysicalConstants()) -> complex:
    """Intensity coefficient n2 = 3 chi3 / (4 n0^2 eps0 c)."""
    if n0 == 0:
        raise DegenerateInput("n0 must be nonzero")
    return 3 * chi3.value / (4 * n0 * n0 * k.epsilon0 * k.c)


def wave_intensity(e_s: complex, n0: complex,
                   k: PhysicalConstants = PhysicalConstants()) -> float:
    """Time-averaged intensity I = 2 Re(n0) eps0 c |E_s|^2."""
    return 2 * complex(n0).real * k.epsilon0 * k.c * abs(complex(e_s)) ** 2


def absorption_linear(chi1: Susceptibility, omega: float,
                      k: PhysicalConstants = PhysicalConstants()) -> float:
    """Unsaturated absorption coefficient alpha0 = Im(chi1) * omega / c."""
    return chi1.value.imag * omega / k.c


def absorption_saturated(alpha0: float, intensity: float, i_sat: float) -> float:
    """Saturable absorption alpha(I) = alpha0 / (1 + I/I_sat)."""
    if not i_sat > 0:
        raise DegenerateInput("saturation intensity must be positive")
    if intensity < 0:
        raise ValueError("intensity must be nonnegative")
    return alpha0 / (1 + intensity / i_sat)
