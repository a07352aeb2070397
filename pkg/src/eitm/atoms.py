"""Steady-state amplitudes of driven four- and three-level atoms.

Both media are described perturbatively: the ground-state amplitude is held
at exactly 1 and the excited amplitudes follow from the stationary coupled
equations, so every amplitude is an algebraic function of detunings and Rabi
frequencies.  Damping enters as imaginary shifts of specific detuning
combinations, selected by :class:`DampingMode`.

All arithmetic is written against plain scalar operations (`+ * / abs
conjugate`) so the same code paths run on python complex numbers and on
mpmath values when a high-precision evaluation is requested upstream.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .errors import DegenerateInput, PoleError

__all__ = [
    "Model",
    "DampingMode",
    "FourLevelParams",
    "ThreeLevelParams",
    "Detunings",
    "AtomState",
    "detunings_model1",
    "detunings_model2",
    "steady_amplitudes_model1",
    "steady_amplitudes_model2",
    "normalize",
    "pure_density",
]

DEFAULT_POLE_TOL = 1e-12


class Model(enum.Enum):
    FOUR_LEVEL = "four-level"
    THREE_LEVEL = "three-level"

    @property
    def label(self) -> str:
        return self.value


class DampingMode(enum.Enum):
    """Off zeroes both decay rates in every formula; On uses the stored ones."""

    OFF = "off"
    ON = "on"


def _abs2(z):
    # |z|^2 without a square root; works for float, complex, mpf and mpc.
    return (z * z.conjugate()).real


def _check_real_finite(name, value):
    try:
        x = float(value)
    except (TypeError, ValueError):
        raise ValueError(f"{name} must be a real number, got {value!r}")
    if not math.isfinite(x):
        raise ValueError(f"{name} must be finite, got {value!r}")


def _check_complex_finite(name, value):
    try:
        z = complex(value)
    except (TypeError, ValueError):
        raise ValueError(f"{name} must be a complex number, got {value!r}")
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ValueError(f"{name} must be finite, got {value!r}")


@dataclass(frozen=True)
class FourLevelParams:
    """Four-level medium: two-photon ladder a-b-c closed by a c-d coupling.

    omega drives a-b (and the second ladder step), omega_s drives c-d.
    Rabi frequencies may be complex; decay rates act on levels c and d.
    """

    omega: float
    omega_s: float
    omega_ba: float
    omega_ca: float
    omega_dc: float
    rabi_ba: complex
    rabi_cb: complex
    rabi_dc: complex
    gamma_c: float = 0.0
    gamma_d: float = 0.0

    def __post_init__(self):
        for name in ("omega", "omega_s", "omega_ba", "omega_ca", "omega_dc",
                     "gamma_c", "gamma_d"):
            _check_real_finite(name, getattr(self, name))
        for name in ("rabi_ba", "rabi_cb", "rabi_dc"):
            _check_complex_finite(name, getattr(self, name))
        if float(self.gamma_c) < 0 or float(self.gamma_d) < 0:
            raise ValueError("decay rates must be nonnegative")


@dataclass(frozen=True)
class ThreeLevelParams:
    """Three-level medium driven at the sum frequency 2*omega + omega_s.

    The sum frequency (derived, never stored) couples a-d; the strong
    field rabi_s couples d-c.  Decay rates act on levels c and d.
    """

    omega: float
    omega_s: float
    omega_da: float
    omega_dc: float
    rabi: complex
    rabi_s: complex
    gamma_c: float = 0.0
    gamma_d: float = 0.0

    def __post_init__(self):
        for name in ("omega", "omega_s", "omega_da", "omega_dc",
                     "gamma_c", "gamma_d"):
            _check_real_finite(name, getattr(self, name))
        for name in ("rabi", "rabi_s"):
            _check_complex_finite(name, getattr(self, name))
        if float(self.gamma_c) < 0 or float(self.gamma_d) < 0:
            raise ValueError("decay rates must be nonnegative")


@dataclass(frozen=True)
class Detunings:
    """Detuning bundle; unused slots are None for the other model.

    Four-level: delta1 (always real, no decay on level b), delta2, Delta.
    Three-level: delta, Delta.  With damping on, Im(delta2) = gamma_c,
    Im(delta2 + Delta) = gamma_d, Im(delta) = gamma_d and
    Im(delta - Delta) = gamma_c; Delta itself absorbs the difference.
    """

    model: Model
    Delta: complex
    delta1: float | None = None
    delta2: complex | None = None
    delta: complex | None = None


@dataclass(frozen=True)
class AtomState:
    """Ordered complex amplitudes plus normalization status.

    Four-level order: (C_a, C_b, C_c, C_d); three-level: (C_a, C_d, C_c).
    Un-normalized perturbative states always carry C_a = 1 exactly.
    """

    amplitudes: tuple
    normalized: bool
    model: Model | None = None

    def norm_squared(self):
        return sum(_abs2(c) for c in self.amplitudes)


def _rates(params, mode: DampingMode):
    if mode is DampingMode.ON:
        return params.gamma_c, params.gamma_d
    return 0.0, 0.0


def detunings_model1(p: FourLevelParams, mode: DampingMode) -> Detunings:
    """Four-level detunings with the damping shifts applied when mode is On."""
    gc, gd = _rates(p, mode)
    delta1 = p.omega - p.omega_ba
    delta2 = 2 * p.omega - p.omega_ca + 1j * gc
    Delta = (p.omega_s - p.omega_dc) + 1j * (gd - gc)
    return Detunings(model=Model.FOUR_LEVEL, delta1=delta1, delta2=delta2,
                     Delta=Delta)


def detunings_model2(p: ThreeLevelParams, mode: DampingMode) -> Detunings:
    """Three-level detunings; delta is measured from the sum frequency."""
    gc, gd = _rates(p, mode)
    sum_freq = 2 * p.omega + p.omega_s
    delta = (sum_freq - p.omega_da) + 1j * gd
    Delta = (p.omega_s - p.omega_dc) + 1j * (gd - gc)
    return Detunings(model=Model.THREE_LEVEL, delta=delta, Delta=Delta)


def steady_amplitudes_model1(p: FourLevelParams, mode: DampingMode,
                             pole_tol: float = DEFAULT_POLE_TOL) -> AtomState:
    """Perturbative steady state (C_a, C_b, C_c, C_d) of the four-level medium.

    Raises PoleError when delta1, delta2 or the coupled c-d denominator
    delta2*(delta2+Delta) - |rabi_dc|^2 falls below pole_tol in magnitude.
    """
    d = detunings_model1(p, mode)
    if abs(d.delta1) < pole_tol:
        raise PoleError(f"delta1 = {d.delta1!r} is inside the pole tolerance")
    if abs(d.delta2) < pole_tol:
        raise PoleError(f"delta2 = {d.delta2!r} is inside the pole tolerance")
    denom = d.delta2 * (d.delta2 + d.Delta) - _abs2(p.rabi_dc)
    if abs(denom) < pole_tol:
        raise PoleError(f"coupled denominator {denom!r} is inside the pole tolerance")
    c_b = -p.rabi_ba / d.delta1
    c_d = -p.rabi_dc * p.rabi_cb * p.rabi_ba / (d.delta1 * denom)
    c_c = -(c_b * p.rabi_cb + c_d * p.rabi_dc.conjugate()) / d.delta2
    return AtomState(amplitudes=(complex(1.0), c_b, c_c, c_d),
                     normalized=False, model=Model.FOUR_LEVEL)


def steady_amplitudes_model2(p: ThreeLevelParams, mode: DampingMode,
                             pole_tol: float = DEFAULT_POLE_TOL) -> AtomState:
    """Perturbative steady state (C_a, C_d, C_c) of the three-level medium.

    Raises DegenerateInput when rabi_s vanishes (C_c divides by it) and
    PoleError when |rabi_s|^2 - delta*(delta-Delta) falls below pole_tol.
    """
    if abs(p.rabi_s) == 0:
        raise DegenerateInput("rabi_s must be nonzero to form the steady state")
    d = detunings_model2(p, mode)
    denom = _abs2(p.rabi_s) - d.delta * (d.delta - d.Delta)
    if abs(denom) < pole_tol:
        raise PoleError(f"denominator {denom!r} is inside the pole tolerance")
    c_d = p.rabi * (d.delta - d.Delta) / denom
    c_c = (-p.rabi - d.delta * c_d) / p.rabi_s
    return AtomState(amplitudes=(complex(1.0), c_d, c_c),
                     normalized=False, model=Model.THREE_LEVEL)


def normalize(s: AtomState) -> AtomState:
    """Scale amplitudes to unit norm; the global phase is untouched."""
    total = s.norm_squared()
    if total == 0:
        raise DegenerateInput("cannot normalize the zero state")
    norm = total ** 0.5
    amps = tuple(c / norm for c in s.amplitudes)
    return AtomState(amplitudes=amps, normalized=True, model=s.model)


def pure_density(s: AtomState):
    """Projector |psi><psi| of a normalized state as a numpy matrix.

    High-precision amplitudes produce an object-dtype matrix; python
    complex amplitudes produce a complex128 one.
    """
    import numpy as np

    if not s.normalized:
        raise ValueError("pure_density requires a normalized state")
    amps = s.amplitudes
    rows = [[a * b.conjugate() for b in amps] for a in amps]
    return np.array(rows)
