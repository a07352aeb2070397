"""Quantum statistical speeds of a parametrized pure state.

The two figures of merit are the quantum Fisher information

    F_eta = 4 [ <dpsi|dpsi> - |<psi|dpsi>|^2 ]

and the Hilbert-Schmidt speed

    HSS_eta = sqrt( (1/2) Tr[(d rho / d eta)^2] ),

both evaluated on the normalized state.  Derivatives are numerical:
central differences, optionally Richardson-extrapolated over halved
steps.  The state derivative feeds F while rho is differenced entrywise,
so F = 4*HSS^2 acts as a genuine cross-check of two independent paths.

For nearly parameter-independent states the curves of interest can sit
many orders of magnitude below double-precision difference noise; a
DiffConfig.precision of d decimal digits reruns the whole stencil in
mpmath arithmetic and removes that floor.
"""

from __future__ import annotations

import dataclasses
import enum
import math
from dataclasses import dataclass

import mpmath as mp

from .atoms import _abs2
from .errors import DegenerateInput, StepTooLarge

__all__ = [
    "ParamSelector",
    "DiffMethod",
    "DiffConfig",
    "state_derivative",
    "qfi_pure",
    "hss",
    "speeds",
    "cramer_rao_bound",
]

STEP_FLOOR = 1e-9
LEVEL_AGREEMENT = 1e-3
FLOAT_ULP = 2.220446049250313e-16


class ParamSelector(str, enum.Enum):
    """Which scalar parameter the state is differentiated against."""

    OMEGA = "omega"
    OMEGA_S = "omega_s"


class DiffMethod(enum.Enum):
    CENTRAL_DIFFERENCE = "central"
    RICHARDSON = "richardson"


@dataclass(frozen=True)
class DiffConfig:
    """Finite-difference settings.

    h is relative to the parameter scale: the step used is
    max(h * max(1, |eta|), 1e-9).  richardson_levels counts the halved
    steps combined by extrapolation (1 reduces to a plain central
    difference).  precision, when set, is the number of decimal digits
    used for all stencil evaluations (mpmath); results are returned as
    ordinary floats either way.
    """

    method: DiffMethod = DiffMethod.RICHARDSON
    h: float = 1e-6
    richardson_levels: int = 2
    precision: int | None = None

    def __post_init__(self):
        if not self.h > 0:
            raise ValueError("h must be positive")
        if self.richardson_levels < 1:
            raise ValueError("richardson_levels must be at least 1")
        if self.precision is not None and self.precision < 15:
            raise ValueError("precision below double accuracy is pointless")

    def step_for(self, eta) -> float:
        scale = abs(eta)
        h = self.h * (scale if scale > 1 else 1)
        return h if h > STEP_FLOOR else type(h)(STEP_FLOOR)

    @property
    def levels(self) -> int:
        if self.method is DiffMethod.CENTRAL_DIFFERENCE:
            return 1
        return self.richardson_levels


def _field_name(sel) -> str:
    return sel.value if isinstance(sel, ParamSelector) else str(sel)


def _vec_norm(v) -> float:
    return float(sum(_abs2(z) for z in v)) ** 0.5


def _vec_sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _vec_scale(v, s):
    return tuple(x * s for x in v)


def _check_level_agreement(coarse, fine, h_fine, ulp):
    """Raise StepTooLarge when successive difference levels disagree.

    Disagreements below the finite-difference representation noise
    (~ulp/h per unit amplitude) carry no information about the
    truncation error and never trigger the check.
    """
    diff = _vec_norm(_vec_sub(fine, coarse))
    scale = max(_vec_norm(fine), _vec_norm(coarse))
    noise_floor = 64 * ulp / float(h_fine)
    if diff > noise_floor and scale > 0 and diff / scale > LEVEL_AGREEMENT:
        raise StepTooLarge(
            f"difference levels disagree by {diff / scale:.3e} relative "
            f"(> {LEVEL_AGREEMENT:g}); reduce h")


def _extrapolate(estimates):
    """Neville tableau for central differences (even error powers)."""
    work = list(estimates)
    order = len(work)
    for j in range(1, order):
        factor = 4 ** j
        work = [
            _vec_scale(_vec_sub(_vec_scale(work[i + 1], factor), work[i]),
                       1.0 / (factor - 1))
            for i in range(len(work) - 1)
        ]
    return work[0]


class _Stencil:
    """Symmetric evaluations of a state family around one parameter value.

    Holds the normalized amplitude tuples at eta +- h/2^k for every level
    plus the center, so QFI and HSS can be assembled from one set of
    state evaluations.
    """

    def __init__(self, state_fn, sel, at, cfg: DiffConfig):
        field = _field_name(sel)
        if not hasattr(at, field):
            raise ValueError(f"params record has no field {field!r}")
        self.cfg = cfg
        self.ulp = FLOAT_ULP
        eta0 = getattr(at, field)
        if cfg.precision is not None:
            eta0 = mp.mpf(float(eta0))
            self.ulp = float(mp.mpf(10) ** (1 - cfg.precision))
        else:
            eta0 = float(eta0)

        def amplitudes_at(eta):
            state = state_fn(dataclasses.replace(at, **{field: eta}))
            if not state.normalized:
                raise ValueError("state_fn must return a normalized state")
            return state.amplitudes

        h0 = cfg.step_for(eta0)
        self.steps = [h0 / (2 ** k) for k in range(cfg.levels)]
        self.plus = [amplitudes_at(eta0 + h) for h in self.steps]
        self.minus = [amplitudes_at(eta0 - h) for h in self.steps]
        self.center = amplitudes_at(eta0)

    def derivative_of(self, values_plus, values_minus):
        """Differentiate any per-stencil-point vector quantity."""
        per_level = [
            _vec_scale(_vec_sub(p, m), 1 / (2 * h))
            for p, m, h in zip(values_plus, values_minus, self.steps)
        ]
        if len(per_level) >= 2:
            _check_level_agreement(per_level[-2], per_level[-1],
                                   self.steps[-1], self.ulp)
        return _extrapolate(per_level)

    def state_derivative(self):
        return self.derivative_of(self.plus, self.minus)

    def density_derivative(self):
        def flat_rho(amps):
            return tuple(a * b.conjugate() for a in amps for b in amps)

        return self.derivative_of([flat_rho(a) for a in self.plus],
                                  [flat_rho(a) for a in self.minus])


def _run_with_precision(cfg: DiffConfig, fn):
    if cfg.precision is None:
        return fn()
    with mp.workdps(cfg.precision):
        return fn()


def state_derivative(state_fn, sel, at, cfg: DiffConfig = DiffConfig()):
    """Componentwise derivative of the normalized amplitude vector.

    state_fn maps a params record to a normalized AtomState; sel names
    the differentiated field (a ParamSelector or any field name).
    """
    def compute():
        stencil = _Stencil(state_fn, sel, at, cfg)
        return tuple(complex(z) for z in stencil.state_derivative())

    return _run_with_precision(cfg, compute)


def speeds(state_fn, sel, at, cfg: DiffConfig = DiffConfig()):
    """(QFI, HSS) from one shared stencil of state evaluations."""
    def compute():
        stencil = _Stencil(state_fn, sel, at, cfg)
        dpsi = stencil.state_derivative()
        psi = stencil.center
        ip_dd = sum(_abs2(z) for z in dpsi)
        ip_pd = sum(p.conjugate() * d for p, d in zip(psi, dpsi))
        fisher = 4 * (ip_dd - _abs2(ip_pd))
        drho = stencil.density_derivative()
        hs_speed = (0.5 * sum(_abs2(z) for z in drho)) ** 0.5
        return float(fisher), float(hs_speed)

    fisher, hs_speed = _run_with_precision(cfg, compute)
    return (fisher if fisher > 0 else 0.0), hs_speed


def qfi_pure(state_fn, sel, at, cfg: DiffConfig = DiffConfig()) -> float:
    """Quantum Fisher information of the normalized pure state family."""
    return speeds(state_fn, sel, at, cfg)[0]


def hss(state_fn, sel, at, cfg: DiffConfig = DiffConfig()) -> float:
    """Hilbert-Schmidt speed from the entrywise projector derivative."""
    return speeds(state_fn, sel, at, cfg)[1]


def cramer_rao_bound(fisher: float) -> float:
    """Smallest resolvable parameter change, 1/sqrt(F)."""
    if not fisher > 0:
        raise DegenerateInput("Fisher information must be positive")
    return 1.0 / math.sqrt(fisher)
