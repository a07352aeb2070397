"""Parameter sweeps with feature detection and alignment reports.

A scan fixes one atomic configuration, sweeps a single real parameter
over a linear grid and evaluates a set of quantities at every point:
statistical speeds (QFI, HSS against a chosen frequency), susceptibility
components, the linear refractive index or the absorption coefficient.
Each curve is max-normalized (divided by its largest absolute value over
the window) so independently scaled quantities can be compared by shape,
which is how all the interesting claims are phrased: "the peak of this
curve sits where that one changes sign".

Grid points where a response denominator vanishes raise PoleError and
become gaps (NaN) in the curves; gaps are never interpolated across.
Feature detection finds interior extrema (3-point test + parabolic
refinement) and classifies every sign change as a zero crossing or a
pole crossing by how the magnitude behaves around it.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass, field

import numpy as np

from .atoms import (DEFAULT_POLE_TOL, DampingMode, FourLevelParams, Model,
                    ThreeLevelParams, normalize, steady_amplitudes_model1,
                    steady_amplitudes_model2)
from .errors import AllPoles, InvalidSpec, PoleError
from .response import (PhysicalConstants, absorption_linear, chi1_model2,
                       chi3_model1, linear_index)
from .speed import DiffConfig, speeds

__all__ = [
    "BLOWUP_RATIO",
    "ScanSpec",
    "ScanResult",
    "Feature",
    "FeatureSet",
    "CoincidencePair",
    "CoincidenceReport",
    "run_scan",
    "detect_features",
    "coincidence",
]

BLOWUP_RATIO = 1e6

_SPEED_QUANTITIES = {
    "qfi_omega": ("qfi", "omega"),
    "qfi_omegas": ("qfi", "omega_s"),
    "hss_omega": ("hss", "omega"),
    "hss_omegas": ("hss", "omega_s"),
}

_CHI_QUANTITIES = {
    "chi3_abs": Model.FOUR_LEVEL,
    "chi3_re": Model.FOUR_LEVEL,
    "chi3_im": Model.FOUR_LEVEL,
    "chi1_abs": Model.THREE_LEVEL,
    "chi1_re": Model.THREE_LEVEL,
    "chi1_im": Model.THREE_LEVEL,
    "n0": Model.THREE_LEVEL,
    "alpha0": Model.THREE_LEVEL,
}

KNOWN_QUANTITIES = tuple(_SPEED_QUANTITIES) + tuple(_CHI_QUANTITIES)


@dataclass(frozen=True)
class ScanSpec:
    """One sweep: base configuration, swept field, grid and quantities.

    quantities are column names: qfi_omega / qfi_omegas / hss_omega /
    hss_omegas (the suffix names the differentiated frequency),
    chi3_abs / chi3_re / chi3_im (four-level), chi1_abs / chi1_re /
    chi1_im / n0 / alpha0 (three-level).  n0 records the real part of
    the linear refractive index; alpha0 the linear absorption
    coefficient at the generated sum frequency.
    """

    model: Model
    params: FourLevelParams | ThreeLevelParams
    swept: str
    grid_min: float
    grid_max: float
    points: int = 501
    quantities: tuple = ()
    damping: DampingMode = DampingMode.ON
    diff: DiffConfig = field(default_factory=DiffConfig)
    tol_cells: int = 2
    pole_tol: float = DEFAULT_POLE_TOL
    cross_extrema: bool = False
    constants: PhysicalConstants = field(default_factory=PhysicalConstants)

    def cell_width(self) -> float:
        return (self.grid_max - self.grid_min) / (self.points - 1)


@dataclass(frozen=True)
class Feature:
    """One detected curve feature.

    kind is max/min/zero/pole; index anchors it on the grid (for
    crossings, the left node of the bracketing pair); location is the
    refined position in sweep units and cell the same position in
    fractional grid-index units; value is the raw curve sample at index.
    """

    kind: str
    index: int
    location: float
    cell: float
    value: float


@dataclass(frozen=True)
class FeatureSet:
    maxima: tuple = ()
    minima: tuple = ()
    zeros: tuple = ()
    poles: tuple = ()

    def all_features(self) -> tuple:
        return self.maxima + self.minima + self.zeros + self.poles

    def __len__(self) -> int:
        return len(self.all_features())


@dataclass(frozen=True)
class CoincidencePair:
    feature_a: Feature
    feature_b: Feature
    distance_cells: float
    aligned: bool


@dataclass(frozen=True)
class CoincidenceReport:
    """Greedy nearest-pairings between two feature sets on one grid.

    Same-kind features are always paired; when cross_extrema was set the
    extrema of both sets form a single pool so a minimum of one curve
    may pair with a maximum of the other.  Symmetric in the two inputs.
    """

    pairs: tuple
    tol_cells: int
    unpaired_a: tuple = ()
    unpaired_b: tuple = ()

    @property
    def aligned(self) -> tuple:
        return tuple(p for p in self.pairs if p.aligned)


@dataclass(frozen=True)
class ScanResult:
    spec: ScanSpec
    grid: np.ndarray
    curves: dict
    normalized: dict
    norm_max: dict
    argmax_index: dict
    masks: dict
    features: dict

    def masked_indices(self, quantity: str) -> tuple:
        return tuple(int(i) for i in np.nonzero(self.masks[quantity])[0])


def _validate(spec: ScanSpec) -> None:
    expected = FourLevelParams if spec.model is Model.FOUR_LEVEL else ThreeLevelParams
    if not isinstance(spec.params, expected):
        raise InvalidSpec(f"params record does not match model {spec.model.label}")
    if not spec.points >= 3:
        raise InvalidSpec("points must be at least 3")
    if not spec.grid_min < spec.grid_max:
        raise InvalidSpec("grid_min must be smaller than grid_max")
    if not any(f.name == spec.swept for f in dataclasses.fields(spec.params)):
        raise InvalidSpec(f"swept parameter {spec.swept!r} is not a field of the params record")
    if spec.swept.startswith("gamma") and spec.grid_min < 0:
        raise InvalidSpec("decay rates cannot be swept through negative values")
    if spec.swept in ("rabi_s",) and spec.grid_min <= 0 <= spec.grid_max:
        raise InvalidSpec("rabi_s sweep may not include zero")
    if not spec.quantities:
        raise InvalidSpec("at least one quantity is required")
    for q in spec.quantities:
        if q not in KNOWN_QUANTITIES:
            raise InvalidSpec(f"unknown quantity {q!r}")
        required = _CHI_QUANTITIES.get(q)
        if required is not None and required is not spec.model:
            raise InvalidSpec(f"quantity {q!r} needs the {required.label} model")
    if len(set(spec.quantities)) != len(spec.quantities):
        raise InvalidSpec("duplicate quantity requested")
    if spec.tol_cells < 0:
        raise InvalidSpec("tol_cells must be nonnegative")


def run_scan(spec: ScanSpec) -> ScanResult:
    """Evaluate every requested quantity over the grid and analyze curves.

    Deterministic: grid points are mutually independent and evaluated in
    order, writing into per-quantity buffers.  Raises AllPoles when more
    than half the points of any quantity are masked.
    """
    _validate(spec)
    grid = np.linspace(spec.grid_min, spec.grid_max, spec.points)
    curves = {q: np.full(spec.points, np.nan) for q in spec.quantities}
    masks = {q: np.zeros(spec.points, dtype=bool) for q in spec.quantities}

    four = spec.model is Model.FOUR_LEVEL
    steady = steady_amplitudes_model1 if four else steady_amplitudes_model2
    chi_fn = chi3_model1 if four else chi1_model2

    def state_fn(p):
        return normalize(steady(p, spec.damping, spec.pole_tol))

    chi_cols = [q for q in spec.quantities if q in _CHI_QUANTITIES]
    speed_groups = {}
    for q in spec.quantities:
        if q in _SPEED_QUANTITIES:
            kind, sel = _SPEED_QUANTITIES[q]
            speed_groups.setdefault(sel, {})[kind] = q

    for i, x in enumerate(grid):
        p = dataclasses.replace(spec.params, **{spec.swept: float(x)})
        if chi_cols:
            try:
                chi = chi_fn(p, spec.constants, spec.damping, spec.pole_tol)
            except PoleError:
                for q in chi_cols:
                    masks[q][i] = True
            else:
                for q in chi_cols:
                    curves[q][i] = _chi_derived(q, chi, p, spec.constants)
        for sel, cols in speed_groups.items():
            try:
                fisher, hs = speeds(state_fn, sel, p, spec.diff)
            except PoleError:
                for q in cols.values():
                    masks[q][i] = True
            else:
                if "qfi" in cols:
                    curves[cols["qfi"]][i] = fisher
                if "hss" in cols:
                    curves[cols["hss"]][i] = hs

    for q in spec.quantities:
        if 2 * int(masks[q].sum()) > spec.points:
            raise AllPoles(
                f"{int(masks[q].sum())} of {spec.points} points masked for {q}")

    normalized, norm_max, argmax_index, features = {}, {}, {}, {}
    for q in spec.quantities:
        curve = curves[q]
        peak = float(np.nanmax(np.abs(curve)))
        norm_max[q] = peak
        if peak > 0:
            normalized[q] = curve / peak
        else:
            normalized[q] = np.where(np.isnan(curve), np.nan, 0.0)
        argmax_index[q] = int(np.nanargmax(curve))
        features[q] = detect_features(curve, grid)

    return ScanResult(spec=spec, grid=grid, curves=curves,
                      normalized=normalized, norm_max=norm_max,
                      argmax_index=argmax_index, masks=masks,
                      features=features)


def _chi_derived(quantity: str, chi, p, constants) -> float:
    if quantity.endswith("_abs"):
        return abs(chi.value)
    if quantity.endswith("_re"):
        return chi.value.real
    if quantity.endswith("_im"):
        return chi.value.imag
    if quantity == "n0":
        return linear_index(chi).value.real
    if quantity == "alpha0":
        sum_freq = 2 * p.omega + p.omega_s
        return absorption_linear(chi, sum_freq, constants)
    raise InvalidSpec(f"unknown quantity {quantity!r}")


def _finite_runs(curve):
    """Maximal index ranges [start, stop) of consecutive finite samples."""
    finite = np.isfinite(curve)
    runs = []
    start = None
    for i, ok in enumerate(finite):
        if ok and start is None:
            start = i
        elif not ok and start is not None:
            runs.append((start, i))
            start = None
    if start is not None:
        runs.append((start, len(curve)))
    return runs


def _parabolic_vertex(x0, x1, x2, c0, c1, c2):
    """Vertex abscissa of the parabola through three equally spaced samples."""
    denom = c0 - 2 * c1 + c2
    if denom == 0:
        return x1
    shift = 0.5 * (c0 - c2) / denom * (x2 - x1)
    vertex = x1 + shift
    return min(max(vertex, x0), x2)


def detect_features(curve, grid, blowup_ratio: float = BLOWUP_RATIO) -> FeatureSet:
    """Locate extrema and classify sign changes of one sampled curve.

    Interior local extrema come from a strict 3-point comparison inside
    each gap-free run, refined by parabolic interpolation.  A sign
    change between adjacent samples is a pole crossing when either side
    exceeds blowup_ratio times the curve's median magnitude, or when the
    magnitude rises into the crossing from both sides and dwarfs the
    outer neighbors; otherwise it is a zero crossing.  An exact zero
    sample is reported as a zero crossing at that node.
    """
    curve = np.asarray(curve, dtype=float)
    grid = np.asarray(grid, dtype=float)
    if curve.shape != grid.shape or curve.ndim != 1 or len(curve) < 3:
        raise ValueError("curve and grid must be equal-length 1-D arrays of 3+ points")
    dx = grid[1] - grid[0]
    finite_abs = np.abs(curve[np.isfinite(curve)])
    med = float(np.median(finite_abs)) if len(finite_abs) else 0.0
    if med == 0.0 and len(finite_abs):
        med = float(np.max(finite_abs))

    maxima, minima, zeros, poles = [], [], [], []

    def make(kind, index, location):
        return Feature(kind=kind, index=int(index), location=float(location),
                       cell=float((location - grid[0]) / dx),
                       value=float(curve[index]))

    for start, stop in _finite_runs(curve):
        for i in range(start + 1, stop - 1):
            c0, c1, c2 = curve[i - 1], curve[i], curve[i + 1]
            if c1 > c0 and c1 > c2:
                loc = _parabolic_vertex(grid[i - 1], grid[i], grid[i + 1], c0, c1, c2)
                maxima.append(make("max", i, loc))
            elif c1 < c0 and c1 < c2:
                loc = _parabolic_vertex(grid[i - 1], grid[i], grid[i + 1], c0, c1, c2)
                minima.append(make("min", i, loc))
        for i in range(start, stop):
            if curve[i] == 0.0:
                zeros.append(make("zero", i, grid[i]))
        for i in range(start, stop - 1):
            a, b = curve[i], curve[i + 1]
            if a == 0.0 or b == 0.0 or (a < 0) == (b < 0):
                continue
            if _is_pole_crossing(curve, i, start, stop, blowup_ratio, med):
                u, v = 1.0 / a, 1.0 / b
                loc = grid[i] + dx * u / (u - v)
                poles.append(make("pole", i, loc))
            else:
                loc = grid[i] + dx * a / (a - b)
                zeros.append(make("zero", i, loc))

    return FeatureSet(maxima=tuple(maxima), minima=tuple(minima),
                      zeros=tuple(zeros), poles=tuple(poles))


def _is_pole_crossing(curve, i, start, stop, blowup_ratio, med) -> bool:
    inner = max(abs(curve[i]), abs(curve[i + 1]))
    if med > 0 and inner > blowup_ratio * med:
        return True
    if i - 1 < start or i + 2 >= stop:
        return False
    left, right = abs(curve[i - 1]), abs(curve[i + 2])
    rising_in = left < abs(curve[i]) and right < abs(curve[i + 1])
    return rising_in and inner >= 2 * max(left, right)


def coincidence(a: FeatureSet, b: FeatureSet, tol_cells: int = 2,
                cross_extrema: bool = False) -> CoincidenceReport:
    """Pair features of two curves sampled on the same grid.

    Candidate pairs are same-kind features (plus max-min pairs across
    the two sets when cross_extrema is set, for claims of the form "the
    minimum of one curve marks the maximum of the other").  Pairs are
    accepted greedily by distance; ties prefer same-kind pairs and then
    break on position, which keeps the result symmetric in a and b.
    """
    pools = [("zero", a.zeros, b.zeros), ("pole", a.poles, b.poles),
             ("max", a.maxima, b.maxima), ("min", a.minima, b.minima)]
    if cross_extrema:
        pools.append(("max-min", a.maxima, b.minima))
        pools.append(("min-max", a.minima, b.maxima))

    candidates = []
    for label, fas, fbs in pools:
        same_kind = "-" not in label
        for fa in fas:
            for fb in fbs:
                dist = abs(fa.cell - fb.cell)
                key = (dist, 0 if same_kind else 1,
                       min(fa.cell, fb.cell), max(fa.cell, fb.cell), label)
                candidates.append((key, fa, fb, dist))
    candidates.sort(key=lambda item: item[0])

    used_a, used_b, pairs = set(), set(), []
    for _, fa, fb, dist in candidates:
        if id(fa) in used_a or id(fb) in used_b:
            continue
        used_a.add(id(fa))
        used_b.add(id(fb))
        pairs.append(CoincidencePair(feature_a=fa, feature_b=fb,
                                     distance_cells=dist,
                                     aligned=dist <= tol_cells))

    unpaired_a = tuple(f for f in a.all_features() if id(f) not in used_a)
    unpaired_b = tuple(f for f in b.all_features() if id(f) not in used_b)
    return CoincidenceReport(pairs=tuple(pairs), tol_cells=tol_cells,
                             unpaired_a=unpaired_a, unpaired_b=unpaired_b)
