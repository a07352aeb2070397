"""Built-in sweep presets and the flat key=value config format.

Each preset bundles a complete ScanSpec for one standard figure panel:
the fixed atomic configuration, the swept parameter with a window
bracketing the analytically known feature, the quantity set and the
damping mode.  Panels whose captions only list changed values inherit
the rest from panel (a) of the same figure; the inherited field names
are recorded on the preset so listings can show them.

Sweep windows are not part of the published captions (the originals are
axis images); every window here was chosen so that the closed-form
feature of interest lies in the interior, and is an explicit choice of
this package.

The same module owns the config-file dialect used by the command line:
one `key = value` pair per line, `#` comments, model/grid/quantity keys
first and the atomic parameters after.  `spec_to_config` and
`spec_from_config` round-trip every preset exactly.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass

from .atoms import DampingMode, FourLevelParams, Model, ThreeLevelParams
from .errors import InvalidConfig
from .scan import KNOWN_QUANTITIES, ScanSpec
from .speed import DiffConfig, DiffMethod

__all__ = [
    "Preset",
    "catalog",
    "get_preset",
    "preset_names",
    "spec_to_config",
    "spec_from_config",
]

# High-precision digits for the two four-level panels whose speed curves
# are flat to ~1e-5 / ~5e-10 relative: double-precision differences sit
# in roundoff there, so those presets pin an mpmath evaluation.
_FLAT_PANEL_DIGITS = 40


@dataclass(frozen=True)
class Preset:
    """A named, ready-to-run sweep with provenance notes."""

    name: str
    title: str
    spec: ScanSpec
    inherited: tuple = ()
    aliases: tuple = ()

    @property
    def inherited_note(self) -> str:
        if not self.inherited:
            return "all parameters set directly"
        return "inherits " + ", ".join(self.inherited)


def _four(**kw) -> FourLevelParams:
    return FourLevelParams(**kw)


def _three(**kw) -> ThreeLevelParams:
    return ThreeLevelParams(**kw)


_SPEEDS_S = ("qfi_omegas", "hss_omegas")
_SPEEDS_W = ("qfi_omega", "hss_omega")


def _build_catalog() -> dict:
    presets = []

    def add(name, title, spec, inherited=(), aliases=()):
        presets.append(Preset(name=name, title=title, spec=spec,
                              inherited=tuple(inherited), aliases=tuple(aliases)))

    # ---- damped four-level medium, speeds against the strong frequency
    fig2a_params = dict(omega=3.0, omega_s=1.0, omega_ba=3.1, omega_ca=6.0,
                        omega_dc=1.0, rabi_ba=0.000011, rabi_cb=0.00001,
                        rabi_dc=10.0, gamma_c=1.0, gamma_d=100.0)
    add("fig2a",
        "strong-frequency speeds and |chi3| vs omega_dc (peak at omega_s)",
        ScanSpec(model=Model.FOUR_LEVEL, params=_four(**fig2a_params),
                 swept="omega_dc", grid_min=0.5, grid_max=1.5,
                 quantities=_SPEEDS_S + ("chi3_abs",),
                 damping=DampingMode.ON,
                 diff=DiffConfig(precision=_FLAT_PANEL_DIGITS)))

    fig2b_params = dict(fig2a_params, omega_ba=3.0, omega_dc=1.001)
    add("fig2b",
        "strong-frequency speeds and |chi3| vs omega (peak at omega_ba)",
        ScanSpec(model=Model.FOUR_LEVEL, params=_four(**fig2b_params),
                 swept="omega", grid_min=2.5, grid_max=3.5,
                 quantities=_SPEEDS_S + ("chi3_abs",),
                 damping=DampingMode.ON),
        inherited=("omega", "omega_s", "omega_ca", "rabi_ba", "rabi_cb",
                   "rabi_dc", "gamma_c", "gamma_d"))

    fig2c_params = dict(fig2a_params, omega_s=1.0001, omega_ba=3.01,
                        omega_dc=1.001)
    add("fig2c",
        "strong-frequency speeds and |chi3| vs the coupling rabi_dc",
        ScanSpec(model=Model.FOUR_LEVEL, params=_four(**fig2c_params),
                 swept="rabi_dc", grid_min=0.01, grid_max=30.0,
                 quantities=_SPEEDS_S + ("chi3_abs",),
                 damping=DampingMode.ON),
        inherited=("rabi_ba", "rabi_cb", "gamma_c", "gamma_d"))

    # ---- damped four-level medium, speeds against the weak frequency
    fig3a_params = dict(omega=26.0, omega_s=14.0, omega_ba=26.01,
                        omega_ca=52.0, omega_dc=14.0, rabi_ba=1.4,
                        rabi_cb=1.0, rabi_dc=100.0, gamma_c=100.0,
                        gamma_d=60.0)
    add("fig3a",
        "weak-frequency speeds and |chi3| vs omega_dc (cross extrema)",
        ScanSpec(model=Model.FOUR_LEVEL, params=_four(**fig3a_params),
                 swept="omega_dc", grid_min=13.5, grid_max=14.5,
                 quantities=_SPEEDS_W + ("chi3_abs",),
                 damping=DampingMode.ON, cross_extrema=True,
                 diff=DiffConfig(precision=_FLAT_PANEL_DIGITS)))

    fig3b_params = dict(fig3a_params, omega_ba=26.0, omega_dc=14.001,
                        gamma_c=1.0, gamma_d=100.0)
    add("fig3b",
        "weak-frequency speeds and |chi3| vs omega (pole-adjacent peaks)",
        ScanSpec(model=Model.FOUR_LEVEL, params=_four(**fig3b_params),
                 swept="omega", grid_min=25.5, grid_max=26.5,
                 quantities=_SPEEDS_W + ("chi3_abs",),
                 damping=DampingMode.ON, cross_extrema=True),
        inherited=("omega", "omega_s", "omega_ca", "rabi_ba", "rabi_cb",
                   "rabi_dc"))

    # ---- undamped three-level medium, speeds against the strong frequency
    fig5a_params = dict(omega=4.65, omega_s=1.81, omega_da=20.0,
                        omega_dc=1.8, rabi=0.00001, rabi_s=1.0)
    add("fig5a",
        "undamped chi1 sign reversal vs rabi_s, flagged by strong-frequency speeds",
        ScanSpec(model=Model.THREE_LEVEL, params=_three(**fig5a_params),
                 swept="rabi_s", grid_min=1.0, grid_max=15.0,
                 quantities=_SPEEDS_S + ("chi1_re",),
                 damping=DampingMode.OFF))

    fig5b_params = dict(omega=4.65, omega_s=2.01, omega_da=20.0,
                        omega_dc=2.0, rabi=0.001, rabi_s=10.0)
    add("fig5b",
        "undamped chi1 poles and transparency zero vs omega (strong-frequency speeds)",
        ScanSpec(model=Model.THREE_LEVEL, params=_three(**fig5b_params),
                 swept="omega", grid_min=3.0, grid_max=15.0,
                 quantities=_SPEEDS_S + ("chi1_re",),
                 damping=DampingMode.OFF))

    fig5c_params = dict(omega=4.65, omega_s=2.0, omega_da=30.0,
                        omega_dc=2.01, rabi=0.00001, rabi_s=100.0)
    add("fig5c",
        "undamped chi1 transparency zero vs omega at strong coupling",
        ScanSpec(model=Model.THREE_LEVEL, params=_three(**fig5c_params),
                 swept="omega", grid_min=10.0, grid_max=18.0,
                 quantities=_SPEEDS_S + ("chi1_re",),
                 damping=DampingMode.OFF))

    # ---- damped three-level medium, speeds against the strong frequency
    fig6a_params = dict(fig5a_params, gamma_c=0.01, gamma_d=100.0)
    add("fig6a",
        "absorption Im[chi1] vs rabi_s tracked by strong-frequency speeds",
        ScanSpec(model=Model.THREE_LEVEL, params=_three(**fig6a_params),
                 swept="rabi_s", grid_min=1.0, grid_max=15.0,
                 quantities=_SPEEDS_S + ("chi1_im",),
                 damping=DampingMode.ON))

    fig6b_params = dict(fig6a_params, omega=9.0)
    add("fig6b",
        "absorption Im[chi1] vs rabi_s at small sum-frequency detuning",
        ScanSpec(model=Model.THREE_LEVEL, params=_three(**fig6b_params),
                 swept="rabi_s", grid_min=1.0, grid_max=15.0,
                 quantities=_SPEEDS_S + ("chi1_im",),
                 damping=DampingMode.ON),
        inherited=("omega_s", "omega_da", "omega_dc", "rabi",
                   "gamma_c", "gamma_d"))

    fig6c_params = dict(omega=4.65, omega_s=4.001, omega_da=20.0,
                        omega_dc=4.0, rabi=0.00001, rabi_s=10.0,
                        gamma_c=0.001, gamma_d=100.0)
    add("fig6c",
        "absorption minimum at zero sum-frequency detuning vs omega",
        ScanSpec(model=Model.THREE_LEVEL, params=_three(**fig6c_params),
                 swept="omega", grid_min=6.0, grid_max=10.0,
                 quantities=_SPEEDS_S + ("chi1_im",),
                 damping=DampingMode.ON),
        inherited=("omega", "rabi", "omega_da", "gamma_d"))

    fig6d_params = dict(fig6c_params, omega=8.0, omega_s=4.0)
    add("fig6d",
        "absorption minimum at omega_dc = omega_s (best transparency)",
        ScanSpec(model=Model.THREE_LEVEL, params=_three(**fig6d_params),
                 swept="omega_dc", grid_min=3.0, grid_max=5.0,
                 quantities=_SPEEDS_S + ("chi1_im",),
                 damping=DampingMode.ON),
        inherited=("rabi", "omega_da", "gamma_d"))

    # ---- undamped three-level medium, speeds against the weak frequency
    add("fig6pa",
        "undamped chi1 sign reversal vs rabi_s, weak-frequency speeds",
        ScanSpec(model=Model.THREE_LEVEL, params=_three(**fig5a_params),
                 swept="rabi_s", grid_min=1.0, grid_max=15.0,
                 quantities=_SPEEDS_W + ("chi1_re",),
                 damping=DampingMode.OFF),
        aliases=("fig6'a",))

    add("fig6pb",
        "undamped chi1 poles and zero vs omega, weak-frequency speeds",
        ScanSpec(model=Model.THREE_LEVEL, params=_three(**fig5b_params),
                 swept="omega", grid_min=3.0, grid_max=15.0,
                 quantities=_SPEEDS_W + ("chi1_re",),
                 damping=DampingMode.OFF),
        aliases=("fig6'b",))

    fig6pc_params = dict(omega=4.65, omega_s=10.01, omega_da=210.0,
                         omega_dc=10.0, rabi=0.00001, rabi_s=100.0)
    add("fig6pc",
        "undamped chi1 transparency zero vs omega, weak-frequency speeds",
        ScanSpec(model=Model.THREE_LEVEL, params=_three(**fig6pc_params),
                 swept="omega", grid_min=60.0, grid_max=140.0,
                 quantities=_SPEEDS_W + ("chi1_re",),
                 damping=DampingMode.OFF),
        aliases=("fig6'c",))

    # ---- damped three-level medium, speeds against the weak frequency
    fig7a_params = dict(omega=4.65, omega_s=4.001, omega_da=20.0,
                        omega_dc=4.0, rabi=0.00001, rabi_s=10.0,
                        gamma_c=100.0, gamma_d=0.001)
    add("fig7a",
        "absorption extremum at zero sum-frequency detuning, weak-frequency speeds",
        ScanSpec(model=Model.THREE_LEVEL, params=_three(**fig7a_params),
                 swept="omega", grid_min=6.0, grid_max=10.0,
                 quantities=_SPEEDS_W + ("chi1_im",),
                 damping=DampingMode.ON))

    fig7b_params = dict(fig7a_params, omega_da=18.0, rabi_s=1000.0,
                        gamma_d=1.0)
    add("fig7b",
        "absorption vs omega at very strong coupling, weak-frequency speeds",
        ScanSpec(model=Model.THREE_LEVEL, params=_three(**fig7b_params),
                 swept="omega", grid_min=5.0, grid_max=9.0,
                 quantities=_SPEEDS_W + ("chi1_im",),
                 damping=DampingMode.ON),
        inherited=("omega", "omega_s", "omega_dc", "rabi"))

    fig7c_params = dict(fig7a_params, omega=8.0, omega_s=4.0,
                        gamma_c=0.02, gamma_d=0.01)
    add("fig7c",
        "absorption and weak-frequency speeds minimized at omega_dc = omega_s",
        ScanSpec(model=Model.THREE_LEVEL, params=_three(**fig7c_params),
                 swept="omega_dc", grid_min=3.0, grid_max=5.0,
                 quantities=_SPEEDS_W + ("chi1_im",),
                 damping=DampingMode.ON),
        inherited=("rabi", "rabi_s", "omega_da"))

    return {p.name: p for p in presets}


_CATALOG = _build_catalog()

_ALIASES = {alias: p.name for p in _CATALOG.values() for alias in p.aliases}


def catalog() -> dict:
    """Name -> Preset mapping (insertion order follows the figures)."""
    return dict(_CATALOG)


def preset_names() -> tuple:
    return tuple(_CATALOG)


def get_preset(name: str) -> Preset:
    key = name.strip()
    key = _ALIASES.get(key, key)
    try:
        return _CATALOG[key]
    except KeyError:
        raise InvalidConfig(f"unknown preset {name!r}; see --list-presets") from None


# ---------------------------------------------------------------------------
# config-file dialect


def _fmt_value(v) -> str:
    if isinstance(v, complex):
        if v.imag == 0:
            return repr(v.real)
        return repr(v)
    return repr(v)


def spec_to_config(spec: ScanSpec, header: str | None = None) -> str:
    """Serialize a ScanSpec to the flat key=value format."""
    lines = []
    if header:
        lines.append(f"# {header}")
    lines += [
        f"model = {spec.model.label}",
        f"swept = {spec.swept}",
        f"grid_min = {spec.grid_min!r}",
        f"grid_max = {spec.grid_max!r}",
        f"points = {spec.points}",
        "quantities = " + ", ".join(spec.quantities),
        f"damping = {spec.damping.value}",
        f"tol_cells = {spec.tol_cells}",
        f"cross_extrema = {'true' if spec.cross_extrema else 'false'}",
        f"pole_tol = {spec.pole_tol!r}",
        f"diff_method = {spec.diff.method.value}",
        f"diff_h = {spec.diff.h!r}",
        f"richardson_levels = {spec.diff.richardson_levels}",
    ]
    if spec.diff.precision is not None:
        lines.append(f"precision = {spec.diff.precision}")
    lines.append("")
    lines.append("# medium parameters")
    for f in dataclasses.fields(spec.params):
        lines.append(f"{f.name} = {_fmt_value(getattr(spec.params, f.name))}")
    return "\n".join(lines) + "\n"


def _parse_pairs(text: str) -> dict:
    pairs = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise InvalidConfig(f"line {lineno}: expected key = value, got {raw!r}")
        key, _, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if not key or not value:
            raise InvalidConfig(f"line {lineno}: empty key or value")
        if key in pairs:
            raise InvalidConfig(f"line {lineno}: duplicate key {key!r}")
        pairs[key] = value
    return pairs


def _take(pairs, key, convert, default=None, required=False):
    if key not in pairs:
        if required:
            raise InvalidConfig(f"missing required key {key!r}")
        return default
    raw = pairs.pop(key)
    try:
        return convert(raw)
    except (ValueError, TypeError):
        raise InvalidConfig(f"bad value for {key!r}: {raw!r}") from None


def _parse_bool(raw: str) -> bool:
    lowered = raw.lower()
    if lowered in ("true", "yes", "1"):
        return True
    if lowered in ("false", "no", "0"):
        return False
    raise ValueError(raw)


def _parse_model(raw: str) -> Model:
    for m in Model:
        if raw == m.label:
            return m
    raise ValueError(raw)


def _parse_damping(raw: str) -> DampingMode:
    for m in DampingMode:
        if raw == m.value:
            return m
    raise ValueError(raw)


def _parse_method(raw: str) -> DiffMethod:
    for m in DiffMethod:
        if raw == m.value:
            return m
    raise ValueError(raw)


def spec_from_config(text: str) -> ScanSpec:
    """Parse the flat key=value format back into a ScanSpec."""
    pairs = _parse_pairs(text)

    model = _take(pairs, "model", _parse_model, required=True)
    swept = _take(pairs, "swept", str, required=True)
    grid_min = _take(pairs, "grid_min", float, required=True)
    grid_max = _take(pairs, "grid_max", float, required=True)
    points = _take(pairs, "points", int, default=501)
    quantities = _take(pairs, "quantities",
                       lambda s: tuple(q.strip() for q in s.split(",") if q.strip()),
                       required=True)
    damping = _take(pairs, "damping", _parse_damping, default=DampingMode.ON)
    tol_cells = _take(pairs, "tol_cells", int, default=2)
    cross = _take(pairs, "cross_extrema", _parse_bool, default=False)
    pole_tol = _take(pairs, "pole_tol", float, default=1e-12)
    method = _take(pairs, "diff_method", _parse_method,
                   default=DiffMethod.RICHARDSON)
    diff_h = _take(pairs, "diff_h", float, default=1e-6)
    levels = _take(pairs, "richardson_levels", int, default=2)
    precision = _take(pairs, "precision", int, default=None)

    for q in quantities:
        if q not in KNOWN_QUANTITIES:
            raise InvalidConfig(f"unknown quantity {q!r}")

    record = FourLevelParams if model is Model.FOUR_LEVEL else ThreeLevelParams
    fields = {f.name for f in dataclasses.fields(record)}
    values = {}
    for name in list(pairs):
        if name not in fields:
            raise InvalidConfig(f"unknown key {name!r} for {model.label} model")
        raw = pairs.pop(name)
        try:
            z = complex(raw.replace(" ", ""))
        except ValueError:
            raise InvalidConfig(f"bad value for {name!r}: {raw!r}") from None
        values[name] = z if z.imag != 0 else z.real
    try:
        params = record(**values)
    except (TypeError, ValueError) as exc:
        raise InvalidConfig(f"bad medium parameters: {exc}") from None

    try:
        diff = DiffConfig(method=method, h=diff_h, richardson_levels=levels,
                          precision=precision)
        return ScanSpec(model=model, params=params, swept=swept,
                        grid_min=grid_min, grid_max=grid_max, points=points,
                        quantities=quantities, damping=damping, diff=diff,
                        tol_cells=tol_cells, pole_tol=pole_tol,
                        cross_extrema=cross)
    except ValueError as exc:
        raise InvalidConfig(str(exc)) from None
