"""Statistical-speed metrology of driven atomic media.

Steady-state amplitudes of four- and three-level atoms, their linear and
third-order susceptibilities, quantum Fisher information /
Hilbert-Schmidt speed of the normalized state, and a sweep engine that
normalizes curves, detects extrema and sign changes, and reports feature
alignments.  The `eitm` console script front-ends the sweep engine.
"""

from .atoms import (AtomState, DampingMode, Detunings, FourLevelParams,
                    Model, ThreeLevelParams, detunings_model1,
                    detunings_model2, normalize, pure_density,
                    steady_amplitudes_model1, steady_amplitudes_model2)
from .errors import (AllPoles, DegenerateInput, EitmError, InvalidConfig,
                     InvalidSpec, PoleError, StepTooLarge)
from .response import (LinearIndex, Order, PhysicalConstants, Susceptibility,
                       absorption_linear, absorption_saturated, chi1_model2,
                       chi3_model1, linear_index, nonlinear_index,
                       wave_intensity)
from .csvio import (CsvTable, coincidence_text, csv_text, features_text,
                    read_csv, renormalize, write_csv)
from .presets import (Preset, get_preset, preset_names, spec_from_config,
                      spec_to_config)
from .scan import (CoincidencePair, CoincidenceReport, Feature, FeatureSet,
                   ScanResult, ScanSpec, coincidence, detect_features,
                   run_scan)
from .speed import (DiffConfig, DiffMethod, ParamSelector, cramer_rao_bound,
                    hss, qfi_pure, speeds, state_derivative)

__version__ = "0.1.0"

__all__ = [
    "AllPoles", "AtomState", "CoincidencePair", "CoincidenceReport",
    "CsvTable", "DampingMode", "DegenerateInput", "Detunings", "DiffConfig",
    "DiffMethod", "EitmError", "Feature", "FeatureSet", "FourLevelParams",
    "InvalidConfig", "InvalidSpec", "LinearIndex", "Model", "Order",
    "ParamSelector", "PhysicalConstants", "PoleError", "Preset", "ScanResult",
    "ScanSpec", "StepTooLarge", "Susceptibility", "ThreeLevelParams",
    "absorption_linear", "absorption_saturated", "chi1_model2", "chi3_model1",
    "coincidence", "coincidence_text", "cramer_rao_bound", "csv_text",
    "detect_features", "detunings_model1", "detunings_model2", "features_text",
    "get_preset", "hss", "linear_index", "nonlinear_index", "normalize",
    "preset_names", "pure_density", "qfi_pure", "read_csv", "renormalize",
    "run_scan", "spec_from_config", "spec_to_config", "speeds",
    "state_derivative", "steady_amplitudes_model1", "steady_amplitudes_model2",
    "wave_intensity", "write_csv", "__version__",
]
