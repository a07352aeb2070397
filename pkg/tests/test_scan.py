"""Sweep engine, feature detection and coincidence pairing tests.

Synthetic curves with known analytic features pin the detector; the
model-backed sweeps check masking, normalization and the minimum-sharing
property of the Fisher and Hilbert-Schmidt curves (oracle: an
independent re-scan at ten times the resolution).
"""

import dataclasses
import math

import numpy as np
import pytest

from eitm import (
    AllPoles,
    DampingMode,
    Feature,
    FeatureSet,
    FourLevelParams,
    InvalidSpec,
    Model,
    ScanSpec,
    ThreeLevelParams,
    coincidence,
    detect_features,
    get_preset,
    run_scan,
)


def _grid(lo, hi, n):
    return np.linspace(lo, hi, n)


def test_parabola_minimum_refined_to_vertex():
    x = _grid(0.0, 2.0, 201)
    fs = detect_features((x - 1.0) ** 2 + 0.5, x)
    assert len(fs.minima) == 1
    assert len(fs.maxima) == len(fs.zeros) == len(fs.poles) == 0
    m = fs.minima[0]
    assert m.kind == "min"
    assert abs(m.location - 1.0) < 1e-12  # parabolic fit is exact here
    assert m.index == 100
    assert abs(m.cell - 100.0) < 1e-9


def test_parabola_touching_zero_also_reports_node_zero():
    x = _grid(0.0, 2.0, 201)
    fs = detect_features((x - 1.0) ** 2, x)
    assert len(fs.minima) == 1
    assert len(fs.zeros) == 1
    assert fs.zeros[0].index == 100
    assert fs.zeros[0].location == 1.0


def test_simple_pole_classified_and_located():
    x = _grid(0.0, 2.0, 200)  # even count keeps x=1 off the grid
    fs = detect_features(1.0 / (x - 1.0), x)
    assert len(fs.poles) == 1
    assert len(fs.zeros) == 0
    assert abs(fs.poles[0].location - 1.0) < 1e-9  # reciprocal interpolation
    assert fs.poles[0].kind == "pole"


def test_steep_zero_crossing_stays_a_zero():
    x = _grid(0.0, 2.0, 201)
    fs = detect_features(np.tanh(50.0 * (x - 1.0)), x)
    assert len(fs.poles) == 0
    crossings = [z for z in fs.zeros if abs(z.location - 1.0) < 0.02]
    assert len(crossings) == 1


def test_sine_extrema_and_crossing():
    x = _grid(0.0, 2.0 * math.pi, 201)
    dx = x[1] - x[0]
    fs = detect_features(np.sin(x), x)
    assert len(fs.maxima) == 1 and len(fs.minima) == 1
    assert abs(fs.maxima[0].location - math.pi / 2) < dx * dx
    assert abs(fs.minima[0].location - 3 * math.pi / 2) < dx * dx
    interior = [z for z in fs.zeros if abs(z.location - math.pi) < dx]
    assert len(interior) == 1
    assert len(fs.poles) == 0


def test_negated_curve_swaps_extrema_keeps_crossings():
    x = _grid(0.0, 2.0 * math.pi, 201)
    fs = detect_features(np.sin(x), x)
    flipped = detect_features(-np.sin(x), x)
    assert [m.index for m in fs.maxima] == [m.index for m in flipped.minima]
    assert [m.index for m in fs.minima] == [m.index for m in flipped.maxima]
    assert [z.location for z in fs.zeros] == pytest.approx(
        [z.location for z in flipped.zeros], abs=1e-12)


def test_constant_curve_has_no_features():
    x = _grid(0.0, 1.0, 51)
    assert len(detect_features(np.full(51, 2.5), x)) == 0


def test_nan_gap_splits_runs():
    x = _grid(0.0, 6.0, 7)
    vee = np.array([3.0, 2.0, 1.0, np.nan, 1.0, 2.0, 3.0])
    assert len(detect_features(vee, x).minima) == 0
    filled = np.array([3.0, 2.0, 1.0, 0.5, 1.0, 2.0, 3.0])
    assert len(detect_features(filled, x).minima) == 1


def test_refinement_moves_features_less_than_coarse_cell():
    # doubling the resolution must not shift any refined location by
    # more than one coarse cell
    spec = get_preset("fig5b").spec
    coarse = run_scan(dataclasses.replace(spec, points=501))
    fine = run_scan(dataclasses.replace(spec, points=1001))
    cell = spec.cell_width()
    coarse_fs = coarse.features["chi1_re"]
    fine_fs = fine.features["chi1_re"]
    assert len(coarse_fs.poles) == len(fine_fs.poles) == 2
    for fc, ff in zip(sorted(coarse_fs.poles, key=lambda f: f.location),
                      sorted(fine_fs.poles, key=lambda f: f.location)):
        assert abs(fc.location - ff.location) < cell


def _feat(kind, cell):
    return Feature(kind=kind, index=int(cell), location=float(cell),
                   cell=float(cell), value=1.0)


def test_coincidence_identical_sets_align_at_zero_distance():
    fs = FeatureSet(maxima=(_feat("max", 40.0),), zeros=(_feat("zero", 10.0),))
    rep = coincidence(fs, fs, tol_cells=2)
    assert len(rep.pairs) == 2
    assert all(p.aligned and p.distance_cells == 0.0 for p in rep.pairs)
    assert rep.unpaired_a == rep.unpaired_b == ()


def test_coincidence_five_cells_apart_is_not_aligned():
    a = FeatureSet(minima=(_feat("min", 100.0),))
    b = FeatureSet(minima=(_feat("min", 105.0),))
    rep = coincidence(a, b, tol_cells=2)
    assert len(rep.pairs) == 1
    assert rep.pairs[0].distance_cells == 5.0
    assert not rep.pairs[0].aligned
    assert rep.aligned == ()


def test_coincidence_cross_extrema_pairs_min_with_max():
    a = FeatureSet(minima=(_feat("min", 50.0),))
    b = FeatureSet(maxima=(_feat("max", 50.5),))
    plain = coincidence(a, b, tol_cells=2)
    assert plain.pairs == ()
    assert len(plain.unpaired_a) == len(plain.unpaired_b) == 1
    crossed = coincidence(a, b, tol_cells=2, cross_extrema=True)
    assert len(crossed.pairs) == 1
    assert crossed.pairs[0].aligned


def test_coincidence_is_symmetric():
    a = FeatureSet(maxima=(_feat("max", 10.0), _feat("max", 30.0)))
    b = FeatureSet(maxima=(_feat("max", 11.0),))
    ab = coincidence(a, b, tol_cells=2)
    ba = coincidence(b, a, tol_cells=2)
    assert len(ab.pairs) == len(ba.pairs) == 1
    assert ab.pairs[0].feature_a.cell == ba.pairs[0].feature_b.cell
    assert [f.cell for f in ab.unpaired_a] == [f.cell for f in ba.unpaired_b]


def test_scan_normalization_and_argmax_bookkeeping():
    spec = dataclasses.replace(get_preset("fig7c").spec, points=101)
    res = run_scan(spec)
    for q in spec.quantities:
        curve = res.curves[q]
        normed = res.normalized[q]
        i = res.argmax_index[q]
        assert math.isclose(np.nanmax(np.abs(normed)), 1.0, rel_tol=1e-12)
        assert i == int(np.nanargmax(np.abs(curve)))
        assert math.isclose(res.norm_max[q], abs(curve[i]), rel_tol=1e-12)
        assert np.allclose(normed * res.norm_max[q], curve, equal_nan=True)


def test_scan_constant_quantity_normalizes_to_one():
    # without damping, decay rates do not enter: sweeping one yields a
    # perfectly flat curve and no features
    params = FourLevelParams(omega=3.0, omega_s=1.0, omega_ba=3.1,
                             omega_ca=6.0, omega_dc=1.0, rabi_ba=0.000011,
                             rabi_cb=0.00001, rabi_dc=10.0)
    spec = ScanSpec(model=Model.FOUR_LEVEL, params=params, swept="gamma_c",
                    grid_min=0.0, grid_max=1.0, points=11,
                    quantities=("chi3_abs",), damping=DampingMode.OFF)
    res = run_scan(spec)
    assert np.allclose(res.normalized["chi3_abs"], 1.0, rtol=0, atol=1e-15)
    assert len(res.features["chi3_abs"]) == 0


def test_scan_masks_isolated_pole_node():
    spec = dataclasses.replace(get_preset("fig2b").spec, points=11)
    res = run_scan(spec)  # node 5 sits exactly on the probe resonance
    for q in spec.quantities:
        assert res.masked_indices(q) == (5,)
        assert np.isnan(res.curves[q][5])
        assert np.isnan(res.normalized[q][5])


def test_scan_all_poles_raises():
    spec = dataclasses.replace(get_preset("fig2a").spec, points=51,
                               damping=DampingMode.OFF)
    with pytest.raises(AllPoles):
        run_scan(spec)


def test_scan_is_deterministic():
    spec = dataclasses.replace(get_preset("fig6d").spec, points=51)
    a = run_scan(spec)
    b = run_scan(spec)
    for q in spec.quantities:
        assert np.array_equal(a.curves[q], b.curves[q], equal_nan=True)
        assert a.features[q] == b.features[q]


def test_fisher_and_hss_share_their_minimum():
    # independent oracle: re-scan at 10x the resolution and require the
    # dense minimum to fall inside the coarse minimum's cell
    spec = get_preset("fig6b").spec
    res = run_scan(spec)
    i_f = int(np.nanargmin(np.abs(res.curves["qfi_omegas"])))
    i_s = int(np.nanargmin(np.abs(res.curves["hss_omegas"])))
    assert i_f == i_s
    dense = run_scan(dataclasses.replace(spec, points=10 * (spec.points - 1) + 1))
    j = int(np.nanargmin(np.abs(dense.curves["qfi_omegas"])))
    coarse_loc = res.grid[i_f]
    dense_loc = dense.grid[j]
    assert abs(dense_loc - coarse_loc) <= spec.cell_width()


def test_spec_validation_errors():
    p1 = get_preset("fig2a").spec.params
    p2 = get_preset("fig5a").spec.params
    good = get_preset("fig5a").spec
    with pytest.raises(InvalidSpec):
        run_scan(dataclasses.replace(good, params=p1))  # model mismatch
    with pytest.raises(InvalidSpec):
        run_scan(dataclasses.replace(good, points=2))
    with pytest.raises(InvalidSpec):
        run_scan(dataclasses.replace(good, grid_min=5.0, grid_max=5.0))
    with pytest.raises(InvalidSpec):
        run_scan(dataclasses.replace(good, swept="not_a_field"))
    with pytest.raises(InvalidSpec):
        run_scan(dataclasses.replace(good, quantities=("chi3_abs",)))
    with pytest.raises(InvalidSpec):
        run_scan(dataclasses.replace(good, quantities=("chi1_re", "chi1_re")))
    with pytest.raises(InvalidSpec):
        run_scan(dataclasses.replace(good, quantities=()))
    with pytest.raises(InvalidSpec):
        run_scan(dataclasses.replace(good, quantities=("mystery",)))
    with pytest.raises(InvalidSpec):
        run_scan(dataclasses.replace(good, swept="gamma_c", grid_min=-1.0))
    with pytest.raises(InvalidSpec):
        run_scan(dataclasses.replace(good, grid_min=-1.0, grid_max=1.0))
    assert isinstance(p2, ThreeLevelParams)


def test_cell_width():
    spec = dataclasses.replace(get_preset("fig5a").spec, points=11)
    assert math.isclose(spec.cell_width(), (spec.grid_max - spec.grid_min) / 10,
                        rel_tol=1e-15)
