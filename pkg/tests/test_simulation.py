"""
Тесты прогонов, метрик и серий Монте-Карло.
"""
import math
from dataclasses import replace

import numpy as np
import pytest

from config.run_config import RunConfig
from core.exceptions import SimulationError
from core.models import AxisCurve, Curve3, InputPair, NoiseSpec, RunMetrics, SceneSpec, SinusoidChannel, SinusoidSpec
from geometry import UnitVector3
from observers.naive import NaiveObserver
from output import format_csv
from simulation import aggregate, compute_run_metrics, convergence_time, run_batch, run_single, steady_window
from simulation.batch import run_metrics_for

MODERATE_INPUTS = SinusoidSpec(
    omega=SinusoidChannel((0.5, 0.3, 0.4), (0.2, 0.5, 0.1), (0.0, 1.0, -2.0)),
    vbar=SinusoidChannel((0.4, 0.2, 0.5), (0.3, 0.1, 0.4), (0.5, -1.0, 2.5)),
)


def test_record_layout_and_unit_norms():
    cfg = RunConfig(duration=0.5, dt=1e-3, seed=1)
    records = run_single(cfg)
    assert len(records) == cfg.steps + 1 == 501
    assert records[0].t == 0.0
    assert records[-1].t == pytest.approx(0.5)
    for r in records:
        for v in (r.xi, r.y, r.xihat_eqv, r.xihat_naive):
            assert abs(float(np.linalg.norm(v.v)) - 1.0) <= 1e-9
        assert 0.0 <= r.V <= 2.0


def test_same_seed_gives_identical_bytes():
    cfg = RunConfig(duration=0.3, dt=1e-3, seed=17)
    assert format_csv(run_single(cfg)) == format_csv(run_single(cfg))
    other = format_csv(run_single(replace(cfg, seed=18)))
    assert other != format_csv(run_single(cfg))


def test_observer_initialized_at_truth_stays_exact():
    cfg = RunConfig(duration=2.0, dt=1e-3, seed=5, observer_init="truth", noise=NoiseSpec.disabled())
    assert max(r.angle_err_eqv for r in run_single(cfg)) <= 1e-6


def test_noise_free_run_converges_by_fifteen_seconds():
    for seed in range(3):
        cfg = RunConfig(duration=15.0, dt=1e-2, seed=seed, observer="equivariant",
                        noise=NoiseSpec.disabled(), sinusoid=MODERATE_INPUTS)
        last = run_single(cfg)[-1]
        assert last.angle_err_eqv < math.radians(0.5)


def test_observer_selection_fills_fields():
    eqv = run_single(RunConfig(duration=0.1, observer="equivariant"))
    assert all(r.xihat_naive is None and r.angle_err_naive is None for r in eqv)
    assert all(r.V is not None and r.Vdot is not None for r in eqv)
    naive = run_single(RunConfig(duration=0.1, observer="naive"))
    assert all(r.xihat_eqv is None and r.V is None for r in naive)
    assert all(r.angle_err_naive is not None for r in naive)


def test_observers_share_measurements():
    base = RunConfig(duration=0.2, seed=3)
    both = run_single(base)
    single = run_single(replace(base, observer="equivariant"))
    assert [r.y for r in both] == [r.y for r in single]
    assert [r.angle_err_eqv for r in both] == [r.angle_err_eqv for r in single]


def test_decimation_and_projection_variants_run():
    base = RunConfig(duration=0.5, seed=2)
    decimated = run_single(replace(base, decimation=10))
    assert len(decimated) == len(run_single(base))
    assert decimated[-1].angle_err_eqv != run_single(base)[-1].angle_err_eqv
    before = run_single(replace(base, noise=replace(base.noise, noise_before_projection=True)))
    assert all(math.isfinite(r.angle_err_eqv) for r in before)


def test_scene_source_run():
    scene = SceneSpec(
        vehicle=Curve3(x=AxisCurve(c1=0.3), y=AxisCurve(amplitude=0.5, frequency=0.2)),
        target=Curve3(x=AxisCurve(c0=1.0), z=AxisCurve(c0=6.0)),
        body_rate=(0.0, 0.1, 0.2),
    )
    cfg = RunConfig(duration=1.0, dt=1e-3, input_source="scene", scene=scene,
                    noise=NoiseSpec.disabled(), observer_init="truth")
    records = run_single(cfg)
    assert records[-1].angle_err_eqv <= 1e-6


def test_no_nan_across_seeds():
    for seed in range(100):
        records = run_single(RunConfig(duration=0.5, dt=1e-3, seed=seed))
        assert all(math.isfinite(r.angle_err_eqv) and math.isfinite(r.angle_err_naive) for r in records)


def test_non_finite_estimate_aborts_with_step(monkeypatch):
    def estimate(self):
        if self.steps >= 3:
            return UnitVector3._wrap(np.full(3, np.nan))
        return self.state.xihat

    monkeypatch.setattr(NaiveObserver, "estimate", property(estimate))
    with pytest.raises(SimulationError) as info:
        run_single(RunConfig(duration=0.1, seed=0, observer="naive"))
    assert info.value.step == 3
    assert "step 3" in str(info.value)


def test_diverging_input_aborts_with_step(monkeypatch):
    calls = []

    def blow_up(u, spec, rng):
        calls.append(1)
        if len(calls) > 5:
            return InputPair(np.full(3, 1e300), np.full(3, 1e300))
        return u

    monkeypatch.setattr("simulation.runner.perturb_input", blow_up)
    with pytest.raises(SimulationError) as info:
        run_single(RunConfig(duration=0.1, seed=0, observer="naive"))
    assert info.value.step is not None and info.value.step >= 5


def test_steady_window_and_convergence_time():
    assert steady_window(20.0) == (10.0, 20.0)
    assert steady_window(4.0) == (2.0, 4.0)
    times = np.linspace(0.0, 1.0, 11)
    errors = np.array([1.0, 0.5, 0.2, 0.001, 0.0, 0.02, 0.0, 0.0, 0.0, 0.0, 0.0])
    assert convergence_time(times, errors, threshold=0.01) == pytest.approx(0.6)
    assert convergence_time(times, np.full(11, 0.5), threshold=0.01) is None
    assert convergence_time(times, np.zeros(11), threshold=0.01) == 0.0


def test_aggregate_is_order_independent():
    runs = [RunMetrics(seed=s, final_err_eqv=0.1 * s, final_err_naive=0.2 * s,
                       steady_median_eqv=0.01 * s, steady_median_naive=0.02 * s,
                       outlier_count=s) for s in range(5)]
    forward = aggregate(runs)
    assert aggregate(list(reversed(runs))) == forward
    assert forward.total_outliers == 10
    assert forward.eqv_better_count == 4
    assert forward.median_final_err_eqv == pytest.approx(0.2)


def test_single_run_batch_matches_run_metrics():
    cfg = RunConfig(duration=0.5, seed=4)
    batch = run_batch(cfg)
    assert batch.runs == [compute_run_metrics(run_single(cfg), 4)]
    assert batch.median_steady_eqv == batch.runs[0].steady_median_eqv


def test_batch_independent_of_parallelism():
    cfg = RunConfig(duration=0.3, seed=10, runs=3)
    serial = run_batch(cfg, workers=1)
    parallel = run_batch(cfg, workers=2)
    assert serial == parallel
    assert [r.seed for r in serial.runs] == [10, 11, 12]
    assert serial.runs[1] == run_metrics_for(replace(cfg, seed=11, runs=1))


def test_equivariant_beats_naive_under_default_noise():
    batch = run_batch(RunConfig(runs=20, seed=0))
    assert batch.eqv_better_count >= 18
    assert all(r.steady_median_eqv < math.radians(10.0) for r in batch.runs)
