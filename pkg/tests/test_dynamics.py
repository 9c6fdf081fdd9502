"""
Тесты эталонной динамики пеленга и источников входа.
"""
import math

import numpy as np
import pytest

from core.exceptions import GeometryError
from core.models import AxisCurve, Curve3, InputPair, SceneSpec, SinusoidChannel, SinusoidSpec
from dynamics import (
    SceneInput, SinusoidInput, advance_truth, bearing_derivative, bearing_derivative_lifted,
    initial_truth, random_spec, sample_input, scene_to_bearing, scene_to_vbar,
    step_bearing_direct, step_truth,
)
from geometry import E1, E2, E3, AlgebraVector, Rotation3, UnitVector3, exp_so3, geodesic_angle, rotation_about
from symmetry import DEFAULT_ORIGIN, phi
from strategies import random_tangent_input, random_unit


def constant_source(omega=(0.0, 0.0, 0.0), vbar=(0.0, 0.0, 0.0)) -> SinusoidInput:
    """Постоянный вход: A·sin(π/2) при нулевой частоте."""
    def channel(values):
        return SinusoidChannel(amplitude=tuple(abs(v) for v in values),
                               frequency=(0.0, 0.0, 0.0),
                               phase=tuple(math.copysign(math.pi / 2, v) for v in values))
    return SinusoidInput(SinusoidSpec(omega=channel(omega), vbar=channel(vbar)))


def test_bearing_derivative_examples():
    assert np.allclose(bearing_derivative(E3, InputPair([0, 0, 0], [1, 0, 0])), [1, 0, 0])
    assert np.allclose(bearing_derivative(E3, InputPair([0, 0, 1], [0, 0, 0])), [0, 0, 0])


def test_bearing_derivative_forms_agree(rng):
    for _ in range(200):
        xi = random_unit(rng)
        u = random_tangent_input(rng, xi)
        assert np.allclose(bearing_derivative(xi, u), bearing_derivative_lifted(xi, u), atol=1e-12)


def test_sample_input_examples(rng):
    spec = SinusoidSpec(
        omega=SinusoidChannel((1.0, 2.0, 3.0), (0.5, 1.0, 2.0), (0.0, 0.0, 0.0)),
        vbar=SinusoidChannel((4.0, 5.0, 6.0), (1.5, 0.2, 0.3), (0.0, 0.0, 0.0)),
    )
    u = sample_input(0.0, spec, E3)
    assert np.array_equal(u.omega, np.zeros(3))
    assert np.array_equal(u.vbar, np.zeros(3))
    for t in (0.0, 0.3, 7.1):
        assert sample_input(t, SinusoidSpec(), E1) == InputPair.zero()
    for _ in range(100):
        xi = random_unit(rng)
        u = sample_input(float(rng.uniform(0, 20)), random_spec(rng), xi)
        assert abs(float(xi.v @ u.vbar)) <= 1e-12


def test_random_spec_determinism_and_ranges():
    assert random_spec(np.random.default_rng(5)) == random_spec(np.random.default_rng(5))
    rng = np.random.default_rng(99)
    amplitudes = []
    for _ in range(10_000):
        spec = random_spec(rng)
        for channel in (spec.omega, spec.vbar):
            assert all(0.0 <= a <= 10.0 for a in channel.amplitude)
            assert all(0.0 <= f <= 10.0 for f in channel.frequency)
            assert all(-math.pi <= p <= math.pi for p in channel.phase)
            amplitudes.extend(channel.amplitude)
    assert 4.8 <= float(np.mean(amplitudes)) <= 5.2


def test_channel_rejects_out_of_range_parameters():
    from core.exceptions import ValidationError
    with pytest.raises(ValidationError):
        SinusoidChannel(amplitude=(-1.0, 0.0, 0.0))
    with pytest.raises(ValidationError):
        SinusoidChannel(phase=(0.0, 4.0, 0.0))


def test_scene_to_bearing_examples():
    identity = Rotation3.identity()
    p_B = np.zeros(3)
    assert np.allclose(scene_to_bearing(p_B, np.array([0, 0, 5.0]), identity).v, E3.v)
    p_T = np.array([1.0, -2.0, 0.5])
    assert np.allclose(scene_to_bearing(p_B, p_T, identity).v,
                       scene_to_bearing(p_B, 10 * p_T, identity).v, atol=1e-15)
    R = rotation_about(E3.v, math.pi / 2)
    assert np.allclose(scene_to_bearing(p_B, E1.v, R).v, -E2.v, atol=1e-12)


def test_scene_rejects_coincident_positions():
    p = np.array([1.0, 2.0, 3.0])
    with pytest.raises(GeometryError):
        scene_to_bearing(p, p, Rotation3.identity())
    with pytest.raises(GeometryError):
        scene_to_vbar(p, p, np.zeros(3), np.zeros(3), Rotation3.identity())


def test_scene_to_vbar_examples():
    identity = Rotation3.identity()
    p_B, p_T = np.array([1.0, 0.0, 0.0]), np.array([2.0, 3.0, -1.0])
    radial = 0.7 * (p_T - p_B)
    assert np.allclose(scene_to_vbar(p_B, p_T, np.zeros(3), radial, identity), 0.0, atol=1e-15)
    assert np.array_equal(scene_to_vbar(p_B, p_T, np.zeros(3), np.zeros(3), identity), np.zeros(3))


def test_scene_vbar_matches_finite_difference():
    spec = SceneSpec(
        vehicle=Curve3(x=AxisCurve(c1=0.5), y=AxisCurve(amplitude=0.3, frequency=0.2)),
        target=Curve3(x=AxisCurve(c0=2.0), z=AxisCurve(c0=5.0, c2=-0.1)),
    )
    source = SceneInput(spec)
    h = 1e-6
    for t in (0.0, 0.7, 2.5):
        b = source.bearing(t)
        numeric = (source.bearing(t + h).v - source.bearing(t - h).v) / (2 * h)
        u = source.sample(t, b)
        assert np.allclose(numeric, bearing_derivative(b, u), atol=1e-4)


def test_scene_clearance():
    source = SceneInput(SceneSpec(target=Curve3(z=AxisCurve(c0=1.0, c1=-1.0))))
    with pytest.raises(GeometryError):
        source.check_clearance(2.0, 0.01)
    assert SceneInput(SceneSpec()).check_clearance(1.0, 0.1) == pytest.approx(5.0)


def test_initial_truth_projects_to_initial_bearing(rng):
    for _ in range(50):
        xi0 = random_unit(rng)
        state = initial_truth(xi0, constant_source())
        assert geodesic_angle(phi(state.X, DEFAULT_ORIGIN.xi_ring), xi0) <= 1e-12
    state = initial_truth(-E3, constant_source())
    assert np.allclose(state.xi.v, -E3.v, atol=1e-12)


def test_step_truth_zero_input_keeps_state():
    state = initial_truth(UnitVector3.normalized([0.2, 0.4, -0.9]), constant_source())
    stepped = step_truth(state, constant_source(), 1e-3)
    assert np.allclose(stepped.X.m, state.X.m, atol=1e-15)
    assert np.allclose(stepped.xi.v, state.xi.v, atol=1e-15)
    assert stepped.t == pytest.approx(1e-3)


def test_step_truth_constant_rotation():
    omega = (0.0, 0.0, math.pi / 2)
    source = constant_source(omega=omega)
    state = initial_truth(E1, source)
    h = 1e-4
    for _ in range(10_000):
        state = step_truth(state, source, h)
    expected = phi(exp_so3(AlgebraVector(omega)), E1)
    assert geodesic_angle(state.xi, expected) <= 1e-6


def test_truth_stays_in_group_over_long_run(rng):
    xi0 = random_unit(rng)
    state = initial_truth(xi0, constant_source())
    u = random_tangent_input(rng, xi0, scale=1.0)
    for _ in range(200_000):
        state = advance_truth(state, u, 1e-4)
    assert state.X.orthogonality_error() <= 1e-12


def test_lifted_and_direct_integration_agree(rng):
    """20 с при h = 1e-4; три спецификации входов вместо десяти ради времени выполнения."""
    h, duration = 1e-4, 20.0
    steps = int(round(duration / h))
    for _ in range(3):
        source = SinusoidInput(random_spec(rng, amplitude_max=0.1, frequency_max=0.2))
        xi0 = random_unit(rng)
        lifted = initial_truth(xi0, source)
        direct = xi0
        worst = 0.0
        for k in range(steps):
            t_mid = (k + 0.5) * h
            lifted = advance_truth(lifted, source.sample(t_mid, lifted.xi), h)
            direct = step_bearing_direct(direct, source.sample(t_mid, direct), h)
            worst = max(worst, geodesic_angle(lifted.xi, direct))
        assert worst <= 1e-4
