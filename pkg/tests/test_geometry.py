"""
Тесты геометрического ядра.
"""
import math

import numpy as np
import pytest
from hypothesis import given, settings

from core.exceptions import GeometryError, ValidationError
from geometry import (
    E1, E2, E3, AlgebraVector, Rotation3, UnitVector3, cross, exp_so3, geodesic_angle,
    orthonormalize, project_tangent, repair, rotation_about, rotation_between, skew, vee,
)
from strategies import random_rotation, random_unit, rotations, unit_vectors, vectors


def test_skew_examples():
    assert np.allclose(skew([1, 0, 0]) @ np.array([0, 1, 0]), [0, 0, 1])
    assert np.array_equal(skew([1, 2, 3]), [[0, -3, 2], [3, 0, -1], [-2, 1, 0]])
    assert np.array_equal(skew([0, 0, 0]), np.zeros((3, 3)))


@given(vectors, vectors)
def test_skew_matches_cross_and_vee_inverts(a, b):
    assert np.allclose(skew(a) @ b, cross(a, b), atol=1e-12)
    assert np.array_equal(vee(skew(a)), a)


def test_project_tangent_examples():
    assert np.allclose(project_tangent(E3, [1, 2, 3]), [1, 2, 0])
    y = UnitVector3.normalized([1, -2, 0.5])
    assert np.allclose(project_tangent(y, y.v), 0.0, atol=1e-15)


def test_projector_equals_minus_skew_squared(rng):
    for _ in range(100):
        y = random_unit(rng)
        s = skew(y.v)
        assert np.allclose(np.eye(3) - np.outer(y.v, y.v), -(s @ s), atol=1e-14)


def test_exp_so3_examples():
    assert exp_so3(AlgebraVector.zero()) == Rotation3.identity()
    quarter = exp_so3(AlgebraVector([0, 0, math.pi / 2]))
    assert np.allclose(quarter.apply(E1), E2.v, atol=1e-12)


def test_exp_so3_small_angle_branch():
    w = np.array([1e-10, -2e-10, 3e-10])
    R = exp_so3(AlgebraVector(w))
    assert np.allclose(R.m, np.eye(3) + skew(w), atol=1e-18)
    assert R.orthogonality_error() <= 1e-15


@given(vectors)
def test_exp_so3_inverse(w):
    R = exp_so3(AlgebraVector(w)) @ exp_so3(AlgebraVector(-w))
    assert np.allclose(R.m, np.eye(3), atol=1e-12)


@given(vectors)
@settings(max_examples=200)
def test_exp_so3_stays_in_group(w):
    R = exp_so3(AlgebraVector(w))
    assert R.orthogonality_error() <= 1e-12
    assert np.linalg.det(R.m) > 0


def test_rotation_between_examples():
    R = rotation_between(E1, E2)
    assert np.allclose(R.m, rotation_about(E3.v, math.pi / 2).m, atol=1e-12)
    a = UnitVector3.normalized([0.3, -0.4, 0.2])
    assert np.allclose(rotation_between(a, a).m, np.eye(3), atol=1e-15)
    assert np.allclose(rotation_between(E3, -E3).apply(E3), -E3.v, atol=1e-12)


@given(unit_vectors, unit_vectors)
def test_rotation_between_maps_a_to_b(a, b):
    R = rotation_between(a, b)
    assert np.allclose(R.apply(a), b.v, atol=1e-9)
    assert R.orthogonality_error() <= 1e-12


def test_geodesic_angle_examples():
    a = UnitVector3.normalized([1, 2, 3])
    assert geodesic_angle(E1, E1) == 0.0
    assert geodesic_angle(E1, E2) == pytest.approx(math.pi / 2)
    assert geodesic_angle(a, -a) == pytest.approx(math.pi)


def test_geodesic_angle_keeps_nan():
    broken = UnitVector3._wrap(np.array([math.nan, 0.0, 0.0]))
    assert math.isnan(geodesic_angle(broken, E1))
    assert math.isnan(geodesic_angle(E1, broken))


def test_orthonormalize_identity():
    assert np.allclose(orthonormalize(np.eye(3)).m, np.eye(3), atol=1e-15)


def test_orthonormalize_perturbed_rotation(rng):
    for _ in range(20):
        R = random_rotation(rng)
        Rp = orthonormalize(R.m + 1e-6 * rng.standard_normal((3, 3)))
        assert np.linalg.norm(Rp.m.T @ Rp.m - np.eye(3)) <= 1e-14
        assert np.allclose(orthonormalize(1.001 * R.m).m, R.m, atol=1e-12)


def test_orthonormalize_rejects_reflection():
    with pytest.raises(GeometryError):
        orthonormalize(-np.eye(3))


def test_repair_restores_orthogonality():
    identity = Rotation3.identity()
    assert repair(identity) is identity
    drifted = Rotation3((1.0 + 1e-10) * np.eye(3))
    assert drifted.orthogonality_error() > 1e-13
    assert repair(drifted).orthogonality_error() <= 1e-14


def test_unit_vector_rejects_non_unit():
    with pytest.raises(ValidationError):
        UnitVector3(np.array([1.0, 1.0, 0.0]))
    with pytest.raises(ValidationError):
        UnitVector3.normalized([0.0, 0.0, 0.0])
    with pytest.raises(ValidationError):
        UnitVector3.normalized([math.nan, 0.0, 1.0])


def test_rotation_rejects_non_orthogonal_and_reflection():
    with pytest.raises(ValidationError):
        Rotation3(np.diag([1.0, 1.0, 1.1]))
    with pytest.raises(ValidationError):
        Rotation3(np.diag([1.0, 1.0, -1.0]))


@given(rotations, rotations)
def test_rotation_product_and_transpose(X, Y):
    assert np.allclose((X @ Y).m, X.m @ Y.m)
    assert np.allclose((X @ X.T).m, np.eye(3), atol=1e-12)
