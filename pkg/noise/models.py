"""
Модели искажений входов и измерений.

Аддитивный гауссов шум входов, шум поворота пеленга (случайная ось,
гауссов угол) и выбросы, равномерно распределённые на сфере.
"""
import logging
import math
from typing import Tuple

import numpy as np

from core.models import InputPair, NoiseSpec
from geometry.operations import exp_so3
from geometry.types import AlgebraVector, UnitVector3

logger = logging.getLogger(__name__)


def random_unit_vector(rng: np.random.Generator) -> UnitVector3:
    """
    Равномерно распределённая точка на S² (нормированный гауссов вектор).
    """
    while True:
        v = rng.standard_normal(3)
        norm = math.sqrt(float(v @ v))
        if norm > 1e-12:
            return UnitVector3._wrap(v / norm)


def perturb_input(u: InputPair, spec: NoiseSpec, rng: np.random.Generator) -> InputPair:
    """
    Добавляет независимый шум N(0, σ²) к каждой из шести компонент входа.

    Args:
        u: Чистый вход
        spec: Параметры шума
        rng: Генератор потока шума входов

    Returns:
        Зашумлённый вход
    """
    if spec.input_sigma == 0.0:
        return u
    noise = rng.normal(0.0, spec.input_sigma, size=6)
    return InputPair(u.omega + noise[:3], u.vbar + noise[3:])


def perturb_bearing(b: UnitVector3, spec: NoiseSpec, rng: np.random.Generator) -> UnitVector3:
    """
    Шум поворота: exp(θ·S(a))·b, ось a равномерна на S², θ ~ N(0, σ²).

    Args:
        b: Истинный пеленг
        spec: Параметры шума
        rng: Генератор потока шума пеленга

    Returns:
        Зашумлённый пеленг
    """
    if spec.bearing_angle_sigma == 0.0:
        return b
    axis = random_unit_vector(rng)
    theta = float(rng.normal(0.0, spec.bearing_angle_sigma))
    rotated = exp_so3(AlgebraVector(axis.v * theta)).apply(b.v)
    return UnitVector3.normalized(rotated)


def maybe_outlier(y: UnitVector3, spec: NoiseSpec,
                  rng: np.random.Generator) -> Tuple[UnitVector3, bool]:
    """
    С вероятностью outlier_prob заменяет измерение случайной точкой сферы.

    Returns:
        Пара (измерение, признак выброса)
    """
    if spec.outlier_prob == 0.0:
        return y, False
    if rng.random() < spec.outlier_prob:
        return random_unit_vector(rng), True
    return y, False
