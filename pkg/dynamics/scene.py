"""
Кинематическая сцена: аппарат с камерой и цель.

Пеленг цели в связанной системе b = Rᵀp/‖p‖, p = p_T − p_B, а
масштабированная скорость v̄ = Π_b Rᵀṗ/‖p‖.
"""
import logging
import math
from typing import Tuple

import numpy as np

from core.exceptions import GeometryError
from core.models import SceneSpec
from dynamics.inputs import InputSource
from geometry.operations import exp_so3, project_tangent
from geometry.types import AlgebraVector, Rotation3, UnitVector3, Vector3

logger = logging.getLogger(__name__)


def _relative(p_B: Vector3, p_T: Vector3) -> Tuple[Vector3, float]:
    p = np.asarray(p_T, dtype=np.float64) - np.asarray(p_B, dtype=np.float64)
    distance = math.sqrt(float(p @ p))
    if distance == 0.0 or not math.isfinite(distance):
        raise GeometryError("vehicle and target positions coincide")
    return p, distance


def scene_to_bearing(p_B: Vector3, p_T: Vector3, R: Rotation3) -> UnitVector3:
    """
    Пеленг цели в связанной системе аппарата.

    Args:
        p_B: Положение аппарата
        p_T: Положение цели
        R: Ориентация аппарата

    Returns:
        b = Rᵀ(p_T − p_B)/‖p_T − p_B‖

    Raises:
        GeometryError: При совпадающих положениях
    """
    p, distance = _relative(p_B, p_T)
    return UnitVector3.normalized(R.m.T @ (p / distance))


def scene_to_vbar(p_B: Vector3, p_T: Vector3, pdot_B: Vector3, pdot_T: Vector3,
                  R: Rotation3) -> Vector3:
    """
    Масштабированная относительная скорость, касательная к пеленгу.

    Args:
        p_B, p_T: Положения аппарата и цели
        pdot_B, pdot_T: Их скорости
        R: Ориентация аппарата

    Returns:
        v̄ = (1/‖p‖)·Π_b·Rᵀṗ

    Raises:
        GeometryError: При совпадающих положениях
    """
    p, distance = _relative(p_B, p_T)
    b = scene_to_bearing(p_B, p_T, R)
    pdot = np.asarray(pdot_T, dtype=np.float64) - np.asarray(pdot_B, dtype=np.float64)
    return project_tangent(b, R.m.T @ pdot) / distance


class SceneInput(InputSource):
    """
    Источник входа, порождаемый кинематической сценой.

    ω равна постоянной угловой скорости аппарата в связанной системе,
    v̄ вычисляется по геометрии сцены и уже касательна к пеленгу сцены.
    """

    def __init__(self, spec: SceneSpec):
        self.spec = spec
        self._attitude0 = exp_so3(AlgebraVector(spec.attitude0))
        self._body_rate = np.array(spec.body_rate, dtype=np.float64)

    def attitude(self, t: float) -> Rotation3:
        """Ориентация R(t) = exp(S(r0))·exp(S(ω_b t))."""
        return self._attitude0 @ exp_so3(AlgebraVector(self._body_rate * t))

    def bearing(self, t: float) -> UnitVector3:
        """Геометрический пеленг цели в момент t."""
        return scene_to_bearing(self.spec.vehicle.position(t),
                                self.spec.target.position(t), self.attitude(t))

    def vbar(self, t: float) -> Vector3:
        return scene_to_vbar(self.spec.vehicle.position(t), self.spec.target.position(t),
                             self.spec.vehicle.velocity(t), self.spec.target.velocity(t),
                             self.attitude(t))

    def sample_raw(self, t: float, xi: UnitVector3) -> Tuple[Vector3, Vector3]:
        return self._body_rate.copy(), self.vbar(t)

    def check_clearance(self, duration: float, dt: float) -> float:
        """
        Проверяет, что цель не приближается к аппарату ближе min_distance.

        Args:
            duration: Длительность, с
            dt: Шаг проверки, с

        Returns:
            Минимальное расстояние на сетке

        Raises:
            GeometryError: Если расстояние меньше min_distance
        """
        times = np.arange(0.0, duration + 0.5 * dt, dt)
        closest = math.inf
        for t in times:
            p = self.spec.target.position(t) - self.spec.vehicle.position(t)
            closest = min(closest, math.sqrt(float(p @ p)))
        if closest < self.spec.min_distance:
            raise GeometryError(
                f"target comes within {closest:.3g} of the vehicle "
                f"(min_distance {self.spec.min_distance})")
        logger.debug(f"Scene clearance over {len(times)} samples: {closest:.4g}")
        return closest
