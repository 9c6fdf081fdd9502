"""
Симметрия системы пеленга: действие группы φ, действие на входах ψ,
начало координат ξ̊ и эквивариантный подъём Λ.

Группа симметрии фиксирована: G = SO(3), многообразие состояний M = S².
"""
import math
from dataclasses import dataclass, field
from typing import Tuple

import numpy as np

from core.exceptions import ValidationError
from core.models import InputPair
from geometry.operations import cross, geodesic_angle
from geometry.types import E3, AlgebraVector, Rotation3, UnitVector3, Vector3


@dataclass(frozen=True)
class Origin:
    """
    Начало координат ξ̊ на сфере. По умолчанию e₃; остаётся
    постоянным в течение прогона.
    """
    xi_ring: UnitVector3 = field(default=E3)


DEFAULT_ORIGIN = Origin()


def phi(X: Rotation3, xi: UnitVector3) -> UnitVector3:
    """
    Правое транзитивное действие SO(3) на S²: φ(X, ξ) = Xᵀξ.

    Args:
        X: Элемент группы
        xi: Точка сферы

    Returns:
        Перенормированный образ Xᵀξ
    """
    v = X.m.T @ xi.v
    return UnitVector3._wrap(v / math.sqrt(float(v @ v)))


def psi(X: Rotation3, u: InputPair) -> InputPair:
    """
    Правое действие на входах: ψ(X, (ω, v̄)) = (Xᵀω, Xᵀv̄).
    """
    mt = X.m.T
    return InputPair(mt @ u.omega, mt @ u.vbar)


def lift(xi: UnitVector3, u: InputPair) -> AlgebraVector:
    """
    Эквивариантный подъём Λ(ξ, u) = S(ω + v̄ × ξ) в координатах R³.

    Радиальная компонента v̄ (вдоль ξ) не влияет на результат.

    Args:
        xi: Точка сферы
        u: Вход (ω, v̄)

    Returns:
        Координаты ω + v̄ × ξ
    """
    return AlgebraVector(u.omega + cross(u.vbar, xi))


def classical_lift(xi: UnitVector3, omega: Vector3) -> AlgebraVector:
    """Подъём системы только с угловой скоростью: Λ(ξ, ω) = S(ω)."""
    return AlgebraVector(np.asarray(omega, dtype=np.float64))


def induced_angular_velocity(xi: UnitVector3, vbar: Vector3) -> Vector3:
    """
    Угловая скорость Ω⊥ = v̄ × ξ, порождаемая линейной скоростью.

    Для касательного v̄ выполняется −Ω⊥ × ξ = v̄.
    """
    return cross(vbar, xi)


def decompose_angular_velocity(xi: UnitVector3, omega: Vector3) -> Tuple[Vector3, Vector3]:
    """
    Разложение угловой скорости на компоненты вдоль пеленга и ортогональную.

    Компонента Ω∥ вращает систему вокруг ξ и не меняет пеленг.

    Returns:
        Пара (Ω∥, Ω⊥)
    """
    omega = np.asarray(omega, dtype=np.float64)
    parallel = xi.v * float(xi.v @ omega)
    return parallel, omega - parallel


def is_in_stabilizer(E: Rotation3, tol: float, origin: Origin = DEFAULT_ORIGIN) -> bool:
    """
    Проверяет, оставляет ли E начало координат ξ̊ на месте.

    Args:
        E: Элемент группы
        tol: Допуск по углу, радианы (> 0)
        origin: Начало координат

    Returns:
        True, если угол между φ(E, ξ̊) и ξ̊ не превышает tol
    """
    if not tol > 0:
        raise ValidationError(f"tol must be positive, got {tol}")
    return geodesic_angle(phi(E, origin.xi_ring), origin.xi_ring) <= tol
