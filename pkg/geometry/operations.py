"""
Операции геометрического ядра: кососимметричное отображение, проекция
на касательную плоскость, экспонента SO(3), угловые расстояния.
"""
import logging
import math

import numpy as np
from numpy.typing import NDArray
from scipy.linalg import polar

from core.exceptions import GeometryError
from geometry.types import (
    E1, E2, E3, AlgebraVector, Rotation3, UnitVector3, Vector3, VectorLike,
)

logger = logging.getLogger(__name__)

SMALL_ANGLE = 1e-8
ANTIPODAL_TOLERANCE = 1e-12
ORTHONORMALIZE_MAX_DISTANCE = 0.5

_BASIS = (E1, E2, E3)


def _arr(a: VectorLike) -> Vector3:
    if isinstance(a, UnitVector3):
        return a.v
    if isinstance(a, AlgebraVector):
        return a.w
    return np.asarray(a, dtype=np.float64)


def skew(a: VectorLike) -> NDArray[np.float64]:
    """
    Кососимметричная матрица S(a), такая что S(a)·b = a × b.

    Args:
        a: Вектор R³ (допускаются UnitVector3 и AlgebraVector)

    Returns:
        Матрица 3×3
    """
    x, y, z = _arr(a).tolist()
    return np.array([[0.0, -z, y],
                     [z, 0.0, -x],
                     [-y, x, 0.0]])


def vee(s: NDArray[np.float64]) -> Vector3:
    """Обратное к skew отображение: координаты кососимметричной матрицы."""
    return np.array([s[2, 1], s[0, 2], s[1, 0]], dtype=np.float64)


def cross(a: VectorLike, b: VectorLike) -> Vector3:
    """Векторное произведение a × b без накладных расходов np.cross."""
    ax, ay, az = _arr(a).tolist()
    bx, by, bz = _arr(b).tolist()
    return np.array([ay * bz - az * by,
                     az * bx - ax * bz,
                     ax * by - ay * bx])


def project_tangent(y: UnitVector3, x: VectorLike) -> Vector3:
    """
    Проекция на касательную плоскость T_yS²: (I − yyᵀ)x.

    Args:
        y: Точка на сфере
        x: Произвольный вектор R³

    Returns:
        Касательная к y компонента x
    """
    yv = y.v
    xv = _arr(x)
    return xv - yv * float(yv @ xv)


def exp_so3(w: AlgebraVector) -> Rotation3:
    """
    Экспонента so(3) → SO(3) по формуле Родрига.

    При θ = ‖w‖ < 1e-8 используются ряды второго порядка для
    sin θ/θ и (1 − cos θ)/θ².

    Args:
        w: Элемент алгебры Ли в координатах R³

    Returns:
        Поворот exp(S(w))
    """
    wv = _arr(w)
    theta = math.sqrt(float(wv @ wv))
    s = skew(wv)
    if theta < SMALL_ANGLE:
        theta2 = theta * theta
        a = 1.0 - theta2 / 6.0
        b = 0.5 - theta2 / 24.0
    else:
        a = math.sin(theta) / theta
        half = math.sin(0.5 * theta)
        # 1 − cos θ = 2 sin²(θ/2) без потери точности при малых θ
        b = 2.0 * half * half / (theta * theta)
    return Rotation3._wrap(np.eye(3) + a * s + b * (s @ s))


def rotation_about(axis: VectorLike, angle: float) -> Rotation3:
    """Поворот на угол angle вокруг единичной оси axis."""
    unit = UnitVector3.normalized(_arr(axis))
    return exp_so3(AlgebraVector(unit.v * float(angle)))


def _least_aligned_basis(a: UnitVector3) -> UnitVector3:
    idx = int(np.argmin(np.abs(a.v)))
    return _BASIS[idx]


def rotation_between(a: UnitVector3, b: UnitVector3) -> Rotation3:
    """
    Поворот, переводящий a в b по кратчайшей дуге.

    Ось пропорциональна a × b, угол равен arccos(aᵀb). Для
    антиподальных векторов возвращается поворот на π вокруг оси
    a × e_i, где e_i — базисный вектор, наименее сонаправленный с a.

    Args:
        a: Исходное направление
        b: Целевое направление

    Returns:
        Поворот R с R·a = b
    """
    c = float(a.v @ b.v)
    if c < -1.0 + ANTIPODAL_TOLERANCE:
        axis = cross(a, _least_aligned_basis(a))
        axis = axis / math.sqrt(float(axis @ axis))
        return exp_so3(AlgebraVector(axis * math.pi))
    axis = cross(a, b)
    sin_angle = math.sqrt(float(axis @ axis))
    if sin_angle == 0.0:
        return Rotation3.identity()
    angle = math.atan2(sin_angle, c)
    return exp_so3(AlgebraVector(axis * (angle / sin_angle)))


def geodesic_angle(a: UnitVector3, b: UnitVector3) -> float:
    """
    Угловое расстояние между точками сферы, радианы в [0, π].

    Нечисловой вход даёт NaN.
    """
    c = float(a.v @ b.v)
    if not math.isfinite(c):
        return math.nan
    return math.acos(min(1.0, max(-1.0, c)))


def orthonormalize(m: NDArray[np.float64]) -> Rotation3:
    """
    Ближайший к m поворот (полярное разложение).

    Args:
        m: Матрица 3×3, близкая к SO(3)

    Returns:
        Ортогональный множитель полярного разложения

    Raises:
        GeometryError: Если матрица далека от SO(3) или результат — отражение
    """
    m = np.asarray(m, dtype=np.float64)
    if m.shape != (3, 3) or not np.all(np.isfinite(m)):
        raise GeometryError(f"cannot orthonormalize matrix of shape {m.shape}")
    u, _ = polar(m)
    if float(np.linalg.det(u)) <= 0.0:
        raise GeometryError("projection has non-positive determinant")
    distance = float(np.linalg.norm(m - u))
    if distance > ORTHONORMALIZE_MAX_DISTANCE:
        logger.warning(f"orthonormalize: input is {distance:.3f} away from SO(3)")
    return Rotation3._wrap(u)


REPAIR_TOLERANCE = 1e-13


def repair(rotation: Rotation3) -> Rotation3:
    """Повторная ортонормализация, если накопленная ошибка превысила допуск."""
    if rotation.orthogonality_error() > REPAIR_TOLERANCE:
        return orthonormalize(rotation.m)
    return rotation
