"""
Ошибка наблюдателя на группе и функция Ляпунова.
"""
import math
from dataclasses import dataclass

from geometry.operations import cross, geodesic_angle
from geometry.types import Rotation3, UnitVector3
from observers.base.observer import check_gain
from symmetry.actions import DEFAULT_ORIGIN, Origin, phi


@dataclass(frozen=True)
class ErrorDiagnostics:
    """
    Диагностика ошибки.

    E — групповая ошибка X·X̂ᵀ, e = φ(E, ξ̊), V = 1 − ξ̊ᵀEξ̊ ∈ [0, 2],
    Vdot_analytic = −k‖Eᵀξ̊ × ξ̊‖², angle_err — угол между ξ̂ и ξ.
    """
    E: Rotation3
    e: UnitVector3
    V: float
    Vdot_analytic: float
    angle_err: float


def lyapunov(E: Rotation3, origin: Origin = DEFAULT_ORIGIN) -> float:
    """V(E) = 1 − ξ̊ᵀEξ̊, обрезанная к [0, 2]; NaN сохраняется."""
    ring = origin.xi_ring.v
    value = 1.0 - float(ring @ E.m @ ring)
    if not math.isfinite(value):
        return math.nan
    return min(2.0, max(0.0, value))


def lyapunov_rate(E: Rotation3, k: float, origin: Origin = DEFAULT_ORIGIN) -> float:
    """Аналитическая производная V̇ = −k‖Eᵀξ̊ × ξ̊‖²."""
    ring = origin.xi_ring.v
    c = cross(E.m.T @ ring, ring)
    return -k * float(c @ c)


def diagnostics(X: Rotation3, Xhat: Rotation3, xi: UnitVector3, k: float,
                origin: Origin = DEFAULT_ORIGIN) -> ErrorDiagnostics:
    """
    Диагностика ошибки наблюдателя на группе.

    Args:
        X: Состояние поднятой системы
        Xhat: Состояние наблюдателя
        xi: Истинный пеленг
        k: Коэффициент усиления
        origin: Начало координат

    Returns:
        ErrorDiagnostics
    """
    check_gain(k)
    E = X @ Xhat.T
    ring = origin.xi_ring
    return ErrorDiagnostics(
        E=E,
        e=phi(E, ring),
        V=lyapunov(E, origin),
        Vdot_analytic=lyapunov_rate(E, k, origin),
        angle_err=geodesic_angle(phi(Xhat, ring), xi),
    )
