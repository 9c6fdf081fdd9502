"""
Система пеленга на S² и поднятая система на SO(3).

Эталонная траектория интегрируется на группе: X⁺ = X·exp(h·Λ(φ(X, ξ̊), u))
со входом, взятым в середине шага. Прямое интегрирование на сфере
(шаг Эйлера с перенормировкой) используется для перекрёстной проверки.
"""
import logging
import math

from core.exceptions import ValidationError
from core.models import InputPair, TruthState
from dynamics.inputs import InputSource
from geometry.operations import cross, exp_so3, repair, rotation_between
from geometry.types import UnitVector3, Vector3
from symmetry.actions import DEFAULT_ORIGIN, Origin, lift, phi

logger = logging.getLogger(__name__)


def bearing_derivative(xi: UnitVector3, u: InputPair) -> Vector3:
    """
    Производная пеленга ξ̇ = −S(ω)ξ + v̄.

    Args:
        xi: Пеленг
        u: Вход (ω, v̄)

    Returns:
        Вектор ξ̇
    """
    return cross(xi, u.omega) + u.vbar


def bearing_derivative_lifted(xi: UnitVector3, u: InputPair) -> Vector3:
    """Та же производная в форме ξ̇ = −S(ω + v̄ × ξ)ξ."""
    return cross(xi, lift(xi, u).w)


def step_bearing_direct(xi: UnitVector3, u: InputPair, h: float) -> UnitVector3:
    """Шаг Эйлера на сфере с последующей перенормировкой."""
    if not h > 0:
        raise ValidationError(f"step must be positive, got {h}")
    return UnitVector3.normalized(xi.v + h * bearing_derivative(xi, u))


def initial_truth(xi0: UnitVector3, source: InputSource,
                  origin: Origin = DEFAULT_ORIGIN) -> TruthState:
    """
    Начальное состояние эталонной системы.

    X(0) = rotation_between(ξ̊, ξ(0))ᵀ, так что φ(X(0), ξ̊) = ξ(0).
    """
    X0 = rotation_between(origin.xi_ring, xi0).T
    return TruthState(t=0.0, xi=phi(X0, origin.xi_ring), X=X0,
                      u_clean=source.sample(0.0, xi0))


def advance_truth(state: TruthState, u: InputPair, h: float,
                  origin: Origin = DEFAULT_ORIGIN) -> TruthState:
    """
    Шаг поднятой системы с заданным (замороженным на шаге) входом.

    Args:
        state: Текущее состояние
        u: Вход на шаге
        h: Шаг интегрирования, с
        origin: Начало координат

    Returns:
        Новое состояние
    """
    X = state.X
    X_next = repair(X @ exp_so3(lift(phi(X, origin.xi_ring), u) * h))
    return TruthState(t=state.t + h, xi=phi(X_next, origin.xi_ring),
                      X=X_next, u_clean=u)


def step_truth(state: TruthState, source: InputSource, h: float,
               origin: Origin = DEFAULT_ORIGIN) -> TruthState:
    """
    Шаг эталонной системы на группе со входом в середине шага t + h/2.

    Args:
        state: Текущее состояние
        source: Источник входа
        h: Шаг интегрирования, с
        origin: Начало координат

    Returns:
        Новое состояние
    """
    if not h > 0 or not math.isfinite(h):
        raise ValidationError(f"step must be positive, got {h}")
    u = source.sample(state.t + 0.5 * h, state.xi)
    return advance_truth(state, u, h, origin)
