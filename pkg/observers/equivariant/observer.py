"""
Эквивариантный наблюдатель на группе SO(3).

Непрерывная форма: dX̂/dt = X̂·Λ(φ(X̂, ξ̊), u) + Δ·X̂ с поправкой
Δ = S(X̂v̄ × X̂y − X̂v̄ × ξ̊ + k·X̂y × ξ̊). Дискретизация — расщепление:
X̂⁺ = exp(hΔ)·X̂·exp(hΛ̂), что точно сохраняет SO(3).
"""
import logging
from dataclasses import dataclass
from typing import Optional

from core.models import InputPair
from geometry.operations import cross, exp_so3, repair
from geometry.types import AlgebraVector, Rotation3, UnitVector3, Vector3
from observers.base.observer import BaseObserver, check_gain, check_step
from symmetry.actions import DEFAULT_ORIGIN, Origin, lift, phi

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GroupObserverState:
    """
    Состояние наблюдателя на группе.
    """
    Xhat: Rotation3
    k: float = 1.0

    def __post_init__(self) -> None:
        check_gain(self.k)


def correction(Xhat: Rotation3, y: UnitVector3, vbar: Vector3, k: float,
               origin: Origin = DEFAULT_ORIGIN) -> AlgebraVector:
    """
    Поправка Δ в координатах R³.

    Args:
        Xhat: Состояние наблюдателя
        y: Измерение пеленга
        vbar: Измеренная скорость v̄
        k: Коэффициент усиления
        origin: Начало координат ξ̊

    Returns:
        X̂v̄ × X̂y − X̂v̄ × ξ̊ + k·(X̂y × ξ̊)
    """
    check_gain(k)
    ring = origin.xi_ring.v
    a = Xhat.m @ vbar
    b = Xhat.m @ y.v
    return AlgebraVector(cross(a, b) - cross(a, ring) + k * cross(b, ring))


def estimate(Xhat: Rotation3, origin: Origin = DEFAULT_ORIGIN) -> UnitVector3:
    """Оценка пеленга ξ̂ = φ(X̂, ξ̊) = X̂ᵀξ̊."""
    return phi(Xhat, origin.xi_ring)


def step_group_observer(s: GroupObserverState, y: Optional[UnitVector3], u: InputPair,
                        h: float, origin: Origin = DEFAULT_ORIGIN) -> GroupObserverState:
    """
    Шаг эквивариантного наблюдателя на группе.

    Args:
        s: Текущее состояние
        y: Измерение пеленга; при None выполняется только прогноз (Δ = 0)
        u: Измеренный вход
        h: Шаг, с
        origin: Начало координат

    Returns:
        Новое состояние
    """
    check_step(h)
    Xhat = s.Xhat
    prediction = exp_so3(lift(estimate(Xhat, origin), u) * h)
    if y is None:
        Xhat_next = Xhat @ prediction
    else:
        delta = correction(Xhat, y, u.vbar, s.k, origin)
        Xhat_next = exp_so3(delta * h) @ Xhat @ prediction
    return GroupObserverState(Xhat=repair(Xhat_next), k=s.k)


class EquivariantObserver(BaseObserver):
    """Эквивариантный наблюдатель на группе."""

    name = "equivariant"

    def __init__(self, gain: float, origin: Origin = DEFAULT_ORIGIN):
        super().__init__(gain, origin)
        self.state = GroupObserverState(Xhat=Rotation3.identity(), k=gain)

    def reset(self, Xhat0: Rotation3) -> None:
        self.state = GroupObserverState(Xhat=Xhat0, k=self.gain)
        self.steps = 0

    def step(self, y: Optional[UnitVector3], u: InputPair, h: float) -> None:
        self.state = step_group_observer(self.state, y, u, h, self.origin)
        self.steps += 1

    @property
    def Xhat(self) -> Rotation3:
        return self.state.Xhat

    @property
    def estimate(self) -> UnitVector3:
        return estimate(self.state.Xhat, self.origin)
