"""
Эквивариантный наблюдатель, записанный на сфере.

dξ̂/dt = −S(ω + v̄ × y)ξ̂ + k·Π_ξ̂·y. Измерение y входит прямо в член
переноса — этим форма отличается от наивного наблюдателя.
"""
import logging
from dataclasses import dataclass
from typing import Optional

from core.exceptions import ValidationError
from core.models import InputPair
from geometry.operations import cross, project_tangent
from geometry.types import Rotation3, UnitVector3, Vector3
from observers.base.observer import BaseObserver, check_gain, check_step
from symmetry.actions import DEFAULT_ORIGIN, Origin, phi

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ManifoldObserverState:
    """Состояние наблюдателя на сфере."""
    xihat: UnitVector3
    k: float = 1.0

    def __post_init__(self) -> None:
        check_gain(self.k)
        if not isinstance(self.xihat, UnitVector3):
            raise ValidationError("xihat must be a UnitVector3")


def manifold_derivative(xihat: UnitVector3, transport: UnitVector3,
                        y: Optional[UnitVector3], u: InputPair, k: float) -> Vector3:
    """
    Правая часть наблюдателя на сфере.

    Args:
        xihat: Текущая оценка
        transport: Точка, по которой вычисляется перенос ω + v̄ × (·)
        y: Измерение; при None поправка отсутствует
        u: Измеренный вход
        k: Коэффициент усиления

    Returns:
        Производная оценки
    """
    angular = u.omega + cross(u.vbar, transport)
    rate = cross(xihat, angular)
    if y is not None:
        rate = rate + k * project_tangent(xihat, y.v)
    return rate


def euler_on_sphere(xihat: UnitVector3, rate: Vector3, h: float) -> UnitVector3:
    """Шаг Эйлера с перенормировкой на сферу."""
    return UnitVector3.normalized(xihat.v + h * rate)


def step_manifold_observer(s: ManifoldObserverState, y: Optional[UnitVector3],
                           u: InputPair, h: float) -> ManifoldObserverState:
    """
    Шаг эквивариантного наблюдателя на сфере.

    Args:
        s: Текущее состояние
        y: Измерение; при None перенос вычисляется по ξ̂ без поправки
        u: Измеренный вход
        h: Шаг, с

    Returns:
        Новое состояние
    """
    check_step(h)
    transport = s.xihat if y is None else y
    rate = manifold_derivative(s.xihat, transport, y, u, s.k)
    return ManifoldObserverState(xihat=euler_on_sphere(s.xihat, rate, h), k=s.k)


class ManifoldObserver(BaseObserver):
    """Эквивариантный наблюдатель в форме на сфере."""

    name = "manifold"

    def __init__(self, gain: float, origin: Origin = DEFAULT_ORIGIN):
        super().__init__(gain, origin)
        self.state = ManifoldObserverState(xihat=origin.xi_ring, k=gain)

    def reset(self, Xhat0: Rotation3) -> None:
        self.state = ManifoldObserverState(xihat=phi(Xhat0, self.origin.xi_ring), k=self.gain)
        self.steps = 0

    def step(self, y: Optional[UnitVector3], u: InputPair, h: float) -> None:
        self.state = step_manifold_observer(self.state, y, u, h)
        self.steps += 1

    @property
    def estimate(self) -> UnitVector3:
        return self.state.xihat
