"""
Наивный наблюдатель на сфере: копия системы плюс проекционная поправка.

dξ̂/dt = −S(ω + v̄ × ξ̂)ξ̂ + k·Π_ξ̂·y.
"""
import logging
from typing import Optional

from core.models import InputPair
from geometry.types import Rotation3, UnitVector3
from observers.base.observer import BaseObserver, check_step
from observers.manifold.observer import (
    ManifoldObserverState, euler_on_sphere, manifold_derivative,
)
from symmetry.actions import DEFAULT_ORIGIN, Origin, phi

logger = logging.getLogger(__name__)


def step_naive_observer(s: ManifoldObserverState, y: Optional[UnitVector3],
                        u: InputPair, h: float) -> ManifoldObserverState:
    """
    Шаг наивного наблюдателя: перенос вычисляется по оценке ξ̂, а не по y.
    """
    check_step(h)
    rate = manifold_derivative(s.xihat, s.xihat, y, u, s.k)
    return ManifoldObserverState(xihat=euler_on_sphere(s.xihat, rate, h), k=s.k)


class NaiveObserver(BaseObserver):
    """Наивный наблюдатель на сфере."""

    name = "naive"

    def __init__(self, gain: float, origin: Origin = DEFAULT_ORIGIN):
        super().__init__(gain, origin)
        self.state = ManifoldObserverState(xihat=origin.xi_ring, k=gain)

    def reset(self, Xhat0: Rotation3) -> None:
        self.state = ManifoldObserverState(xihat=phi(Xhat0, self.origin.xi_ring), k=self.gain)
        self.steps = 0

    def step(self, y: Optional[UnitVector3], u: InputPair, h: float) -> None:
        self.state = step_naive_observer(self.state, y, u, h)
        self.steps += 1

    @property
    def estimate(self) -> UnitVector3:
        return self.state.xihat
