"""
Источники входных сигналов системы пеленга.

Этот модуль содержит абстрактный класс InputSource, который реализуют
синусоидальный источник и кинематическая сцена (dynamics.scene).
"""
import logging
import math
from abc import ABC, abstractmethod
from typing import Tuple

import numpy as np

from core.models import InputPair, SinusoidChannel, SinusoidSpec
from geometry.operations import project_tangent
from geometry.types import UnitVector3, Vector3

logger = logging.getLogger(__name__)

SPEC_AMPLITUDE_MAX = 10.0
SPEC_FREQUENCY_MAX = 10.0


class InputSource(ABC):
    """
    Абстрактный источник входа u(t) = (ω, v̄).
    """

    @abstractmethod
    def sample_raw(self, t: float, xi: UnitVector3) -> Tuple[Vector3, Vector3]:
        """
        Вход до проекции на касательную плоскость.

        Args:
            t: Время, с
            xi: Текущий пеленг

        Returns:
            Пара (ω, v̄′)
        """
        pass

    def sample(self, t: float, xi: UnitVector3) -> InputPair:
        """
        Вход системы с v̄ = Π_ξ v̄′.

        Args:
            t: Время, с
            xi: Текущий пеленг

        Returns:
            Вход u(t)
        """
        omega, vbar_prime = self.sample_raw(t, xi)
        return InputPair(omega, project_tangent(xi, vbar_prime))


class SinusoidInput(InputSource):
    """Синусоидальные входы с параметрами SinusoidSpec."""

    def __init__(self, spec: SinusoidSpec):
        self.spec = spec

    def sample_raw(self, t: float, xi: UnitVector3) -> Tuple[Vector3, Vector3]:
        return self.spec.omega.value(t), self.spec.vbar.value(t)


def sample_input(t: float, spec: SinusoidSpec, xi: UnitVector3) -> InputPair:
    """
    Значение синусоидального входа в момент t.

    ω_i = A_i sin(2πν_i t + φ_i), v̄′ аналогично; возвращается
    (ω, Π_ξ v̄′).
    """
    return SinusoidInput(spec).sample(t, xi)


def _random_channel(rng: np.random.Generator, amplitude_max: float,
                    frequency_max: float) -> SinusoidChannel:
    amplitude = rng.uniform(0.0, amplitude_max, size=3)
    frequency = rng.uniform(0.0, frequency_max, size=3)
    phase = rng.uniform(-math.pi, math.pi, size=3)
    return SinusoidChannel(tuple(amplitude), tuple(frequency), tuple(phase))


def random_spec(rng: np.random.Generator,
                amplitude_max: float = SPEC_AMPLITUDE_MAX,
                frequency_max: float = SPEC_FREQUENCY_MAX) -> SinusoidSpec:
    """
    Случайные параметры синусоид: A, ν ~ U([0, 10]), φ ~ U(−π, π).

    Args:
        rng: Генератор случайных чисел
        amplitude_max: Верхняя граница амплитуд
        frequency_max: Верхняя граница частот, Гц

    Returns:
        Спецификация входов (сначала канал ω, затем v̄′)
    """
    omega = _random_channel(rng, amplitude_max, frequency_max)
    vbar = _random_channel(rng, amplitude_max, frequency_max)
    return SinusoidSpec(omega=omega, vbar=vbar)
