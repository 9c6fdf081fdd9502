"""
Базовый класс для наблюдателей пеленга.

Этот модуль содержит абстрактный класс BaseObserver, который должен быть
реализован всеми конкретными наблюдателями. Сами шаги наблюдателей —
чистые функции над неизменяемыми состояниями; классы лишь хранят
текущее состояние для цикла моделирования.
"""
import logging
from abc import ABC, abstractmethod
from typing import Optional

from core.exceptions import ValidationError
from core.models import InputPair
from geometry.types import Rotation3, UnitVector3
from symmetry.actions import DEFAULT_ORIGIN, Origin

logger = logging.getLogger(__name__)


def check_step(h: float) -> None:
    """Проверяет шаг интегрирования наблюдателя."""
    if not h > 0:
        raise ValidationError(f"step must be positive, got {h}")


def check_gain(k: float) -> None:
    """Проверяет коэффициент усиления наблюдателя."""
    if not k > 0:
        raise ValidationError(f"gain must be positive, got {k}")


class BaseObserver(ABC):
    """
    Абстрактный базовый класс для всех наблюдателей.

    Определяет общий интерфейс: инициализацию из группового состояния,
    шаг по измерению и входу и текущую оценку на сфере.
    """

    name: str = "base"

    def __init__(self, gain: float, origin: Origin = DEFAULT_ORIGIN):
        """
        Инициализация наблюдателя.

        Args:
            gain: Коэффициент усиления k > 0, 1/с
            origin: Начало координат ξ̊
        """
        check_gain(gain)
        self.gain = gain
        self.origin = origin
        self.steps = 0

    @abstractmethod
    def reset(self, Xhat0: Rotation3) -> None:
        """
        Устанавливает начальное состояние по групповому X̂(0).

        Наблюдатели на многообразии стартуют с ξ̂(0) = φ(X̂(0), ξ̊).

        Args:
            Xhat0: Начальное групповое состояние
        """
        pass

    @abstractmethod
    def step(self, y: Optional[UnitVector3], u: InputPair, h: float) -> None:
        """
        Продвигает наблюдатель на один шаг.

        Args:
            y: Измерение пеленга или None, если измерения на шаге нет
            u: Измеренный вход
            h: Шаг интегрирования, с
        """
        pass

    @property
    @abstractmethod
    def estimate(self) -> UnitVector3:
        """Текущая оценка пеленга ξ̂."""
        pass
