"""
Модуль наблюдателей пеленга.

Содержит эквивариантный наблюдатель на группе, его форму на сфере и
наивный наблюдатель для сравнения.
"""
import logging
from typing import Dict, List

from core.exceptions import ConfigError
from observers.base.observer import BaseObserver
from observers.equivariant.observer import EquivariantObserver
from observers.manifold.observer import ManifoldObserver
from observers.naive.observer import NaiveObserver
from symmetry.actions import DEFAULT_ORIGIN, Origin

logger = logging.getLogger(__name__)

OBSERVER_SELECTIONS: Dict[str, List[str]] = {
    "equivariant": ["equivariant"],
    "naive": ["naive"],
    "both": ["equivariant", "naive"],
}

_REGISTRY = {
    "equivariant": EquivariantObserver,
    "manifold": ManifoldObserver,
    "naive": NaiveObserver,
}


def create_observers(selection: str, gain: float,
                     origin: Origin = DEFAULT_ORIGIN) -> Dict[str, BaseObserver]:
    """
    Создание наблюдателей по выбору из конфигурации.

    Args:
        selection: "equivariant", "naive" или "both"
        gain: Коэффициент усиления k
        origin: Начало координат

    Returns:
        Словарь наблюдателей по именам

    Raises:
        ConfigError: Для неизвестного выбора
    """
    names = OBSERVER_SELECTIONS.get(selection)
    if names is None:
        raise ConfigError(f"unknown observer selection '{selection}'", key="observer")
    observers = {name: _REGISTRY[name](gain, origin) for name in names}
    logger.debug(f"Created {len(observers)} observers: {', '.join(observers)}")
    return observers
