"""
Модуль с пользовательскими исключениями приложения.

Этот модуль содержит все пользовательские исключения, используемые в приложении.
"""
from typing import Optional, Any


class BearingObserverError(Exception):
    """Базовый класс для всех исключений приложения."""

    def __init__(self, message: str, *args: Any):
        self.message = message
        super().__init__(message, *args)


class ConfigError(BearingObserverError):
    """Ошибка конфигурации запуска."""

    def __init__(self, message: str, key: Optional[str] = None, *args: Any):
        self.key = key
        if key:
            message = f"{key}: {message}"
        super().__init__(message, *args)


class ValidationError(BearingObserverError):
    """Нарушение инварианта типа данных."""
    pass


class GeometryError(BearingObserverError):
    """Вырожденная геометрия (совпадающие точки, отражение вместо поворота)."""
    pass


class SimulationError(BearingObserverError):
    """Ошибка во время моделирования."""

    def __init__(self, message: str, step: Optional[int] = None, *args: Any):
        self.step = step
        if step is not None:
            message = f"{message} (step {step})"
        super().__init__(message, *args)


class OutputError(BearingObserverError):
    """Ошибка записи результатов."""

    def __init__(self, message: str, path: str, *args: Any):
        self.path = path
        super().__init__(f"{message}: {path}", *args)
