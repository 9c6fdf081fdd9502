"""
Модуль с утилитарными функциями.

Содержит вспомогательные функции, используемые в разных частях приложения:
форматирование чисел и параллельное выполнение независимых задач.
"""
import concurrent.futures
import logging
import math
from typing import Callable, Iterable, List, Optional, TypeVar

logger = logging.getLogger(__name__)

T = TypeVar('T')
R = TypeVar('R')


def format_float(value: Optional[float]) -> str:
    """
    Форматирует число с 17 значащими цифрами (точное восстановление float).

    Args:
        value: Значение или None

    Returns:
        Десятичная строка; пустая строка для None
    """
    if value is None:
        return ""
    return f"{value:.17g}"


def parse_float(text: str) -> Optional[float]:
    """Обратное к format_float преобразование."""
    text = text.strip()
    if not text:
        return None
    return float(text)


def format_degrees(radians: Optional[float], decimal_places: int = 3) -> str:
    """
    Форматирует угол в градусах для журнала.

    Args:
        radians: Угол в радианах или None
        decimal_places: Количество десятичных знаков

    Returns:
        Строка вида "1.234°" или "n/a"
    """
    if radians is None or not math.isfinite(radians):
        return "n/a"
    return f"{math.degrees(radians):.{decimal_places}f}°"


def parallel_map(func: Callable[[T], R], items: Iterable[T], workers: int = 1) -> List[R]:
    """
    Применяет функцию к элементам, при workers > 1 — в пуле процессов.

    Порядок результатов совпадает с порядком элементов.

    Args:
        func: Функция уровня модуля (должна сериализоваться pickle)
        items: Аргументы
        workers: Число процессов

    Returns:
        Список результатов
    """
    items = list(items)
    if workers <= 1 or len(items) <= 1:
        return [func(item) for item in items]
    workers = min(workers, len(items))
    logger.info(f"Running {len(items)} tasks on {workers} worker processes")
    with concurrent.futures.ProcessPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(func, items))
