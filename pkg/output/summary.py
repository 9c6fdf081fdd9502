"""
Сводка метрик прогона или серии в формате JSON.
"""
import json
import logging
import sys
from dataclasses import asdict
from typing import Any, Dict, Optional, Union

from core.exceptions import OutputError
from core.models import BatchMetrics, RunMetrics

logger = logging.getLogger(__name__)


def metrics_to_dict(metrics: Union[RunMetrics, BatchMetrics]) -> Dict[str, Any]:
    """Словарь метрик; углы в радианах, времена в секундах."""
    data = asdict(metrics)
    data["kind"] = "batch" if isinstance(metrics, BatchMetrics) else "run"
    return data


def format_metrics(metrics: Union[RunMetrics, BatchMetrics]) -> str:
    """JSON-текст метрик с отсортированными ключами."""
    return json.dumps(metrics_to_dict(metrics), indent=2, sort_keys=True) + "\n"


def write_metrics(metrics: Union[RunMetrics, BatchMetrics], path: Optional[str]) -> None:
    """
    Записывает метрики в файл; при path = None или "-" — в stdout.

    Raises:
        OutputError: При ошибке ввода-вывода
    """
    text = format_metrics(metrics)
    if path is None or path == "-":
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as f:
            f.write(text)
    except OSError as e:
        raise OutputError(f"cannot write metrics ({e.strerror})", path)
    logger.info(f"Wrote metrics to {path}")
