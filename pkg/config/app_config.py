"""
Модуль конфигурации приложения.

Этот модуль содержит настройки процесса, которые могут быть переопределены
с помощью переменных окружения или файла .env. Параметры, влияющие на
результаты моделирования, задаются только через RunConfig.
"""
import math
import os
from typing import Any, Dict, Optional

from dotenv import load_dotenv

# Загрузка переменных окружения из файла .env, если он существует
load_dotenv()

# Настройки приложения
APP_SETTINGS: Dict[str, Any] = {
    "application": os.getenv("APP_NAME", "bearing-observer"),
    "version": "1.0.0",
    "batch_workers": int(os.getenv("BATCH_WORKERS", "1")),
}

# Значения по умолчанию для прогона (условия численного эксперимента)
SIMULATION_DEFAULTS: Dict[str, Any] = {
    "duration": 20.0,
    "dt": 1e-3,
    "gain": 1.0,
    "observer": "both",
    "observer_init": "identity",
    "seed": 0,
    "runs": 1,
    "decimation": 1,
    "input_sigma": 0.1,
    "bearing_angle_sigma": math.radians(5.0),
    "outlier_prob": 0.01,
    "max_steps": 10_000_000,
    "steady_window": (10.0, 20.0),
    "convergence_threshold": math.radians(0.5),
}


def get_logging_config(level: Optional[str] = None) -> Dict[str, Any]:
    """
    Получить словарь для logging.config.dictConfig.

    Консольный обработчик пишет в stderr, чтобы не смешивать журнал с CSV
    в stdout. Файловый обработчик добавляется, только если задан LOG_FILE.

    Args:
        level: Уровень журнала; по умолчанию LOG_LEVEL или INFO

    Returns:
        Конфигурация журналирования
    """
    console_level = (level or os.getenv("LOG_LEVEL", "INFO")).upper()
    handlers: Dict[str, Any] = {
        "console": {
            "level": console_level,
            "class": "logging.StreamHandler",
            "formatter": "standard",
            "stream": "ext://sys.stderr",
        },
    }
    log_file = os.getenv("LOG_FILE")
    if log_file:
        handlers["file"] = {
            "level": os.getenv("FILE_LOG_LEVEL", "INFO").upper(),
            "class": "logging.FileHandler",
            "filename": log_file,
            "formatter": "standard",
        }
    return {
        "version": 1,
        "disable_existing_loggers": False,
        "formatters": {
            "standard": {
                "format": "%(asctime)s [%(levelname)s] %(name)s: %(message)s"
            },
        },
        "handlers": handlers,
        "loggers": {
            "": {
                "handlers": list(handlers),
                "level": "DEBUG" if log_file else console_level,
                "propagate": True,
            },
        },
    }

