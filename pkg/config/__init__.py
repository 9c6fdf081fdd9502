"""
Конфигурация приложения.

Настройки процесса (журналирование, число рабочих процессов) и значения
по умолчанию для прогонов моделирования.
"""
from config.app_config import APP_SETTINGS, SIMULATION_DEFAULTS, get_logging_config
