"""
Серия прогонов Монте-Карло с зёрнами seed, seed + 1, ..., seed + runs − 1.
"""
import logging
from dataclasses import replace
from typing import Optional

from config.app_config import APP_SETTINGS
from config.run_config import RunConfig
from core.models import BatchMetrics, RunMetrics
from core.utils import format_degrees, parallel_map
from simulation.metrics import aggregate, compute_run_metrics
from simulation.runner import run_single

logger = logging.getLogger(__name__)


def run_metrics_for(cfg: RunConfig) -> RunMetrics:
    """Прогон с зерном cfg.seed и его метрики."""
    return compute_run_metrics(run_single(cfg), cfg.seed)


def run_batch(cfg: RunConfig, workers: Optional[int] = None) -> BatchMetrics:
    """
    Выполняет серию независимых прогонов и агрегирует метрики.

    Args:
        cfg: Конфигурация (cfg.runs прогонов)
        workers: Число процессов; по умолчанию cfg.workers или BATCH_WORKERS

    Returns:
        BatchMetrics, не зависящие от порядка и параллелизма
    """
    if workers is None:
        workers = max(cfg.workers, APP_SETTINGS["batch_workers"])
    configs = [replace(cfg, seed=cfg.seed + i, runs=1) for i in range(cfg.runs)]
    logger.info(f"Starting batch of {cfg.runs} runs from seed {cfg.seed}")
    metrics = aggregate(parallel_map(run_metrics_for, configs, workers))
    logger.info(f"Batch finished: median steady error eqv={format_degrees(metrics.median_steady_eqv)}, "
                f"naive={format_degrees(metrics.median_steady_naive)}, "
                f"eqv better in {metrics.eqv_better_count}/{cfg.runs} runs")
    return metrics
