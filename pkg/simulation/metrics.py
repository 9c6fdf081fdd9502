"""
Метрики прогонов: финальная ошибка, медиана установившейся ошибки,
время сходимости и число выбросов, а также их агрегаты по серии.
"""
import logging
from typing import List, Optional, Sequence, Tuple

import numpy as np

from config.app_config import SIMULATION_DEFAULTS
from core.models import BatchMetrics, RunMetrics, SampleRecord

logger = logging.getLogger(__name__)


def steady_window(duration: float) -> Tuple[float, float]:
    """
    Окно установившегося режима: [10, 20] с, для коротких прогонов —
    вторая половина прогона.
    """
    start, end = SIMULATION_DEFAULTS["steady_window"]
    if duration >= end:
        return start, end
    return 0.5 * duration, duration


def _series(records: Sequence[SampleRecord], attr: str) -> Optional[Tuple[np.ndarray, np.ndarray]]:
    values = [getattr(r, attr) for r in records]
    if not values or values[0] is None:
        return None
    times = np.array([r.t for r in records])
    return times, np.array(values, dtype=np.float64)


def steady_median(times: np.ndarray, errors: np.ndarray,
                  window: Tuple[float, float]) -> Optional[float]:
    """Медиана ошибки в окне; None для пустого окна."""
    mask = (times >= window[0] - 1e-9) & (times <= window[1] + 1e-9)
    if not np.any(mask):
        return None
    return float(np.median(errors[mask]))


def convergence_time(times: np.ndarray, errors: np.ndarray,
                     threshold: float = SIMULATION_DEFAULTS["convergence_threshold"]) -> Optional[float]:
    """
    Первый момент, начиная с которого ошибка остаётся ниже порога.

    Args:
        times: Моменты времени
        errors: Ошибки, радианы
        threshold: Порог, радианы (по умолчанию 0.5°)

    Returns:
        Время сходимости или None, если к концу прогона ошибка выше порога
    """
    above = np.nonzero(errors >= threshold)[0]
    if len(above) == 0:
        return float(times[0])
    last = int(above[-1])
    if last == len(errors) - 1:
        return None
    return float(times[last + 1])


def compute_run_metrics(records: Sequence[SampleRecord], seed: int) -> RunMetrics:
    """
    Метрики одного прогона.

    Args:
        records: Записи прогона
        seed: Зерно прогона

    Returns:
        RunMetrics
    """
    duration = records[-1].t if records else 0.0
    window = steady_window(duration)
    values = {}
    for tag, attr in (("eqv", "angle_err_eqv"), ("naive", "angle_err_naive")):
        series = _series(records, attr)
        if series is None:
            values[tag] = (None, None, None)
            continue
        times, errors = series
        values[tag] = (float(errors[-1]), steady_median(times, errors, window),
                       convergence_time(times, errors))
    return RunMetrics(
        seed=seed,
        final_err_eqv=values["eqv"][0],
        final_err_naive=values["naive"][0],
        steady_median_eqv=values["eqv"][1],
        steady_median_naive=values["naive"][1],
        convergence_time_eqv=values["eqv"][2],
        convergence_time_naive=values["naive"][2],
        outlier_count=sum(1 for r in records if r.outlier),
    )


def _median(values: List[Optional[float]]) -> Optional[float]:
    present = [v for v in values if v is not None]
    if not present:
        return None
    return float(np.median(present))


def aggregate(runs: Sequence[RunMetrics]) -> BatchMetrics:
    """
    Агрегирует метрики серии. Результат не зависит от порядка прогонов.
    """
    ordered = sorted(runs, key=lambda r: r.seed)
    better = sum(1 for r in ordered
                 if r.steady_median_eqv is not None and r.steady_median_naive is not None
                 and r.steady_median_eqv < r.steady_median_naive)
    return BatchMetrics(
        runs=ordered,
        median_final_err_eqv=_median([r.final_err_eqv for r in ordered]),
        median_final_err_naive=_median([r.final_err_naive for r in ordered]),
        median_steady_eqv=_median([r.steady_median_eqv for r in ordered]),
        median_steady_naive=_median([r.steady_median_naive for r in ordered]),
        median_convergence_time_eqv=_median([r.convergence_time_eqv for r in ordered]),
        median_convergence_time_naive=_median([r.convergence_time_naive for r in ordered]),
        eqv_better_count=better,
        total_outliers=sum(r.outlier_count for r in ordered),
    )
