"""
Одиночный прогон моделирования.

На каждом шаге: чистый вход в середине шага, искажённый вход, искажённый
пеленг с возможным выбросом, шаг эталонной системы по чистому входу и шаги
наблюдателей по искажённым данным. Оба наблюдателя получают одни и те же
искажённые входы и измерения.
"""
import logging
import math
from typing import List, Optional, Tuple, cast

from config.run_config import RunConfig
from core.exceptions import SimulationError, ValidationError
from core.models import InputPair, SampleRecord, TruthState
from core.utils import format_degrees
from dynamics.bearing import advance_truth, initial_truth
from dynamics.inputs import InputSource, SinusoidInput, random_spec
from dynamics.scene import SceneInput
from geometry.operations import geodesic_angle, project_tangent
from geometry.types import Rotation3, UnitVector3
from noise.models import maybe_outlier, perturb_bearing, perturb_input, random_unit_vector
from noise.streams import RandomStreams
from observers import create_observers
from observers.base.observer import BaseObserver
from observers.diagnostics import diagnostics
from observers.equivariant.observer import EquivariantObserver
from symmetry.actions import Origin, phi

logger = logging.getLogger(__name__)


def build_input_source(cfg: RunConfig, streams: RandomStreams) -> InputSource:
    """
    Источник входа прогона: синусоиды из конфигурации, разыгранные из
    зерна синусоиды или кинематическая сцена.
    """
    if cfg.input_source == "scene":
        assert cfg.scene is not None
        source = SceneInput(cfg.scene)
        source.check_clearance(cfg.duration, cfg.dt)
        return source
    spec = cfg.sinusoid if cfg.sinusoid is not None else random_spec(streams.spec)
    logger.debug(f"Sinusoid inputs: {spec}")
    return SinusoidInput(spec)


def initial_bearing(cfg: RunConfig, source: InputSource, streams: RandomStreams) -> UnitVector3:
    """ξ(0): пеленг сцены или равномерная случайная точка сферы."""
    if isinstance(source, SceneInput):
        return source.bearing(0.0)
    return random_unit_vector(streams.initial)


def measured_input(cfg: RunConfig, source: InputSource, t: float, xi: UnitVector3,
                   u: InputPair, streams: RandomStreams) -> InputPair:
    """
    Искажённый вход для наблюдателей.

    По умолчанию шум добавляется после проекции v̄ = Π_ξ v̄′; при
    noise_before_projection — к v̄′ до проекции.
    """
    noise = cfg.noise
    if not noise.noise_before_projection:
        return perturb_input(u, noise, streams.input_noise)
    omega, vbar_prime = source.sample_raw(t, xi)
    noisy = perturb_input(InputPair(omega, vbar_prime), noise, streams.input_noise)
    return InputPair(noisy.omega, project_tangent(xi, noisy.vbar))


def _make_record(t: float, truth: TruthState, y: UnitVector3, outlier: bool,
                 eqv: Optional[EquivariantObserver], naive: Optional[BaseObserver],
                 gain: float, origin: Origin) -> SampleRecord:
    xihat_eqv = xihat_naive = None
    err_eqv = err_naive = V = Vdot = None
    if eqv is not None:
        diag = diagnostics(truth.X, eqv.Xhat, truth.xi, gain, origin)
        xihat_eqv = eqv.estimate
        err_eqv, V, Vdot = diag.angle_err, diag.V, diag.Vdot_analytic
    if naive is not None:
        xihat_naive = naive.estimate
        err_naive = geodesic_angle(xihat_naive, truth.xi)
    return SampleRecord(t=t, xi=truth.xi, y=y, outlier=outlier,
                        xihat_eqv=xihat_eqv, xihat_naive=xihat_naive,
                        angle_err_eqv=err_eqv, angle_err_naive=err_naive, V=V, Vdot=Vdot)


def _check_finite(record: SampleRecord, step: int) -> None:
    values = [record.angle_err_eqv, record.angle_err_naive, record.V, record.Vdot]
    if any(v is not None and not math.isfinite(v) for v in values):
        raise SimulationError("non-finite observer state", step=step)


def initial_states(cfg: RunConfig, streams: RandomStreams
                   ) -> Tuple[InputSource, Origin, TruthState, Rotation3]:
    """
    Источник входа, начало координат, начальное состояние системы и X̂(0).
    """
    origin = Origin(UnitVector3.normalized(cfg.origin))
    source = build_input_source(cfg, streams)
    xi0 = initial_bearing(cfg, source, streams)
    truth = initial_truth(xi0, source, origin)
    Xhat0 = truth.X if cfg.observer_init == "truth" else Rotation3.identity()
    return source, origin, truth, Xhat0


def run_single(cfg: RunConfig) -> List[SampleRecord]:
    """
    Выполняет один прогон и возвращает записи для t_k = k·dt, k = 0..N.

    Args:
        cfg: Конфигурация прогона (используется cfg.seed)

    Returns:
        Последовательность записей

    Raises:
        SimulationError: При нечисловом состоянии с номером шага
    """
    streams = RandomStreams.from_seed(cfg.seed)
    source, origin, truth, Xhat0 = initial_states(cfg, streams)
    observers = create_observers(cfg.observer, cfg.gain, origin)
    for observer in observers.values():
        observer.reset(Xhat0)
    eqv = cast(Optional[EquivariantObserver], observers.get("equivariant"))
    naive = observers.get("naive")

    h = cfg.dt
    n_steps = cfg.steps
    initial_error = geodesic_angle(phi(Xhat0, origin.xi_ring), truth.xi)
    logger.info(f"Run seed={cfg.seed}: {n_steps} steps of {h} s, observer={cfg.observer}, "
                f"initial error {format_degrees(initial_error)}")

    records: List[SampleRecord] = []
    outliers = 0
    for k in range(n_steps + 1):
        t = k * h
        try:
            y = perturb_bearing(truth.xi, cfg.noise, streams.bearing_noise)
            y, is_outlier = maybe_outlier(y, cfg.noise, streams.outliers)
            outliers += int(is_outlier)
            record = _make_record(t, truth, y, is_outlier, eqv, naive, cfg.gain, origin)
            _check_finite(record, k)
            records.append(record)
            if k == n_steps:
                break
            u = source.sample(t + 0.5 * h, truth.xi)
            u_meas = measured_input(cfg, source, t + 0.5 * h, truth.xi, u, streams)
            truth = advance_truth(truth, u, h, origin)
            measurement = y if k % cfg.decimation == 0 else None
            for observer in observers.values():
                observer.step(measurement, u_meas, h)
        except ValidationError as e:
            raise SimulationError(f"invalid state: {e.message}", step=k)

    last = records[-1]
    logger.info(f"Run seed={cfg.seed} finished: final error eqv={format_degrees(last.angle_err_eqv)}, "
                f"naive={format_degrees(last.angle_err_naive)}, outliers={outliers}")
    return records
