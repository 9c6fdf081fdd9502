"""
Модели данных приложения.

Этот модуль содержит основные классы для работы с данными в приложении:
входы системы, описания входных сигналов и сцены, параметры шума,
состояние эталонной системы и записи моделирования.
"""
import math
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

import numpy as np

from core.exceptions import ValidationError
from geometry.types import Rotation3, UnitVector3, Vector3, VectorLike, as_vector

Triple = Tuple[float, float, float]


def _triple(values, name: str) -> Triple:
    try:
        items = tuple(float(v) for v in values)
    except (TypeError, ValueError):
        raise ValidationError(f"{name} must be three numbers")
    if len(items) != 3 or not all(math.isfinite(v) for v in items):
        raise ValidationError(f"{name} must be three finite numbers")
    return items  # type: ignore[return-value]


@dataclass(frozen=True, eq=False)
class InputPair:
    """
    Вход системы u = (ω, v̄).

    omega — угловая скорость (рад/с), vbar — масштабированная линейная
    скорость (1/с). Касательность vbar к пеленгу не требуется: измеренный
    вход с шумом выходит из T_ξS².
    """
    omega: Vector3
    vbar: Vector3

    def __post_init__(self) -> None:
        object.__setattr__(self, "omega", as_vector(self.omega))
        object.__setattr__(self, "vbar", as_vector(self.vbar))

    @classmethod
    def zero(cls) -> "InputPair":
        return cls(np.zeros(3), np.zeros(3))

    def as_array(self) -> np.ndarray:
        """Шесть компонент (ωx, ωy, ωz, v̄x, v̄y, v̄z)."""
        return np.concatenate([self.omega, self.vbar])

    def __eq__(self, other) -> bool:
        if not isinstance(other, InputPair):
            return NotImplemented
        return bool(np.array_equal(self.omega, other.omega)
                    and np.array_equal(self.vbar, other.vbar))

    def __repr__(self) -> str:
        return f"InputPair(omega={self.omega.tolist()}, vbar={self.vbar.tolist()})"


@dataclass(frozen=True)
class SinusoidChannel:
    """
    Покомпонентные синусоиды A_i sin(2πν_i t + φ_i) для одного канала.
    """
    amplitude: Triple = (0.0, 0.0, 0.0)
    frequency: Triple = (0.0, 0.0, 0.0)
    phase: Triple = (0.0, 0.0, 0.0)

    def __post_init__(self) -> None:
        amplitude = _triple(self.amplitude, "amplitude")
        frequency = _triple(self.frequency, "frequency")
        phase = _triple(self.phase, "phase")
        if any(a < 0 for a in amplitude):
            raise ValidationError("amplitude must be non-negative")
        if any(f < 0 for f in frequency):
            raise ValidationError("frequency must be non-negative")
        if any(abs(p) > math.pi for p in phase):
            raise ValidationError("phase must lie in [-pi, pi]")
        object.__setattr__(self, "amplitude", amplitude)
        object.__setattr__(self, "frequency", frequency)
        object.__setattr__(self, "phase", phase)

    def value(self, t: float) -> Vector3:
        """Значение сигнала в момент t."""
        a = np.asarray(self.amplitude)
        nu = np.asarray(self.frequency)
        ph = np.asarray(self.phase)
        return a * np.sin(2.0 * math.pi * nu * t + ph)


@dataclass(frozen=True)
class SinusoidSpec:
    """Синусоидальные входы: ω и вспомогательная скорость v̄′."""
    omega: SinusoidChannel = field(default_factory=SinusoidChannel)
    vbar: SinusoidChannel = field(default_factory=SinusoidChannel)


@dataclass(frozen=True)
class AxisCurve:
    """
    Параметрическая кривая одной координаты:
    c0 + c1·t + c2·t² + A·sin(2πνt + φ).
    """
    c0: float = 0.0
    c1: float = 0.0
    c2: float = 0.0
    amplitude: float = 0.0
    frequency: float = 0.0
    phase: float = 0.0

    def value(self, t: float) -> float:
        return (self.c0 + self.c1 * t + self.c2 * t * t
                + self.amplitude * math.sin(2.0 * math.pi * self.frequency * t + self.phase))

    def rate(self, t: float) -> float:
        w = 2.0 * math.pi * self.frequency
        return self.c1 + 2.0 * self.c2 * t + self.amplitude * w * math.cos(w * t + self.phase)


@dataclass(frozen=True)
class Curve3:
    """Траектория точки в R³ из трёх покоординатных кривых."""
    x: AxisCurve = field(default_factory=AxisCurve)
    y: AxisCurve = field(default_factory=AxisCurve)
    z: AxisCurve = field(default_factory=AxisCurve)

    def position(self, t: float) -> Vector3:
        return np.array([self.x.value(t), self.y.value(t), self.z.value(t)])

    def velocity(self, t: float) -> Vector3:
        return np.array([self.x.rate(t), self.y.rate(t), self.z.rate(t)])


@dataclass(frozen=True)
class SceneSpec:
    """
    Кинематическая сцена: аппарат p_B(t), R(t) и цель p_T(t).

    Ориентация R(t) = exp(S(attitude0))·exp(S(body_rate·t)), поэтому
    угловая скорость в связанной системе постоянна и равна body_rate.
    """
    vehicle: Curve3 = field(default_factory=Curve3)
    target: Curve3 = field(default_factory=lambda: Curve3(z=AxisCurve(c0=5.0)))
    attitude0: Triple = (0.0, 0.0, 0.0)
    body_rate: Triple = (0.0, 0.0, 0.0)
    min_distance: float = 1e-3

    def __post_init__(self) -> None:
        object.__setattr__(self, "attitude0", _triple(self.attitude0, "attitude0"))
        object.__setattr__(self, "body_rate", _triple(self.body_rate, "body_rate"))
        if not self.min_distance > 0:
            raise ValidationError("min_distance must be positive")


@dataclass(frozen=True)
class NoiseSpec:
    """
    Параметры искажений: аддитивный гауссов шум входов, шум поворота
    пеленга и выбросы.
    """
    input_sigma: float = 0.1
    bearing_angle_sigma: float = math.radians(5.0)
    outlier_prob: float = 0.01
    noise_before_projection: bool = False

    def __post_init__(self) -> None:
        for name in ("input_sigma", "bearing_angle_sigma", "outlier_prob"):
            value = getattr(self, name)
            if not math.isfinite(value) or value < 0:
                raise ValidationError(f"{name} must be a non-negative number")
        if self.outlier_prob > 1:
            raise ValidationError("outlier_prob must lie in [0, 1]")

    @classmethod
    def disabled(cls) -> "NoiseSpec":
        return cls(input_sigma=0.0, bearing_angle_sigma=0.0, outlier_prob=0.0)


@dataclass(frozen=True)
class TruthState:
    """Состояние эталонной системы: пеленг ξ и поднятое состояние X."""
    t: float
    xi: UnitVector3
    X: Rotation3
    u_clean: InputPair


@dataclass(frozen=True)
class SampleRecord:
    """
    Одна запись моделирования.

    Поля отключённого наблюдателя равны None.
    """
    t: float
    xi: UnitVector3
    y: UnitVector3
    outlier: bool
    xihat_eqv: Optional[UnitVector3] = None
    xihat_naive: Optional[UnitVector3] = None
    angle_err_eqv: Optional[float] = None
    angle_err_naive: Optional[float] = None
    V: Optional[float] = None
    Vdot: Optional[float] = None


@dataclass(frozen=True)
class RunMetrics:
    """Метрики одного прогона."""
    seed: int
    final_err_eqv: Optional[float] = None
    final_err_naive: Optional[float] = None
    steady_median_eqv: Optional[float] = None
    steady_median_naive: Optional[float] = None
    convergence_time_eqv: Optional[float] = None
    convergence_time_naive: Optional[float] = None
    outlier_count: int = 0


@dataclass(frozen=True)
class BatchMetrics:
    """Метрики серии прогонов Монте-Карло и их агрегаты."""
    runs: List[RunMetrics]
    median_final_err_eqv: Optional[float] = None
    median_final_err_naive: Optional[float] = None
    median_steady_eqv: Optional[float] = None
    median_steady_naive: Optional[float] = None
    median_convergence_time_eqv: Optional[float] = None
    median_convergence_time_naive: Optional[float] = None
    eqv_better_count: int = 0
    total_outliers: int = 0
