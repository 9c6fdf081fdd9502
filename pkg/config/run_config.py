"""
Конфигурация прогона моделирования.

Документ конфигурации — JSON-объект; все ключи необязательны и по
умолчанию принимают значения численного эксперимента (20 с, шаг 1e-3,
k = 1, шум входов 0.1, шум пеленга 5°, выбросы 1 %). Неизвестные ключи
отвергаются с указанием имени.

Схема::

    {
      "duration": 20.0, "dt": 0.001, "gain": 1.0,
      "observer": "equivariant" | "naive" | "both",
      "observer_init": "identity" | "truth",
      "seed": 0, "runs": 1, "decimation": 1, "workers": 1,
      "origin": [0, 0, 1],
      "noise": {"input_sigma": 0.1, "bearing_angle_sigma": 0.0873,
                "outlier_prob": 0.01, "noise_before_projection": false},
      "input": {"source": "sinusoid" | "scene",
                "sinusoid": {"omega": {"amplitude": [..], "frequency": [..], "phase": [..]},
                             "vbar": {...}} | null,
                "scene": {"vehicle": {"x": {"c0": 0, "c1": 0, "c2": 0, "amplitude": 0,
                                            "frequency": 0, "phase": 0}, "y": {}, "z": {}},
                          "target": {...}, "attitude0": [..], "body_rate": [..],
                          "min_distance": 0.001} | null},
      "output": {"csv": null, "plot": null, "metrics": null}
    }

При "sinusoid": null параметры синусоид разыгрываются из зерна прогона.
"""
import json
import logging
import math
from dataclasses import asdict, dataclass, field, replace
from pathlib import Path
from typing import Any, Dict, Mapping, Optional, Tuple

from config.app_config import SIMULATION_DEFAULTS
from core.exceptions import ConfigError, ValidationError
from core.models import (
    AxisCurve, Curve3, NoiseSpec, SceneSpec, SinusoidChannel, SinusoidSpec,
)

logger = logging.getLogger(__name__)

OBSERVER_CHOICES = ("equivariant", "naive", "both")
INIT_CHOICES = ("identity", "truth")
SOURCE_CHOICES = ("sinusoid", "scene")
MAX_SEED = 2 ** 64 - 1


@dataclass(frozen=True)
class OutputPaths:
    """Пути вывода; None для CSV означает стандартный вывод."""
    csv: Optional[str] = None
    plot: Optional[str] = None
    metrics: Optional[str] = None


@dataclass(frozen=True)
class RunConfig:
    """
    Параметры прогона или серии прогонов.
    """
    duration: float = SIMULATION_DEFAULTS["duration"]
    dt: float = SIMULATION_DEFAULTS["dt"]
    gain: float = SIMULATION_DEFAULTS["gain"]
    observer: str = SIMULATION_DEFAULTS["observer"]
    observer_init: str = SIMULATION_DEFAULTS["observer_init"]
    seed: int = SIMULATION_DEFAULTS["seed"]
    runs: int = SIMULATION_DEFAULTS["runs"]
    decimation: int = SIMULATION_DEFAULTS["decimation"]
    workers: int = 1
    origin: Tuple[float, float, float] = (0.0, 0.0, 1.0)
    noise: NoiseSpec = field(default_factory=NoiseSpec)
    input_source: str = "sinusoid"
    sinusoid: Optional[SinusoidSpec] = None
    scene: Optional[SceneSpec] = None
    output: OutputPaths = field(default_factory=OutputPaths)

    def __post_init__(self) -> None:
        _positive(self.duration, "duration")
        _positive(self.dt, "dt")
        _positive(self.gain, "gain")
        if self.dt > self.duration:
            raise ConfigError(f"dt={self.dt} exceeds duration={self.duration}", key="dt")
        if self.duration / self.dt > SIMULATION_DEFAULTS["max_steps"]:
            raise ConfigError(
                f"duration/dt exceeds {SIMULATION_DEFAULTS['max_steps']} steps", key="dt")
        _choice(self.observer, OBSERVER_CHOICES, "observer")
        _choice(self.observer_init, INIT_CHOICES, "observer_init")
        _choice(self.input_source, SOURCE_CHOICES, "input.source")
        _integer(self.seed, "seed", 0, MAX_SEED)
        _integer(self.runs, "runs", 1)
        _integer(self.decimation, "decimation", 1)
        _integer(self.workers, "workers", 1)
        norm = math.sqrt(sum(c * c for c in self.origin))
        if len(self.origin) != 3 or abs(norm - 1.0) > 1e-9:
            raise ConfigError("origin must be a unit 3-vector", key="origin")
        if self.input_source == "scene" and self.scene is None:
            raise ConfigError("scene source selected without a scene", key="input.scene")

    @property
    def steps(self) -> int:
        """
        Число шагов интегрирования N = round(duration/dt).

        Последняя запись приходится на N·dt, что отличается от duration
        не более чем на dt/2.
        """
        return int(round(self.duration / self.dt))

    def with_overrides(self, **changes: Any) -> "RunConfig":
        """Копия конфигурации с изменёнными полями (None игнорируется)."""
        changes = {k: v for k, v in changes.items() if v is not None}
        return replace(self, **changes)


def _positive(value: Any, key: str) -> None:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError(f"expected a number, got {type(value).__name__}", key=key)
    if not math.isfinite(value) or value <= 0:
        raise ConfigError(f"must be positive, got {value}", key=key)


def _integer(value: Any, key: str, minimum: int, maximum: Optional[int] = None) -> None:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ConfigError(f"expected an integer, got {type(value).__name__}", key=key)
    if value < minimum or (maximum is not None and value > maximum):
        raise ConfigError(f"out of range: {value}", key=key)


def _choice(value: Any, choices: Tuple[str, ...], key: str) -> None:
    if value not in choices:
        raise ConfigError(f"must be one of {', '.join(choices)}, got {value!r}", key=key)


def _section(data: Any, path: str, allowed: Tuple[str, ...]) -> Dict[str, Any]:
    if not isinstance(data, Mapping):
        raise ConfigError(f"expected an object, got {type(data).__name__}", key=path or None)
    for key in data:
        if key not in allowed:
            raise ConfigError("unknown key", key=f"{path}.{key}" if path else key)
    return dict(data)


def _number(data: Mapping[str, Any], key: str, path: str, default: float) -> float:
    value = data.get(key, default)
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError(f"expected a number, got {type(value).__name__}", key=_join(path, key))
    return float(value)


def _int(data: Mapping[str, Any], key: str, path: str, default: int) -> int:
    value = data.get(key, default)
    if isinstance(value, bool) or not isinstance(value, int):
        raise ConfigError(f"expected an integer, got {type(value).__name__}", key=_join(path, key))
    return value


def _string(data: Mapping[str, Any], key: str, path: str, default: Optional[str]) -> Optional[str]:
    value = data.get(key, default)
    if value is not None and not isinstance(value, str):
        raise ConfigError(f"expected a string, got {type(value).__name__}", key=_join(path, key))
    return value


def _triple(data: Mapping[str, Any], key: str, path: str,
            default: Tuple[float, float, float]) -> Tuple[float, float, float]:
    value = data.get(key, default)
    if (not isinstance(value, (list, tuple)) or len(value) != 3
            or any(isinstance(v, bool) or not isinstance(v, (int, float)) for v in value)):
        raise ConfigError("expected a list of three numbers", key=_join(path, key))
    return (float(value[0]), float(value[1]), float(value[2]))


def _join(path: str, key: str) -> str:
    return f"{path}.{key}" if path else key


def _wrap_validation(builder, path: str, *args: Any) -> Any:
    try:
        return builder(*args)
    except ValidationError as e:
        raise ConfigError(e.message, key=path)


def _parse_channel(data: Any, path: str) -> SinusoidChannel:
    section = _section(data, path, ("amplitude", "frequency", "phase"))
    zero = (0.0, 0.0, 0.0)
    return _wrap_validation(
        SinusoidChannel, path,
        _triple(section, "amplitude", path, zero),
        _triple(section, "frequency", path, zero),
        _triple(section, "phase", path, zero),
    )


def _parse_sinusoid(data: Any, path: str) -> SinusoidSpec:
    section = _section(data, path, ("omega", "vbar"))
    return SinusoidSpec(
        omega=_parse_channel(section.get("omega", {}), f"{path}.omega"),
        vbar=_parse_channel(section.get("vbar", {}), f"{path}.vbar"),
    )


_AXIS_KEYS = ("c0", "c1", "c2", "amplitude", "frequency", "phase")


def _parse_axis(data: Any, path: str) -> AxisCurve:
    section = _section(data, path, _AXIS_KEYS)
    return AxisCurve(**{key: _number(section, key, path, 0.0) for key in _AXIS_KEYS})


def _parse_curve(data: Any, path: str) -> Curve3:
    section = _section(data, path, ("x", "y", "z"))
    return Curve3(**{axis: _parse_axis(section.get(axis, {}), f"{path}.{axis}")
                     for axis in ("x", "y", "z")})


def _parse_scene(data: Any, path: str) -> SceneSpec:
    section = _section(data, path, ("vehicle", "target", "attitude0", "body_rate", "min_distance"))
    defaults = SceneSpec()
    target = (_parse_curve(section["target"], f"{path}.target")
              if "target" in section else defaults.target)
    return _wrap_validation(
        SceneSpec, path,
        _parse_curve(section.get("vehicle", {}), f"{path}.vehicle"),
        target,
        _triple(section, "attitude0", path, defaults.attitude0),
        _triple(section, "body_rate", path, defaults.body_rate),
        _number(section, "min_distance", path, defaults.min_distance),
    )


def _parse_noise(data: Any) -> NoiseSpec:
    section = _section(data, "noise", ("input_sigma", "bearing_angle_sigma", "outlier_prob",
                                       "noise_before_projection"))
    defaults = NoiseSpec()
    before = section.get("noise_before_projection", defaults.noise_before_projection)
    if not isinstance(before, bool):
        raise ConfigError("expected a boolean", key="noise.noise_before_projection")
    return _wrap_validation(
        NoiseSpec, "noise",
        _number(section, "input_sigma", "noise", defaults.input_sigma),
        _number(section, "bearing_angle_sigma", "noise", defaults.bearing_angle_sigma),
        _number(section, "outlier_prob", "noise", defaults.outlier_prob),
        before,
    )


_TOP_KEYS = ("duration", "dt", "gain", "observer", "observer_init", "seed", "runs",
             "decimation", "workers", "origin", "noise", "input", "output")


def config_from_dict(data: Any) -> RunConfig:
    """
    Построить RunConfig из разобранного JSON-объекта.

    Raises:
        ConfigError: С именем ключа при ошибке типа, диапазона или неизвестном ключе
    """
    top = _section(data, "", _TOP_KEYS)
    base = RunConfig()
    input_section = _section(top.get("input", {}), "input", ("source", "sinusoid", "scene"))
    output_section = _section(top.get("output", {}), "output", ("csv", "plot", "metrics"))

    sinusoid = input_section.get("sinusoid")
    scene = input_section.get("scene")
    return RunConfig(
        duration=_number(top, "duration", "", base.duration),
        dt=_number(top, "dt", "", base.dt),
        gain=_number(top, "gain", "", base.gain),
        observer=_string(top, "observer", "", base.observer),
        observer_init=_string(top, "observer_init", "", base.observer_init),
        seed=_int(top, "seed", "", base.seed),
        runs=_int(top, "runs", "", base.runs),
        decimation=_int(top, "decimation", "", base.decimation),
        workers=_int(top, "workers", "", base.workers),
        origin=_triple(top, "origin", "", base.origin),
        noise=_parse_noise(top.get("noise", {})),
        input_source=_string(input_section, "source", "input", base.input_source),
        sinusoid=None if sinusoid is None else _parse_sinusoid(sinusoid, "input.sinusoid"),
        scene=None if scene is None else _parse_scene(scene, "input.scene"),
        output=OutputPaths(
            csv=_string(output_section, "csv", "output", None),
            plot=_string(output_section, "plot", "output", None),
            metrics=_string(output_section, "metrics", "output", None),
        ),
    )


def parse_config(text: str) -> RunConfig:
    """
    Разобрать JSON-документ конфигурации.

    Пустой документ даёт конфигурацию по умолчанию.

    Args:
        text: Текст JSON

    Returns:
        Конфигурация прогона

    Raises:
        ConfigError: Для некорректного JSON или недопустимых значений
    """
    if not text.strip():
        return RunConfig()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ConfigError(f"invalid JSON at line {e.lineno} column {e.colno}: {e.msg}")
    return config_from_dict(data)


def config_to_dict(cfg: RunConfig) -> Dict[str, Any]:
    """Представление конфигурации в виде JSON-совместимого словаря."""
    return {
        "duration": cfg.duration,
        "dt": cfg.dt,
        "gain": cfg.gain,
        "observer": cfg.observer,
        "observer_init": cfg.observer_init,
        "seed": cfg.seed,
        "runs": cfg.runs,
        "decimation": cfg.decimation,
        "workers": cfg.workers,
        "origin": list(cfg.origin),
        "noise": asdict(cfg.noise),
        "input": {
            "source": cfg.input_source,
            "sinusoid": None if cfg.sinusoid is None else _lists(asdict(cfg.sinusoid)),
            "scene": None if cfg.scene is None else _lists(asdict(cfg.scene)),
        },
        "output": asdict(cfg.output),
    }


def _lists(value: Any) -> Any:
    if isinstance(value, dict):
        return {k: _lists(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_lists(v) for v in value]
    return value


def serialize_config(cfg: RunConfig) -> str:
    """
    Сериализовать конфигурацию в JSON, который разбирается обратно в
    идентичный RunConfig.
    """
    return json.dumps(config_to_dict(cfg), indent=2, sort_keys=True)


def load_config(path: str) -> RunConfig:
    """
    Прочитать конфигурацию из файла.

    Raises:
        ConfigError: Если файл не читается или содержимое некорректно
    """
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise ConfigError(f"cannot read config file {path}: {e}", key="config")
    logger.info(f"Loaded run configuration from {path}")
    return parse_config(text)
