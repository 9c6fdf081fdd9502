"""
SVG-графики прогона.

(a) компоненты истинного пеленга (штрих) и оценки (сплошные линии);
(b) угловые ошибки наблюдателей; (c) ошибка измерения с отметками выбросов.
"""
import io
import logging
from typing import Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.figure import Figure  # noqa: E402
import numpy as np  # noqa: E402

from core.exceptions import OutputError, ValidationError  # noqa: E402
from core.models import SampleRecord  # noqa: E402
from geometry.operations import geodesic_angle  # noqa: E402

logger = logging.getLogger(__name__)

COMPONENT_COLORS = ("tab:blue", "tab:orange", "tab:green")
EQV_COLOR = "tab:blue"
NAIVE_COLOR = "tab:orange"
SVG_HASH_SALT = "bearing-observer"


def _vectors(records: Sequence[SampleRecord], attr: str) -> np.ndarray:
    return np.array([getattr(r, attr).v for r in records])


def build_figure(records: Sequence[SampleRecord]) -> Figure:
    """
    Строит фигуру из трёх панелей.

    В панели (a) шесть кривых: три компоненты истины и три компоненты
    основной оценки (эквивариантной, если она есть, иначе наивной).

    Args:
        records: Непустая последовательность записей

    Returns:
        Фигура matplotlib
    """
    if not records:
        raise ValidationError("cannot plot an empty record sequence")
    t = np.array([r.t for r in records])
    has_eqv = records[0].xihat_eqv is not None
    has_naive = records[0].xihat_naive is not None

    fig, (ax_a, ax_b, ax_c) = plt.subplots(3, 1, figsize=(8.0, 10.0), sharex=True)

    truth = _vectors(records, "xi")
    primary_attr = "xihat_eqv" if has_eqv else "xihat_naive"
    primary = _vectors(records, primary_attr)
    label = "equivariant" if has_eqv else "naive"
    for i, axis in enumerate("xyz"):
        color = COMPONENT_COLORS[i]
        ax_a.plot(t, truth[:, i], linestyle="--", color=color, label=rf"$\xi_{axis}$")
        ax_a.plot(t, primary[:, i], linestyle="-", color=color, label=rf"$\hat{{\xi}}_{axis}$ ({label})")
    ax_a.set_ylabel("bearing component")
    ax_a.legend(loc="upper right", ncol=2, fontsize="small")

    if has_eqv:
        ax_b.plot(t, np.degrees([r.angle_err_eqv for r in records]), color=EQV_COLOR,
                  label="equivariant")
    if has_naive:
        ax_b.plot(t, np.degrees([r.angle_err_naive for r in records]), color=NAIVE_COLOR,
                  label="naive")
    ax_b.set_ylabel("estimation error [deg]")
    ax_b.legend(loc="upper right", fontsize="small")

    meas_err = np.degrees([geodesic_angle(r.xi, r.y) for r in records])
    ax_c.plot(t, meas_err, color="tab:gray", linewidth=0.5, label="measurement")
    flags = np.array([r.outlier for r in records], dtype=bool)
    if np.any(flags):
        ax_c.plot(t[flags], meas_err[flags], linestyle="none", marker="x", color="tab:red",
                  label="outlier")
    ax_c.set_ylabel("measurement error [deg]")
    ax_c.set_xlabel("t [s]")
    ax_c.legend(loc="upper right", fontsize="small")

    for ax in (ax_a, ax_b, ax_c):
        ax.grid(True, linewidth=0.3)
    fig.tight_layout()
    return fig


def strip_prolog(svg: str) -> str:
    """Убирает XML-декларацию и DOCTYPE: документ начинается с корня <svg."""
    start = svg.find("<svg")
    if start < 0:
        raise ValidationError("no <svg> root element in rendered plot")
    return svg[start:]


def write_plot(records: Sequence[SampleRecord], path: str) -> None:
    """
    Записывает самодостаточный SVG; байты детерминированы для одних данных.

    Args:
        records: Непустая последовательность записей
        path: Путь к файлу

    Raises:
        OutputError: При ошибке ввода-вывода
    """
    fig = build_figure(records)
    buffer = io.StringIO()
    try:
        with matplotlib.rc_context({"svg.hashsalt": SVG_HASH_SALT, "svg.fonttype": "path"}):
            fig.savefig(buffer, format="svg", metadata={"Date": None})
    finally:
        plt.close(fig)
    try:
        with open(path, "w", encoding="utf-8", newline="") as f:
            f.write(strip_prolog(buffer.getvalue()))
    except OSError as e:
        raise OutputError(f"cannot write plot ({e.strerror})", path)
    logger.info(f"Wrote plot of {len(records)} records to {path}")
