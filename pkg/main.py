"""
Основной модуль приложения.

Этот модуль является точкой входа: разбирает аргументы командной строки,
выполняет одиночный прогон или серию Монте-Карло и записывает результаты.
"""
import argparse
import logging
import logging.config
import sys
from dataclasses import replace
from typing import List, Optional

from config import APP_SETTINGS, get_logging_config
from config.run_config import OBSERVER_CHOICES, INIT_CHOICES, RunConfig, load_config
from core.exceptions import BearingObserverError
from core.models import NoiseSpec
from output import write_csv, write_metrics, write_plot
from simulation import compute_run_metrics, run_batch, run_single

logger = logging.getLogger(__name__)


def build_parser() -> argparse.ArgumentParser:
    """Парсер аргументов командной строки."""
    parser = argparse.ArgumentParser(
        prog=APP_SETTINGS["application"],
        description="Equivariant bearing observer simulator",
    )
    parser.add_argument("--config", metavar="PATH", help="JSON run configuration")
    parser.add_argument("--seed", type=int, metavar="N")
    parser.add_argument("--duration", type=float, metavar="S")
    parser.add_argument("--dt", type=float, metavar="S")
    parser.add_argument("--gain", type=float, metavar="K")
    parser.add_argument("--observer", choices=OBSERVER_CHOICES)
    parser.add_argument("--observer-init", choices=INIT_CHOICES, dest="observer_init")
    parser.add_argument("--no-noise", action="store_true", dest="no_noise",
                        help="disable input noise, bearing noise and outliers")
    parser.add_argument("--runs", type=int, metavar="N", help="Monte Carlo run count")
    parser.add_argument("--decimation", type=int, metavar="N",
                        help="observers consume every N-th measurement")
    parser.add_argument("--out", metavar="PATH", help="CSV output (default: stdout)")
    parser.add_argument("--plot", metavar="PATH", help="SVG plot output")
    parser.add_argument("--metrics", metavar="PATH", help="metrics JSON output")
    parser.add_argument("--log-level", dest="log_level", metavar="LEVEL",
                        choices=("DEBUG", "INFO", "WARNING", "ERROR"), type=str.upper)
    return parser


def resolve_config(args: argparse.Namespace) -> RunConfig:
    """
    Конфигурация из файла (если указан) с приоритетом флагов.

    Raises:
        ConfigError: Для недопустимых значений
    """
    cfg = load_config(args.config) if args.config else RunConfig()
    cfg = cfg.with_overrides(
        seed=args.seed, duration=args.duration, dt=args.dt, gain=args.gain,
        observer=args.observer, observer_init=args.observer_init,
        runs=args.runs, decimation=args.decimation,
    )
    if args.no_noise:
        cfg = replace(cfg, noise=NoiseSpec.disabled())
    output = cfg.output
    if args.out is not None:
        output = replace(output, csv=args.out)
    if args.plot is not None:
        output = replace(output, plot=args.plot)
    if args.metrics is not None:
        output = replace(output, metrics=args.metrics)
    return replace(cfg, output=output)


def execute(cfg: RunConfig) -> None:
    """Выполняет прогон или серию и записывает результаты."""
    if cfg.runs > 1:
        if cfg.output.csv is not None or cfg.output.plot is not None:
            logger.warning("CSV and plot outputs apply to single runs only; ignored for a batch")
        write_metrics(run_batch(cfg), cfg.output.metrics)
        return
    records = run_single(cfg)
    write_csv(records, cfg.output.csv)
    if cfg.output.plot is not None:
        write_plot(records, cfg.output.plot)
    if cfg.output.metrics is not None:
        write_metrics(compute_run_metrics(records, cfg.seed), cfg.output.metrics)


def main(argv: Optional[List[str]] = None) -> int:
    """
    Основная функция приложения.

    Args:
        argv: Аргументы командной строки (по умолчанию sys.argv[1:])

    Returns:
        Код возврата: 0 при успехе, 1 при ошибке, 2 при ошибке аргументов
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if isinstance(e.code, int) else 2

    logging.config.dictConfig(get_logging_config(args.log_level))
    try:
        cfg = resolve_config(args)
        logger.info(f"Starting {APP_SETTINGS['application']} {APP_SETTINGS['version']}: "
                    f"seed={cfg.seed}, runs={cfg.runs}, observer={cfg.observer}")
        execute(cfg)
    except BearingObserverError as e:
        logger.error(f"Run failed: {e.message}")
        print(f"error: {e}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
