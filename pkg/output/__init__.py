"""
Вывод результатов: CSV-записи, SVG-графики и сводка метрик.
"""
from output.csv_writer import CSV_HEADER, format_csv, read_csv, write_csv, write_csv_stream
from output.plot import build_figure, write_plot
from output.summary import format_metrics, metrics_to_dict, write_metrics
