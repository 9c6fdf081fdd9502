"""
Моделирование: одиночные прогоны, серии Монте-Карло и метрики.
"""
from simulation.batch import run_batch
from simulation.metrics import aggregate, compute_run_metrics, convergence_time, steady_window
from simulation.runner import run_single
