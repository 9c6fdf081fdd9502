"""
Модуль наивного наблюдателя на сфере.
"""
from observers.naive.observer import NaiveObserver, step_naive_observer
