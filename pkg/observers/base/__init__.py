"""
Пакет с базовыми классами для наблюдателей.
"""
from observers.base.observer import BaseObserver, check_gain, check_step
