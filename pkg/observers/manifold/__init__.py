"""
Модуль эквивариантного наблюдателя в форме на сфере.
"""
from observers.manifold.observer import (
    ManifoldObserver, ManifoldObserverState, euler_on_sphere, manifold_derivative,
    step_manifold_observer,
)
