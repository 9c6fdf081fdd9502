"""
Модуль эквивариантного наблюдателя на группе SO(3).
"""
from observers.equivariant.observer import (
    EquivariantObserver, GroupObserverState, correction, estimate, step_group_observer,
)
