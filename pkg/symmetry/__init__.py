"""
Пакет симметрии: действия группы SO(3) на S² и на входах, эквивариантный подъём.
"""
from symmetry.actions import (
    DEFAULT_ORIGIN, Origin, classical_lift, decompose_angular_velocity,
    induced_angular_velocity, is_in_stabilizer, lift, phi, psi,
)
from symmetry.checks import check_equivariance, check_lift_conditions
