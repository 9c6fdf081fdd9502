"""
Численная проверка условия эквивариантности и условий подъёма.

Функции возвращают невязки, а не булевы значения: допуски задаются
вызывающей стороной (тестами).
"""
import logging
from typing import Tuple

import numpy as np

from core.models import InputPair
from geometry.operations import cross, skew
from geometry.types import Rotation3, UnitVector3
from symmetry.actions import lift, phi, psi

logger = logging.getLogger(__name__)


def _vector_field(xi: UnitVector3, u: InputPair) -> np.ndarray:
    # f(ξ, u) = −S(ω)ξ + v̄
    return -skew(u.omega) @ xi.v + u.vbar


def check_equivariance(X: Rotation3, xi: UnitVector3, u: InputPair) -> float:
    """
    Невязка условия эквивариантности Xᵀf(ξ, u) = f(φ(X, ξ), ψ(X, u)).

    Args:
        X: Элемент группы
        xi: Точка сферы
        u: Вход с v̄, касательным к ξ

    Returns:
        Евклидова норма разности двух частей
    """
    lhs = X.m.T @ (cross(xi, u.omega) + u.vbar)
    rhs = _vector_field(phi(X, xi), psi(X, u))
    return float(np.linalg.norm(lhs - rhs))


def check_lift_conditions(X: Rotation3, xi: UnitVector3, u: InputPair) -> Tuple[float, float]:
    """
    Невязки двух условий подъёма.

    Первое: −S(Λ(ξ, u))ξ = f(ξ, u), то есть решения поднятой системы
    проецируются на решения исходной. Второе: Ad_{X⁻¹}Λ(ξ, u) =
    Λ(φ(X, ξ), ψ(X, u)).

    Returns:
        Пара (residual1, residual2)
    """
    big_lambda = skew(lift(xi, u))
    residual1 = float(np.linalg.norm(-big_lambda @ xi.v - _vector_field(xi, u)))
    transported = X.m.T @ big_lambda @ X.m
    expected = skew(lift(phi(X, xi), psi(X, u)))
    residual2 = float(np.linalg.norm(transported - expected))
    return residual1, residual2
