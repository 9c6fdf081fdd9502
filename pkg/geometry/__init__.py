"""
Геометрическое ядро: векторы, точки сферы, повороты SO(3) и операции над ними.
"""
from geometry.types import (
    E1, E2, E3, AlgebraVector, Rotation3, UnitVector3, Vector3, as_vector,
)
from geometry.operations import (
    cross, exp_so3, geodesic_angle, orthonormalize, project_tangent, repair,
    rotation_about, rotation_between, skew, vee,
)
