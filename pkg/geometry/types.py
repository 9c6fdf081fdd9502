"""
Базовые геометрические типы.

Векторы хранятся как numpy-массивы формы (3,), повороты как матрицы 3×3.
Все типы неизменяемы: массивы копируются и помечаются только для чтения.
"""
import math
from dataclasses import dataclass
from typing import Any, Iterable, Union

import numpy as np
from numpy.typing import NDArray

from core.exceptions import ValidationError

Vector3 = NDArray[np.float64]

UNIT_TOLERANCE = 1e-12
ORTHOGONALITY_TOLERANCE = 1e-9

VectorLike = Union[Vector3, Iterable[float]]


def as_vector(values: VectorLike) -> Vector3:
    """
    Преобразует значения в вектор R³ только для чтения.

    Args:
        values: Три вещественных числа

    Returns:
        Массив формы (3,)

    Raises:
        ValidationError: Если форма неверна или есть нечисловые значения
    """
    arr = np.array(values, dtype=np.float64)
    if arr.shape != (3,):
        raise ValidationError(f"expected a 3-vector, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValidationError(f"vector has non-finite components: {arr}")
    arr.setflags(write=False)
    return arr


def _frozen(arr: NDArray[np.float64]) -> NDArray[np.float64]:
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class UnitVector3:
    """
    Точка на единичной сфере S².

    Конструктор проверяет норму; для нормализации произвольного вектора
    используйте UnitVector3.normalized().
    """
    v: Vector3

    def __post_init__(self) -> None:
        v = self.v
        if not (isinstance(v, np.ndarray) and v.shape == (3,) and not v.flags.writeable):
            v = as_vector(v)
            object.__setattr__(self, "v", v)
        norm = math.sqrt(float(v @ v))
        if not math.isfinite(norm) or abs(norm - 1.0) > UNIT_TOLERANCE:
            raise ValidationError(f"not a unit vector (norm={norm!r})")

    @classmethod
    def normalized(cls, values: VectorLike) -> "UnitVector3":
        """
        Нормализует вектор на сферу.

        Args:
            values: Ненулевой вектор R³

        Returns:
            Единичный вектор того же направления

        Raises:
            ValidationError: Для нулевого или нечислового вектора
        """
        arr = np.array(values, dtype=np.float64)
        if arr.shape != (3,):
            raise ValidationError(f"expected a 3-vector, got shape {arr.shape}")
        norm = math.sqrt(float(arr @ arr))
        if not math.isfinite(norm) or norm == 0.0:
            raise ValidationError(f"cannot normalize vector {arr}")
        return cls._wrap(arr / norm)

    @classmethod
    def _wrap(cls, arr: NDArray[np.float64]) -> "UnitVector3":
        # результат уже нормирован вызывающей стороной
        obj = object.__new__(cls)
        object.__setattr__(obj, "v", _frozen(arr))
        return obj

    def __neg__(self) -> "UnitVector3":
        return UnitVector3._wrap(-self.v)

    def __iter__(self):
        return iter(self.v.tolist())

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, UnitVector3):
            return NotImplemented
        return bool(np.array_equal(self.v, other.v))

    def __hash__(self) -> int:
        return hash(self.v.tobytes())

    def __repr__(self) -> str:
        x, y, z = self.v.tolist()
        return f"UnitVector3({x:.6g}, {y:.6g}, {z:.6g})"


@dataclass(frozen=True, eq=False)
class Rotation3:
    """
    Элемент SO(3), хранимый как матрица 3×3.

    Инварианты: ‖mᵀm − I‖_F ≤ 1e-9 и det(m) > 0.
    """
    m: NDArray[np.float64]

    def __post_init__(self) -> None:
        m = np.array(self.m, dtype=np.float64)
        if m.shape != (3, 3):
            raise ValidationError(f"expected a 3x3 matrix, got shape {m.shape}")
        if not np.all(np.isfinite(m)):
            raise ValidationError("rotation has non-finite entries")
        err = float(np.linalg.norm(m.T @ m - np.eye(3)))
        if err > ORTHOGONALITY_TOLERANCE:
            raise ValidationError(f"matrix is not orthogonal (‖mᵀm − I‖_F = {err:.3e})")
        if float(np.linalg.det(m)) <= 0.0:
            raise ValidationError("matrix has non-positive determinant")
        object.__setattr__(self, "m", _frozen(m))

    @classmethod
    def identity(cls) -> "Rotation3":
        return cls._wrap(np.eye(3))

    @classmethod
    def _wrap(cls, m: NDArray[np.float64]) -> "Rotation3":
        # для произведений и экспонент, которые остаются в SO(3) по построению
        obj = object.__new__(cls)
        object.__setattr__(obj, "m", _frozen(m))
        return obj

    @property
    def T(self) -> "Rotation3":
        """Транспонированная (обратная) матрица поворота."""
        return Rotation3._wrap(self.m.T.copy())

    def inverse(self) -> "Rotation3":
        return self.T

    def apply(self, v: VectorLike) -> Vector3:
        """Применяет поворот к вектору R³."""
        if isinstance(v, UnitVector3):
            v = v.v
        return self.m @ np.asarray(v, dtype=np.float64)

    def orthogonality_error(self) -> float:
        """Возвращает ‖mᵀm − I‖_F."""
        return float(np.linalg.norm(self.m.T @ self.m - np.eye(3)))

    def __matmul__(self, other: "Rotation3") -> "Rotation3":
        if not isinstance(other, Rotation3):
            return NotImplemented
        return Rotation3._wrap(self.m @ other.m)

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, Rotation3):
            return NotImplemented
        return bool(np.array_equal(self.m, other.m))

    def __hash__(self) -> int:
        return hash(self.m.tobytes())

    def __repr__(self) -> str:
        return f"Rotation3({np.array2string(self.m, precision=6)})"


@dataclass(frozen=True, eq=False)
class AlgebraVector:
    """
    Элемент so(3) в координатах R³: w соответствует матрице S(w).
    """
    w: Vector3

    def __post_init__(self) -> None:
        w = self.w
        if not (isinstance(w, np.ndarray) and w.shape == (3,) and not w.flags.writeable):
            object.__setattr__(self, "w", as_vector(w))
        elif not np.all(np.isfinite(w)):
            raise ValidationError(f"algebra vector has non-finite components: {w}")

    @classmethod
    def zero(cls) -> "AlgebraVector":
        return cls(np.zeros(3))

    def __add__(self, other: "AlgebraVector") -> "AlgebraVector":
        return AlgebraVector(self.w + other.w)

    def __sub__(self, other: "AlgebraVector") -> "AlgebraVector":
        return AlgebraVector(self.w - other.w)

    def __mul__(self, scale: float) -> "AlgebraVector":
        return AlgebraVector(self.w * float(scale))

    __rmul__ = __mul__

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, AlgebraVector):
            return NotImplemented
        return bool(np.array_equal(self.w, other.w))

    def __hash__(self) -> int:
        return hash(self.w.tobytes())


E1 = UnitVector3._wrap(np.array([1.0, 0.0, 0.0]))
E2 = UnitVector3._wrap(np.array([0.0, 1.0, 0.0]))
E3 = UnitVector3._wrap(np.array([0.0, 0.0, 1.0]))
