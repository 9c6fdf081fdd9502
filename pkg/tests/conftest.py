"""
Общие фикстуры тестов.
"""
import os
import sys

import numpy as np
import pytest

# Корень проекта в путь импорта, как при запуске main.py
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))


@pytest.fixture
def rng() -> np.random.Generator:
    """Генератор с фиксированным зерном."""
    return np.random.default_rng(12345)

