"""
Именованные независимые потоки случайных чисел одного прогона.

Все потоки порождаются из одного зерна через numpy.random.SeedSequence,
поэтому повтор зерна воспроизводит каждую выборку бит в бит.
"""
from dataclasses import dataclass

import numpy as np

STREAM_NAMES = ("spec", "initial", "input_noise", "bearing_noise", "outliers")


@dataclass
class RandomStreams:
    """Генераторы для параметров входов, начальных условий и шумов."""
    spec: np.random.Generator
    initial: np.random.Generator
    input_noise: np.random.Generator
    bearing_noise: np.random.Generator
    outliers: np.random.Generator

    @classmethod
    def from_seed(cls, seed: int) -> "RandomStreams":
        """
        Создаёт потоки из зерна прогона.

        Args:
            seed: Неотрицательное целое (до 64 бит)

        Returns:
            Набор независимых генераторов
        """
        children = np.random.SeedSequence(int(seed)).spawn(len(STREAM_NAMES))
        generators = {name: np.random.default_rng(child)
                      for name, child in zip(STREAM_NAMES, children)}
        return cls(**generators)
