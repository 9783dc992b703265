"""Deterministic, splittable random streams for Monte Carlo runs."""
from dataclasses import dataclass
from typing import Tuple, Union

import numpy as np

from utils.errors import ConfigurationError

# child labels for the two configurations drawn in one iteration
SOURCE_STREAM = 0
TARGET_STREAM = 1


@dataclass(frozen=True)
class RandomStream:
    """
    A seed plus a spawn path.

    Every stream maps to a Philox (counter-based) generator keyed by
    SeedSequence(seed, spawn_key), so substream(seed, i) is independent of
    how many other substreams were consumed, and of the platform.
    """
    seed: int
    spawn_key: Tuple[int, ...] = ()

    def __post_init__(self):
        if isinstance(self.seed, bool) or not 0 <= int(self.seed) < 2 ** 64:
            raise ConfigurationError(f"seed must be a 64-bit unsigned integer, got {self.seed!r}")
        object.__setattr__(self, 'seed', int(self.seed))
        object.__setattr__(self, 'spawn_key', tuple(int(k) for k in self.spawn_key))

    def substream(self, index: int) -> 'RandomStream':
        if index < 0:
            raise ConfigurationError("substream index must be non-negative")
        return RandomStream(self.seed, self.spawn_key + (index,))

    def generator(self) -> np.random.Generator:
        """A fresh generator positioned at the start of this stream"""
        sequence = np.random.SeedSequence(self.seed, spawn_key=self.spawn_key)
        return np.random.Generator(np.random.Philox(sequence))


def as_generator(rng: Union[RandomStream, np.random.Generator]) -> np.random.Generator:
    if isinstance(rng, RandomStream):
        return rng.generator()
    if isinstance(rng, np.random.Generator):
        return rng
    raise ConfigurationError(f"expected a RandomStream, got {type(rng).__name__}")
