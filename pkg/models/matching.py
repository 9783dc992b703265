from dataclasses import dataclass, field
import math
from typing import Optional, Tuple

import numpy as np

from utils.errors import InvalidCostError, InvariantViolationError


class CostMatrix:
    """Square matrix of non-negative finite chord distances D[i][j] in km"""

    __slots__ = ('entries',)

    def __init__(self, entries):
        entries = np.array(entries, dtype=float)
        if entries.ndim != 2 or entries.shape[0] != entries.shape[1] or entries.shape[0] < 1:
            raise InvalidCostError(f"cost matrix must be square and non-empty, got shape {entries.shape}")
        if not np.all(np.isfinite(entries)):
            raise InvalidCostError("cost matrix contains non-finite entries")
        if np.any(entries < 0.0):
            raise InvalidCostError("cost matrix contains negative entries")
        entries.setflags(write=False)
        object.__setattr__(self, 'entries', entries)

    def __setattr__(self, name, value):
        raise AttributeError("CostMatrix is immutable")

    @property
    def n(self) -> int:
        return int(self.entries.shape[0])

    @property
    def squared(self) -> np.ndarray:
        return self.entries ** 2

    def transpose(self) -> 'CostMatrix':
        return CostMatrix(self.entries.T)

    def __repr__(self):
        return f"CostMatrix(n={self.n})"


def as_cost_matrix(d) -> CostMatrix:
    return d if isinstance(d, CostMatrix) else CostMatrix(d)


@dataclass(frozen=True)
class Assignment:
    """target_of[i] is the (0-based) target matched to source i"""
    target_of: Tuple[int, ...]

    def __post_init__(self):
        target_of = tuple(int(j) for j in self.target_of)
        if sorted(target_of) != list(range(len(target_of))):
            raise InvariantViolationError(f"assignment is not a permutation: {target_of}")
        object.__setattr__(self, 'target_of', target_of)

    @property
    def n(self) -> int:
        return len(self.target_of)


@dataclass(frozen=True)
class MatchOutcome:
    assignment: Assignment
    distance_km: float
    solver: str
    rounds: Optional[int] = None

    def to_dict(self):
        return {
            'n': self.assignment.n,
            'solver': self.solver,
            'distance_km': self.distance_km,
            'rounds': self.rounds,
            'assignment': list(self.assignment.target_of)
        }


@dataclass(frozen=True)
class GreedyState:
    """
    Association bookkeeping of the greedy sampler.

    index_vec[i]: 0 when source i is unassociated, else the 1-based target index
    count_vec[j]: 1 once target j is finalized
    temp_count_vec[j]: claims on target j during the current round
    delta_km: distance increment of the last round
    """
    index_vec: np.ndarray
    count_vec: np.ndarray
    temp_count_vec: np.ndarray
    delta_km: float = 0.0
    rounds: int = 0
    total_sq_km2: float = field(default=0.0)

    @classmethod
    def fresh(cls, n: int) -> 'GreedyState':
        zeros = np.zeros(n, dtype=np.int64)
        return cls(zeros.copy(), zeros.copy(), zeros.copy())

    @property
    def finalized(self) -> int:
        return int(np.count_nonzero(self.count_vec))

    @property
    def complete(self) -> bool:
        return bool(np.all(self.count_vec == 1))

    @property
    def distance_km(self) -> float:
        return math.sqrt(self.total_sq_km2)
