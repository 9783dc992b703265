"""
Distance between equal-size point configurations.

W_d = sqrt(sum_i D[i][target_of[i]]^2) over a one-to-one assignment, either
the exact minimum (enumeration or Hungarian) or the greedy round-based sampler.
"""
from functools import lru_cache
import itertools
import logging
import math

import numpy as np
from scipy.optimize import linear_sum_assignment

from models.matching import Assignment, CostMatrix, GreedyState, MatchOutcome, as_cost_matrix
from models.point import PointConfiguration
from services.sphere import chord_distance_matrix
from utils.errors import (
    CardinalityError,
    ConfigurationError,
    InvariantViolationError,
    RadiusMismatchError,
    SizeLimitError
)

logger = logging.getLogger(__name__)

BRUTEFORCE_LIMIT = 10
# permutations cached whole up to this size, enumerated in chunks above it
_CACHED_PERMUTATION_SIZE = 8
_PERMUTATION_CHUNK = 200_000


def build_cost_matrix(source: PointConfiguration, target: PointConfiguration) -> CostMatrix:
    if source.n_points != target.n_points:
        raise CardinalityError(
            f"configurations must have equal sizes, got {source.n_points} and {target.n_points}"
        )
    if source.radius_km != target.radius_km:
        raise RadiusMismatchError(
            f"configurations must share a radius, got {source.radius_km} and {target.radius_km} km"
        )
    return CostMatrix(chord_distance_matrix(source, target))


def outcome_distance(d, assignment: Assignment) -> float:
    """sqrt(sum_i D[i][target_of[i]]^2) recomputed from the cost matrix"""
    d = as_cost_matrix(d)
    picked = d.entries[np.arange(d.n), np.asarray(assignment.target_of)]
    return math.sqrt(math.fsum(picked * picked))


@lru_cache(maxsize=None)
def _all_permutations(n: int) -> np.ndarray:
    table = np.array(list(itertools.permutations(range(n))), dtype=np.int8).reshape(-1, n)
    table.setflags(write=False)
    return table


def _permutation_chunks(n: int):
    if n <= _CACHED_PERMUTATION_SIZE:
        yield _all_permutations(n)
        return
    source = itertools.permutations(range(n))
    while True:
        flat = np.fromiter(
            itertools.chain.from_iterable(itertools.islice(source, _PERMUTATION_CHUNK)),
            dtype=np.int8
        )
        if flat.size == 0:
            return
        yield flat.reshape(-1, n)


def exact_assignment_bruteforce(d, limit: int = BRUTEFORCE_LIMIT) -> MatchOutcome:
    """
    Enumerate all N! assignments in lexicographic order and keep the first
    one with the smallest sum of squared distances.
    """
    d = as_cost_matrix(d)
    if d.n > limit:
        raise SizeLimitError(f"brute-force assignment is limited to n <= {limit}, got n={d.n}")
    squared = d.squared
    rows = np.arange(d.n)
    best_cost = math.inf
    best = None
    for chunk in _permutation_chunks(d.n):
        costs = squared[rows, chunk].sum(axis=1)
        idx = int(np.argmin(costs))
        if costs[idx] < best_cost:
            best_cost = float(costs[idx])
            best = chunk[idx]
    assignment = Assignment(tuple(int(j) for j in best))
    return MatchOutcome(assignment, outcome_distance(d, assignment), 'exact')


def exact_assignment_poly(d) -> MatchOutcome:
    """Exact minimum via the linear assignment problem on squared costs"""
    d = as_cost_matrix(d)
    rows, cols = linear_sum_assignment(d.squared)
    target_of = np.empty(d.n, dtype=np.int64)
    target_of[rows] = cols
    assignment = Assignment(tuple(int(j) for j in target_of))
    return MatchOutcome(assignment, outcome_distance(d, assignment), 'exact')


def solve_exact(d, method: str = 'auto', limit: int = BRUTEFORCE_LIMIT) -> MatchOutcome:
    d = as_cost_matrix(d)
    if method == 'bruteforce' or (method == 'auto' and d.n <= limit):
        return exact_assignment_bruteforce(d, limit=limit)
    if method in ('hungarian', 'auto'):
        return exact_assignment_poly(d)
    raise ConfigurationError(f"unknown exact method {method!r}")


def greedy_round(d, state: GreedyState) -> GreedyState:
    """
    One association round.

    Phase 1: each unassociated source claims its nearest free target
    (ties -> lowest target index).
    Phase 2: every claimed target is finalized; among several claimants the
    closest source keeps it (ties -> lowest source index), the others are
    released for the next round.
    """
    d = as_cost_matrix(d)
    index_vec = state.index_vec.copy()
    count_vec = state.count_vec.copy()
    temp_count = np.zeros_like(count_vec)

    sources = np.flatnonzero(index_vec == 0)
    free = np.flatnonzero(count_vec == 0)
    if sources.size == 0 and free.size == 0:
        raise InvariantViolationError("greedy round called on a completed association")
    if sources.size == 0 or free.size == 0:
        raise InvariantViolationError(
            f"{sources.size} unassociated sources but {free.size} free targets"
        )

    sub = d.entries[np.ix_(sources, free)]
    claims = free[np.argmin(sub, axis=1)]
    index_vec[sources] = claims + 1
    np.add.at(temp_count, claims, 1)

    claim_dist = d.entries[sources, claims]
    # group by target, then nearest source first, then lowest source index
    order = np.lexsort((sources, claim_dist, claims))
    ordered_targets = claims[order]
    first = np.ones(order.size, dtype=bool)
    first[1:] = ordered_targets[1:] != ordered_targets[:-1]
    winners = order[first]
    losers = order[~first]

    count_vec[claims[winners]] = 1
    index_vec[sources[losers]] = 0
    won = claim_dist[winners]
    delta_sq = math.fsum(won * won)

    if winners.size < 1:
        raise InvariantViolationError("greedy round finalized no target")
    return GreedyState(
        index_vec=index_vec,
        count_vec=count_vec,
        temp_count_vec=temp_count,
        delta_km=math.sqrt(delta_sq),
        rounds=state.rounds + 1,
        total_sq_km2=state.total_sq_km2 + delta_sq
    )


def greedy_assignment(d) -> MatchOutcome:
    """Run greedy rounds on a cost matrix until every target is associated"""
    d = as_cost_matrix(d)
    state = GreedyState.fresh(d.n)
    while not state.complete:
        before = state.finalized
        state = greedy_round(d, state)
        if state.finalized <= before or state.rounds > d.n:
            raise InvariantViolationError("greedy association stopped making progress")
    assignment = Assignment(tuple(int(j) - 1 for j in state.index_vec))
    return MatchOutcome(assignment, state.distance_km, 'greedy', rounds=state.rounds)


def greedy_distance(source: PointConfiguration, target: PointConfiguration) -> MatchOutcome:
    return greedy_assignment(build_cost_matrix(source, target))


def match(source: PointConfiguration, target: PointConfiguration, solver: str = 'greedy',
          exact_method: str = 'auto', limit: int = BRUTEFORCE_LIMIT):
    """One outcome per requested solver, sharing a single cost matrix"""
    d = build_cost_matrix(source, target)
    outcomes = []
    if solver in ('greedy', 'both'):
        outcomes.append(greedy_assignment(d))
    if solver in ('exact', 'both'):
        outcomes.append(solve_exact(d, method=exact_method, limit=limit))
    if not outcomes:
        raise ConfigurationError(f"unknown solver {solver!r}")
    return outcomes
