from dataclasses import dataclass, field, replace
import math
from typing import Tuple

from models.orbit import OrbitMode
from utils.errors import ConfigurationError
from utils.validators import (
    validate_altitude,
    validate_choice,
    validate_count,
    validate_inclination
)

MODEL_NAMES = ('bpp', 'nbpp', 'fibonacci', 'orbit', 'orbit-track-oracle')
SOLVERS = ('greedy', 'exact', 'both')
EXACT_METHODS = ('auto', 'bruteforce', 'hungarian')
AGGREGATIONS = ('mean', 'pseudocode')
FIBONACCI_LAYOUTS = ('paper', 'spiral')
SERIES_KINDS = ('distance', 'tammes')
ORBIT_MODELS = ('orbit', 'orbit-track-oracle')

STATS_FIELDS = (
    'experiment', 'source_model', 'target_model', 'n_points', 'altitude_km',
    'gamma_deg', 'n_iterations', 'solver', 'mean_km', 'std_km', 'stderr_km', 'seed'
)
TAMMES_FIELDS = ('n', 'approx_dopt_km', 'measured_fibonacci_dmin_km', 'relative_error')
# sweeps over several altitudes need the altitude to tell rows apart
TAMMES_SWEEP_FIELDS = TAMMES_FIELDS + ('altitude_km',)


@dataclass(frozen=True)
class SweepSeries:
    """One curve of a figure: a model pair swept over N_P x h x gamma"""
    source_model: str = 'bpp'
    target_model: str = 'fibonacci'
    n_points: Tuple[int, ...] = (100,)
    altitudes_km: Tuple[float, ...] = (0.0,)
    gammas_rad: Tuple[float, ...] = (math.radians(53.0),)
    kind: str = 'distance'

    def __post_init__(self):
        validate_choice(self.kind, SERIES_KINDS, 'kind')
        if self.kind == 'distance':
            validate_choice(self.source_model, MODEL_NAMES, 'source_model')
            validate_choice(self.target_model, MODEL_NAMES, 'target_model')
        object.__setattr__(self, 'n_points', tuple(
            validate_count(n, minimum=2 if self.kind == 'tammes' else 1, name='n_points')
            for n in _as_tuple(self.n_points)
        ))
        object.__setattr__(
            self, 'altitudes_km', tuple(validate_altitude(h) for h in _as_tuple(self.altitudes_km))
        )
        object.__setattr__(
            self, 'gammas_rad', tuple(validate_inclination(g) for g in _as_tuple(self.gammas_rad))
        )
        for name in ('n_points', 'altitudes_km', 'gammas_rad'):
            if not getattr(self, name):
                raise ConfigurationError(f"{name} sweep must not be empty")

    @property
    def uses_orbit(self) -> bool:
        return self.source_model in ORBIT_MODELS or self.target_model in ORBIT_MODELS

    def sweep_points(self):
        """(n_points, altitude_km, gamma_rad) in output order"""
        gammas = self.gammas_rad if self.uses_orbit else self.gammas_rad[:1]
        for n in self.n_points:
            for h in self.altitudes_km:
                for g in gammas:
                    yield n, h, g

    def to_dict(self):
        return {
            'kind': self.kind,
            'source_model': self.source_model,
            'target_model': self.target_model,
            'n_points': list(self.n_points),
            'altitude_km': list(self.altitudes_km),
            'gamma_deg': [math.degrees(g) for g in self.gammas_rad]
        }


def _as_tuple(value):
    if isinstance(value, (list, tuple)):
        return tuple(value)
    return (value,)


@dataclass(frozen=True)
class ExperimentConfig:
    name: str
    series: Tuple[SweepSeries, ...]
    n_iterations: int = 1000
    base_seed: int = 0
    solver: str = 'greedy'
    orbit_mode: OrbitMode = OrbitMode.RECONCILED
    sats_per_orbit: int = 22
    aggregation: str = 'mean'
    fibonacci_layout: str = 'paper'
    exact_method: str = 'auto'
    bruteforce_limit: int = field(default=10, compare=False)

    def __post_init__(self):
        series = _as_tuple(self.series)
        if not series:
            raise ConfigurationError("an experiment needs at least one series")
        object.__setattr__(self, 'series', series)
        kinds = {s.kind for s in series}
        if len(kinds) > 1:
            raise ConfigurationError(f"series of one experiment must share a kind, got {sorted(kinds)}")
        object.__setattr__(self, 'n_iterations', validate_count(self.n_iterations, name='n_iterations'))
        if isinstance(self.base_seed, bool) or not 0 <= int(self.base_seed) < 2 ** 64:
            raise ConfigurationError(f"seed must be a 64-bit unsigned integer, got {self.base_seed}")
        object.__setattr__(self, 'base_seed', int(self.base_seed))
        validate_choice(self.solver, SOLVERS, 'solver')
        validate_choice(self.aggregation, AGGREGATIONS, 'aggregation')
        validate_choice(self.fibonacci_layout, FIBONACCI_LAYOUTS, 'fibonacci_layout')
        validate_choice(self.exact_method, EXACT_METHODS, 'exact_method')
        try:
            object.__setattr__(self, 'orbit_mode', OrbitMode(self.orbit_mode))
        except ValueError:
            raise ConfigurationError(f"orbit_mode must be paper or reconciled, got {self.orbit_mode!r}")
        object.__setattr__(
            self, 'sats_per_orbit', validate_count(self.sats_per_orbit, name='sats_per_orbit')
        )
        self._check_sweeps()

    def _check_sweeps(self):
        for s in self.series:
            if s.kind != 'distance':
                continue
            if self.solver != 'greedy' and self.exact_method != 'hungarian':
                too_big = [n for n in s.n_points if n > self.bruteforce_limit]
                if too_big:
                    raise ConfigurationError(
                        f"solver={self.solver} enumerates all assignments and allows "
                        f"n_points <= {self.bruteforce_limit}, got {too_big}"
                    )
            if s.uses_orbit:
                odd = [n for n in s.n_points if n % self.sats_per_orbit]
                if odd:
                    raise ConfigurationError(
                        f"n_points {odd} not divisible by sats_per_orbit={self.sats_per_orbit}"
                    )

    @property
    def kind(self) -> str:
        return self.series[0].kind

    # single-series accessors, the flat view of a one-curve experiment
    @property
    def source_model(self) -> str:
        return self.series[0].source_model

    @property
    def target_model(self) -> str:
        return self.series[0].target_model

    @property
    def n_points_sweep(self):
        return self.series[0].n_points

    @property
    def altitude_sweep_km(self):
        return self.series[0].altitudes_km

    @property
    def gamma_sweep_rad(self):
        return self.series[0].gammas_rad

    @property
    def solvers(self):
        return ('greedy', 'exact') if self.solver == 'both' else (self.solver,)

    def with_overrides(self, **changes) -> 'ExperimentConfig':
        changes = {k: v for k, v in changes.items() if v is not None}
        return replace(self, **changes) if changes else self

    def to_dict(self):
        return {
            'name': self.name,
            'series': [s.to_dict() for s in self.series],
            'n_iterations': self.n_iterations,
            'base_seed': self.base_seed,
            'solver': self.solver,
            'orbit_mode': self.orbit_mode.value,
            'sats_per_orbit': self.sats_per_orbit,
            'aggregation': self.aggregation,
            'fibonacci_layout': self.fibonacci_layout,
            'exact_method': self.exact_method
        }


@dataclass(frozen=True)
class DistanceStats:
    experiment: str
    source_model: str
    target_model: str
    n_points: int
    altitude_km: float
    gamma_deg: float
    n_iterations: int
    solver: str
    mean_km: float
    std_km: float
    stderr_km: float
    seed: int

    def to_dict(self):
        return {name: getattr(self, name) for name in STATS_FIELDS}

    @property
    def normalized_mean_km(self) -> float:
        """Mean distance per sqrt(N_P), the per-point scale of W_d"""
        return self.mean_km / math.sqrt(self.n_points)


@dataclass(frozen=True)
class TammesRow:
    n: int
    approx_dopt_km: float
    measured_fibonacci_dmin_km: float
    relative_error: float
    altitude_km: float = 0.0

    def to_dict(self):
        return {name: getattr(self, name) for name in TAMMES_SWEEP_FIELDS}
