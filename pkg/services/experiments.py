"""
Seeded Monte Carlo harness.

Iteration i of every sweep point draws from RandomStream(base_seed).substream(i),
so all sweep points of an experiment see the same random numbers and the
tables are a pure function of (config, base_seed).
"""
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
import logging
import math
from typing import Tuple

from models.experiment import DistanceStats, ExperimentConfig, TammesRow
from services.generators import generate
from services.matching import build_cost_matrix, greedy_assignment, solve_exact
from services.rng import SOURCE_STREAM, TARGET_STREAM, RandomStream
from services.sphere import shell_radius
from services.tammes import tammes_comparison
from utils.errors import ConfigurationError
from utils.monitoring import performance_logging

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SweepPoint:
    source_model: str
    target_model: str
    n_points: int
    altitude_km: float
    gamma_rad: float


@dataclass(frozen=True)
class ExperimentResult:
    config: ExperimentConfig
    stats: Tuple[DistanceStats, ...] = field(default=())
    tammes: Tuple[TammesRow, ...] = field(default=())

    @property
    def kind(self) -> str:
        return self.config.kind

    def rows(self):
        return self.stats if self.kind == 'distance' else self.tammes


def _draw(cfg: ExperimentConfig, point: SweepPoint, model: str, stream: RandomStream):
    return generate(
        model,
        point.n_points,
        point.altitude_km,
        stream,
        gamma_rad=point.gamma_rad,
        orbit_mode=cfg.orbit_mode,
        sats_per_orbit=cfg.sats_per_orbit,
        layout=cfg.fibonacci_layout
    )


def iteration_distances(cfg: ExperimentConfig, point: SweepPoint, iteration: int):
    """W_d of one iteration, one value per solver in cfg.solvers order"""
    stream = RandomStream(cfg.base_seed).substream(iteration)
    source = _draw(cfg, point, point.source_model, stream.substream(SOURCE_STREAM))
    target = _draw(cfg, point, point.target_model, stream.substream(TARGET_STREAM))
    d = build_cost_matrix(source, target)
    values = []
    for solver in cfg.solvers:
        if solver == 'greedy':
            values.append(greedy_assignment(d).distance_km)
        else:
            values.append(
                solve_exact(d, method=cfg.exact_method, limit=cfg.bruteforce_limit).distance_km
            )
    return tuple(values)


def aggregate(values, aggregation='mean'):
    """
    (reported, std, stderr) of per-iteration distances.

    'mean' reports the arithmetic mean; 'pseudocode' reports
    sqrt(sum W_d^2) / N_NOI. std is the sample deviation of W_d either way.
    """
    n = len(values)
    if n == 0:
        raise ConfigurationError("cannot aggregate zero iterations")
    mean = math.fsum(values) / n
    if aggregation == 'pseudocode':
        reported = math.sqrt(math.fsum(v * v for v in values)) / n
    elif aggregation == 'mean':
        reported = mean
    else:
        raise ConfigurationError(f"unknown aggregation {aggregation!r}")
    variance = math.fsum((v - mean) ** 2 for v in values) / (n - 1) if n > 1 else 0.0
    std = math.sqrt(variance)
    return reported, std, std / math.sqrt(n)


def _run_iterations(cfg: ExperimentConfig, point: SweepPoint, workers: int):
    indices = range(cfg.n_iterations)
    if workers <= 1:
        return [iteration_distances(cfg, point, i) for i in indices]
    with ThreadPoolExecutor(max_workers=workers) as executor:
        # map keeps iteration order
        return list(executor.map(lambda i: iteration_distances(cfg, point, i), indices))


@performance_logging('sweep_point')
def run_sweep_point(cfg: ExperimentConfig, point: SweepPoint, workers: int = 1):
    per_iteration = _run_iterations(cfg, point, workers)
    rows = []
    for column, solver in enumerate(cfg.solvers):
        values = [v[column] for v in per_iteration]
        reported, std, stderr = aggregate(values, cfg.aggregation)
        rows.append(DistanceStats(
            experiment=cfg.name,
            source_model=point.source_model,
            target_model=point.target_model,
            n_points=point.n_points,
            altitude_km=point.altitude_km,
            gamma_deg=math.degrees(point.gamma_rad),
            n_iterations=cfg.n_iterations,
            solver=solver,
            mean_km=reported,
            std_km=std,
            stderr_km=stderr,
            seed=cfg.base_seed
        ))
        logger.info(
            f"SWEEP: {cfg.name} {point.source_model}->{point.target_model} "
            f"n={point.n_points} h={point.altitude_km}km "
            f"gamma={math.degrees(point.gamma_rad):.2f}deg {solver} | "
            f"mean={reported:.3f}km stderr={stderr:.3f}km"
        )
    return rows


def sweep_points(cfg: ExperimentConfig):
    for series in cfg.series:
        if series.kind != 'distance':
            continue
        for n, h, g in series.sweep_points():
            yield SweepPoint(series.source_model, series.target_model, n, h, g)


def run_distance_experiment(cfg: ExperimentConfig, workers: int = 1):
    """One DistanceStats row per sweep point and solver, in sweep order"""
    rows = []
    for point in sweep_points(cfg):
        rows.extend(run_sweep_point(cfg, point, workers=workers))
    return rows


def run_tammes_sweep(cfg: ExperimentConfig, layout='spiral'):
    rows = []
    for series in cfg.series:
        if series.kind != 'tammes':
            continue
        for n in series.n_points:
            for h in series.altitudes_km:
                rows.append(tammes_comparison(n, shell_radius(h), layout=layout))
    return rows


def run_experiment(cfg: ExperimentConfig, workers: int = 1, tammes_layout='spiral') -> ExperimentResult:
    logger.info(
        f"EXPERIMENT: {cfg.name} | series={len(cfg.series)} | "
        f"iterations={cfg.n_iterations} | seed={cfg.base_seed} | workers={workers}"
    )
    if cfg.kind == 'tammes':
        return ExperimentResult(cfg, tammes=tuple(run_tammes_sweep(cfg, layout=tammes_layout)))
    return ExperimentResult(cfg, stats=tuple(run_distance_experiment(cfg, workers=workers)))
