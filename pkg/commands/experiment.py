from functools import partial
import logging

import click
from flask import Blueprint, current_app

from commands.common import FORMATS, emit, render
from extensions import experiment_cache_key, load_rows, store_rows
from middleware.error_handling import handle_domain_errors
from models.experiment import AGGREGATIONS, SOLVERS, TAMMES_SWEEP_FIELDS, DistanceStats, TammesRow
from services.config_loader import config_from_values, load_config
from services.experiments import ExperimentResult, run_experiment
from services.presets import FIGURE_PRESETS
from services.serializers import (
    stats_to_json,
    tammes_to_json,
    write_stats_csv,
    write_tammes_csv
)
from utils.errors import ConfigurationError

logger = logging.getLogger(__name__)

experiment_bp = Blueprint('experiment', __name__, cli_group=None)


def _cache_key(cfg, tammes_layout):
    payload = cfg.to_dict()
    payload['bruteforce_limit'] = cfg.bruteforce_limit
    payload['tammes_layout'] = tammes_layout
    return experiment_cache_key(payload)


def _cached_result(cfg, rows):
    if cfg.kind == 'tammes':
        return ExperimentResult(cfg, tammes=tuple(TammesRow(**r) for r in rows))
    return ExperimentResult(cfg, stats=tuple(DistanceStats(**r) for r in rows))


@experiment_bp.cli.command('experiment')
@click.option('--preset', type=click.Choice(FIGURE_PRESETS), default=None)
@click.option('--config', 'config_path', type=click.Path(dir_okay=False), default=None,
              help='Experiment config file')
@click.option('--iterations', type=int, default=None, help='Monte Carlo iterations per sweep point')
@click.option('--seed', type=int, default=None)
@click.option('--solver', type=click.Choice(SOLVERS), default=None)
@click.option('--aggregation', type=click.Choice(AGGREGATIONS), default=None)
@click.option('--workers', type=int, default=None, help='Worker threads (results do not depend on it)')
@click.option('--format', 'fmt', type=click.Choice(FORMATS), default='csv', show_default=True)
@click.option('--out', type=click.Path(dir_okay=False), default=None)
@handle_domain_errors
def experiment_command(preset, config_path, iterations, seed, solver, aggregation, workers, fmt, out):
    """Run a Monte Carlo experiment from a preset or a config file"""
    app_cfg = current_app.config
    if (preset is None) == (config_path is None):
        raise ConfigurationError("give exactly one of --preset or --config")
    workers = app_cfg['EXPERIMENT_WORKERS'] if workers is None else workers
    if workers < 1:
        raise ConfigurationError(f"--workers must be >= 1, got {workers}")

    overrides = {
        'n_iterations': iterations,
        'base_seed': seed,
        'solver': solver,
        'aggregation': aggregation,
        'bruteforce_limit': app_cfg['BRUTEFORCE_LIMIT'],
    }
    if preset is not None:
        cfg = config_from_values({'preset': preset}, overrides)
    else:
        cfg = load_config(config_path, overrides)

    tammes_layout = app_cfg['TAMMES_FIBONACCI_LAYOUT']
    key = _cache_key(cfg, tammes_layout)
    cached = load_rows(key)
    if cached is not None:
        logger.info(f"CACHE HIT: experiment {cfg.name}")
        result = _cached_result(cfg, cached)
    else:
        result = run_experiment(cfg, workers=workers, tammes_layout=tammes_layout)
        store_rows(key, [r.to_dict() for r in result.rows()], ttl=app_cfg['CACHE_TTL'])

    if result.kind == 'tammes':
        if fmt == 'json':
            text = tammes_to_json(result.tammes, fields=TAMMES_SWEEP_FIELDS)
        else:
            text = render(partial(write_tammes_csv, fields=TAMMES_SWEEP_FIELDS), result.tammes)
    else:
        text = stats_to_json(result.stats) if fmt == 'json' else render(write_stats_csv, result.stats)
    emit(text, out)
