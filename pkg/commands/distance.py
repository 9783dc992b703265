import json
import logging
import math

import click
from flask import Blueprint, current_app

from commands.common import emit
from middleware.error_handling import handle_domain_errors
from models.experiment import EXACT_METHODS, MODEL_NAMES, SOLVERS
from models.orbit import OrbitMode
from services.generators import generate
from services.matching import match
from services.rng import SOURCE_STREAM, TARGET_STREAM, RandomStream

logger = logging.getLogger(__name__)

distance_bp = Blueprint('distance', __name__, cli_group=None)


@distance_bp.cli.command('distance')
@click.option('--source', type=click.Choice(MODEL_NAMES), required=True)
@click.option('--target', type=click.Choice(MODEL_NAMES), required=True)
@click.option('--n', 'n', type=int, required=True, help='Points per configuration')
@click.option('--altitude-km', type=float, default=0.0, show_default=True)
@click.option('--gamma-deg', type=float, default=53.0, show_default=True)
@click.option('--solver', type=click.Choice(SOLVERS), default='greedy', show_default=True)
@click.option('--seed', type=int, default=None)
@click.option('--orbit-mode', type=click.Choice([m.value for m in OrbitMode]), default=None)
@click.option('--sats-per-orbit', type=int, default=None)
@click.option('--exact-method', type=click.Choice(EXACT_METHODS), default='auto', show_default=True)
@click.option('--out', type=click.Path(dir_okay=False), default=None)
@handle_domain_errors
def distance_command(source, target, n, altitude_km, gamma_deg, solver, seed, orbit_mode,
                     sats_per_orbit, exact_method, out):
    """Distance between one source and one target draw"""
    cfg = current_app.config
    seed = cfg['DEFAULT_SEED'] if seed is None else seed
    stream = RandomStream(seed)
    options = dict(
        gamma_rad=math.radians(gamma_deg),
        orbit_mode=OrbitMode(orbit_mode or cfg['DEFAULT_ORBIT_MODE']),
        sats_per_orbit=cfg['SATS_PER_ORBIT'] if sats_per_orbit is None else sats_per_orbit,
        layout=cfg['DEFAULT_FIBONACCI_LAYOUT']
    )
    source_cfg = generate(source, n, altitude_km, stream.substream(SOURCE_STREAM), **options)
    target_cfg = generate(target, n, altitude_km, stream.substream(TARGET_STREAM), **options)

    outcomes = match(source_cfg, target_cfg, solver=solver, exact_method=exact_method,
                     limit=cfg['BRUTEFORCE_LIMIT'])
    records = []
    for outcome in outcomes:
        logger.info(
            f"DISTANCE: {source}->{target} n={n} {outcome.solver} | "
            f"W_d={outcome.distance_km:.3f}km"
        )
        record = {
            'source_model': source,
            'target_model': target,
            'altitude_km': altitude_km,
            'seed': seed,
        }
        record.update(outcome.to_dict())
        records.append(record)
    # one solver prints a single object, `both` a list in solver order
    emit(json.dumps(records if solver == 'both' else records[0], indent=2), out)
