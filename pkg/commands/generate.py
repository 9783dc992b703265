import logging
import math

import click
from flask import Blueprint, current_app

from commands.common import FORMATS, emit, render
from middleware.error_handling import handle_domain_errors
from models.experiment import FIBONACCI_LAYOUTS, MODEL_NAMES
from models.orbit import OrbitMode
from services.generators import generate
from services.rng import RandomStream
from services.serializers import points_to_json, write_points_csv

logger = logging.getLogger(__name__)

generate_bp = Blueprint('generate', __name__, cli_group=None)


@generate_bp.cli.command('generate')
@click.option('--model', type=click.Choice(MODEL_NAMES), required=True, help='Point model')
@click.option('--n', 'n', type=int, required=True, help='Number of points')
@click.option('--altitude-km', type=float, default=0.0, show_default=True)
@click.option('--seed', type=int, default=None, help='Seed of the random stream')
@click.option('--format', 'fmt', type=click.Choice(FORMATS), default='csv', show_default=True)
@click.option('--out', type=click.Path(dir_okay=False), default=None, help='Output file (default stdout)')
@click.option('--orbit-mode', type=click.Choice([m.value for m in OrbitMode]), default=None)
@click.option('--gamma-deg', type=float, default=53.0, show_default=True, help='Orbit inclination')
@click.option('--sats-per-orbit', type=int, default=None)
@click.option('--fibonacci-layout', type=click.Choice(FIBONACCI_LAYOUTS), default=None)
@handle_domain_errors
def generate_command(model, n, altitude_km, seed, fmt, out, orbit_mode, gamma_deg,
                     sats_per_orbit, fibonacci_layout):
    """Generate one point configuration"""
    cfg = current_app.config
    seed = cfg['DEFAULT_SEED'] if seed is None else seed
    config = generate(
        model,
        n,
        altitude_km,
        RandomStream(seed),
        gamma_rad=math.radians(gamma_deg),
        orbit_mode=OrbitMode(orbit_mode or cfg['DEFAULT_ORBIT_MODE']),
        sats_per_orbit=cfg['SATS_PER_ORBIT'] if sats_per_orbit is None else sats_per_orbit,
        layout=fibonacci_layout or cfg['DEFAULT_FIBONACCI_LAYOUT']
    )
    logger.info(
        f"GENERATE: {config.label.value} n={config.n_points} R={config.radius_km}km seed={seed}"
    )
    if fmt == 'json':
        emit(points_to_json(config), out)
    else:
        emit(render(write_points_csv, config), out)
