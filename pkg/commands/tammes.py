import click
from flask import Blueprint, current_app

from commands.common import FORMATS, emit, render
from middleware.error_handling import handle_domain_errors
from models.experiment import FIBONACCI_LAYOUTS
from services.serializers import tammes_to_json, write_tammes_csv
from services.sphere import shell_radius
from services.tammes import tammes_comparison

tammes_bp = Blueprint('tammes', __name__, cli_group=None)


@tammes_bp.cli.command('tammes')
@click.option('--n', 'counts', type=int, multiple=True, required=True, help='Point count, repeatable')
@click.option('--altitude-km', type=float, default=0.0, show_default=True)
@click.option('--fibonacci-layout', type=click.Choice(FIBONACCI_LAYOUTS), default=None)
@click.option('--format', 'fmt', type=click.Choice(FORMATS), default='csv', show_default=True)
@click.option('--out', type=click.Path(dir_okay=False), default=None)
@handle_domain_errors
def tammes_command(counts, altitude_km, fibonacci_layout, fmt, out):
    """Approximate Tammes distance against the Fibonacci lattice minimum"""
    layout = fibonacci_layout or current_app.config['TAMMES_FIBONACCI_LAYOUT']
    radius = shell_radius(altitude_km)
    rows = [tammes_comparison(n, radius, layout=layout) for n in counts]
    if fmt == 'json':
        emit(tammes_to_json(rows), out)
    else:
        emit(render(write_tammes_csv, rows), out)
