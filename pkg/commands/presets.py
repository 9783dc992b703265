import click
from flask import Blueprint

from commands.common import emit
from middleware.error_handling import handle_domain_errors
from services.presets import all_presets_text

presets_bp = Blueprint('presets', __name__, cli_group=None)


@presets_bp.cli.command('presets')
@click.option('--out', type=click.Path(dir_okay=False), default=None)
@handle_domain_errors
def presets_command(out):
    """Print every figure and constellation preset as an editable config file"""
    emit(all_presets_text(), out)
