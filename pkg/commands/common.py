"""
Helpers shared by the command blueprints
"""
import io
import logging

import click

from utils.errors import ConfigurationError

logger = logging.getLogger(__name__)

FORMATS = ('csv', 'json')


def render(writer, *args) -> str:
    """Run a stream writer into a string"""
    buffer = io.StringIO()
    writer(*args, buffer)
    return buffer.getvalue()


def emit(text: str, out=None):
    """Write a table to --out, or to stdout when no path is given"""
    if not text.endswith('\n'):
        text += '\n'
    if out is None:
        click.echo(text, nl=False)
        return
    try:
        with open(out, 'w', encoding='utf-8', newline='') as f:
            f.write(text)
    except OSError as e:
        raise ConfigurationError(f"cannot write {out}: {e.strerror}")
    logger.info(f"OUTPUT: wrote {out}")
