"""
Turn domain exceptions raised inside a command into click exits
"""
from functools import wraps
import logging

import click

from utils.errors import OrbitLensError
from utils.monitoring import error_tracker

logger = logging.getLogger(__name__)

NUMERICAL_EXIT_CODE = 3


class CommandError(click.ClickException):
    """Single-line diagnostic on stderr with a chosen exit code"""

    def __init__(self, message, exit_code=NUMERICAL_EXIT_CODE):
        super().__init__(' '.join(str(message).split()))
        self.exit_code = exit_code


def handle_domain_errors(f):
    """
    Decorator for command callbacks.

    OrbitLensError -> its exit code (2 configuration, 3 numerical);
    anything else is logged with traceback and exits with 3.
    """
    @wraps(f)
    def decorated_function(*args, **kwargs):
        try:
            return f(*args, **kwargs)
        except click.ClickException:
            raise
        except OrbitLensError as e:
            logger.debug(f"{type(e).__name__}: {e.message}")
            raise CommandError(e.message, exit_code=e.exit_code)
        except Exception as e:
            logger.error(f"Unexpected error: {str(e)}", exc_info=True)
            error_tracker.log_error(
                error_type=type(e).__name__,
                message=str(e),
                context={'command': f.__name__}
            )
            raise CommandError(f"unexpected {type(e).__name__}: {e}")

    return decorated_function
