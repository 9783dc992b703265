"""
Domain exceptions shared by services and commands
"""


class OrbitLensError(Exception):
    """Base class for every error raised by the library"""
    exit_code = 3

    def __init__(self, message, exit_code=None, payload=None):
        super().__init__(message)
        self.message = message
        if exit_code is not None:
            self.exit_code = exit_code
        self.payload = payload

    def to_dict(self):
        rv = dict(self.payload or ())
        rv['error'] = self.message
        rv['type'] = type(self).__name__
        return rv


class ConfigurationError(OrbitLensError):
    """Invalid input, configuration or flag combination"""
    exit_code = 2


class InvalidCountError(ConfigurationError):
    pass


class InvalidInclinationError(ConfigurationError):
    pass


class RadiusMismatchError(ConfigurationError):
    pass


class CardinalityError(ConfigurationError):
    pass


class ConfigParseError(ConfigurationError):
    """Malformed config file statement"""

    def __init__(self, message, line=None):
        super().__init__(
            f"line {line}: {message}" if line is not None else message,
            payload={'line': line},
        )
        self.line = line


class NumericalError(OrbitLensError):
    """A solver or numerical routine could not produce a result"""
    exit_code = 3


class SizeLimitError(NumericalError):
    pass


class InvalidCostError(NumericalError):
    pass


class InsufficientPointsError(NumericalError):
    pass


class InvariantViolationError(NumericalError):
    pass
