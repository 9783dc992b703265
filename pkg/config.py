import os

from utils.errors import ConfigurationError


class ConfigValidationError(ConfigurationError):
    """Raised when an operational setting is missing or invalid"""
    pass


class Config:
    DEBUG = False

    # Geometry and experiment defaults
    EARTH_RADIUS_KM = 6371.0
    DEFAULT_SEED = 0
    DEFAULT_ITERATIONS = 1000
    SATS_PER_ORBIT = 22
    BRUTEFORCE_LIMIT = 10
    DEFAULT_ORBIT_MODE = 'reconciled'
    DEFAULT_FIBONACCI_LAYOUT = 'paper'
    TAMMES_FIBONACCI_LAYOUT = 'spiral'

    # Execution (never changes a result)
    EXPERIMENT_WORKERS = int(os.getenv('ORBITLENS_WORKERS', 1))
    LOG_LEVEL = os.getenv('LOG_LEVEL', 'INFO').upper()
    SLOW_OPERATION_SECONDS = float(os.getenv('SLOW_OPERATION_SECONDS', 30.0))

    # Redis result cache, disabled when unset
    REDIS_URL = os.getenv('REDIS_URL', '')
    CACHE_TTL = int(os.getenv('CACHE_TTL', 86400))  # 1 day default cache

    @classmethod
    def validate(cls) -> None:
        """
        Validate operational configuration values.
        Raises ConfigValidationError listing every bad value.
        """
        errors = []

        if cls.EXPERIMENT_WORKERS < 1:
            errors.append(f"ORBITLENS_WORKERS must be >= 1, got {cls.EXPERIMENT_WORKERS}")

        if cls.LOG_LEVEL not in ('DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL'):
            errors.append(f"LOG_LEVEL {cls.LOG_LEVEL!r} is not a logging level")

        if cls.SLOW_OPERATION_SECONDS <= 0:
            errors.append("SLOW_OPERATION_SECONDS must be positive")

        if cls.CACHE_TTL < 1:
            errors.append("CACHE_TTL must be positive")

        if cls.BRUTEFORCE_LIMIT < 1:
            errors.append("BRUTEFORCE_LIMIT must be >= 1")

        if cls.DEFAULT_ORBIT_MODE not in ('paper', 'reconciled'):
            errors.append(f"DEFAULT_ORBIT_MODE {cls.DEFAULT_ORBIT_MODE!r} is not an orbit mode")

        if cls.REDIS_URL and not cls.REDIS_URL.startswith(('redis://', 'rediss://', 'unix://')):
            errors.append(f"REDIS_URL {cls.REDIS_URL!r} is not a redis URL")

        if errors:
            raise ConfigValidationError("; ".join(errors))


class DevelopmentConfig(Config):
    DEBUG = True
    LOG_LEVEL = os.getenv('LOG_LEVEL', 'DEBUG').upper()
