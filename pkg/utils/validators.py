import math
import numbers

from utils.errors import ConfigurationError, InvalidCountError, InvalidInclinationError


def validate_count(n, minimum: int = 1, name: str = 'n') -> int:
    """Validate a point count and return it as int"""
    if isinstance(n, bool) or not isinstance(n, numbers.Integral):
        raise InvalidCountError(f"{name} must be an integer, got {n!r}")
    n = int(n)
    if n < minimum:
        raise InvalidCountError(f"{name} must be >= {minimum}, got {n}")
    return n


def validate_radius(radius_km: float) -> float:
    """Validate a shell radius in kilometers"""
    radius_km = float(radius_km)
    if not math.isfinite(radius_km) or radius_km <= 0:
        raise ConfigurationError(f"radius_km must be positive and finite, got {radius_km}")
    return radius_km


def validate_altitude(altitude_km: float) -> float:
    altitude_km = float(altitude_km)
    if not math.isfinite(altitude_km) or altitude_km < 0:
        raise ConfigurationError(f"altitude_km must be >= 0, got {altitude_km}")
    return altitude_km


def validate_inclination(gamma_rad: float) -> float:
    """
    Validate an orbit inclination parameter:
    - finite
    - strictly between 0 and pi/2
    """
    gamma_rad = float(gamma_rad)
    if not math.isfinite(gamma_rad) or not 0.0 < gamma_rad < math.pi / 2:
        raise InvalidInclinationError(
            f"gamma must lie in (0, 90) degrees, got {math.degrees(gamma_rad):.6g} degrees"
        )
    return gamma_rad


def validate_choice(value: str, choices, name: str) -> str:
    if value not in choices:
        raise ConfigurationError(f"{name} must be one of {', '.join(sorted(choices))}, got {value!r}")
    return value
