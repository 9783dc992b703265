"""
Contact / nearest-neighbor angle laws of a spherical BPP and the
Wallis-product approximation of the Tammes packing distance.
"""
import logging
import math

import numpy as np

from models.experiment import TammesRow
from models.point import EARTH_RADIUS_KM, PointConfiguration
from services.generators import gen_fibonacci
from services.sphere import min_pairwise_distance
from utils.errors import ConfigurationError, InsufficientPointsError
from utils.validators import validate_count, validate_radius

logger = logging.getLogger(__name__)


def _check_angle(theta):
    theta = np.asarray(theta, dtype=float)
    if np.any(theta < 0.0) or np.any(theta > math.pi) or not np.all(np.isfinite(theta)):
        raise ConfigurationError("angles must lie in [0, pi]")
    return theta


def _as_output(values):
    return float(values) if np.ndim(values) == 0 else values


def _survival(theta, exponent):
    # ((1 + cos theta) / 2)^m == cos(theta / 2)^(2m), exact at theta = pi
    return np.cos(0.5 * theta) ** (2 * exponent)


def contact_angle_cdf(theta, n):
    """P[contact angle <= theta] = 1 - ((1 + cos theta) / 2)^n"""
    n = validate_count(n)
    theta = _check_angle(theta)
    return _as_output(np.clip(1.0 - _survival(theta, n), 0.0, 1.0))


def contact_angle_pdf(theta, n):
    n = validate_count(n)
    theta = _check_angle(theta)
    return _as_output(0.5 * n * np.sin(theta) * np.cos(0.5 * theta) ** (2 * (n - 1)))


def nearest_neighbor_cdf(theta, n):
    """P[nearest-neighbor angle <= theta] = 1 - ((1 + cos theta) / 2)^(n - 1)"""
    n = validate_count(n, minimum=2)
    theta = _check_angle(theta)
    return _as_output(np.clip(1.0 - _survival(theta, n - 1), 0.0, 1.0))


def _log_wallis(m: int) -> float:
    """log prod_{i=1}^{m} (2i - 1) / (2i)"""
    i = np.arange(1, m + 1, dtype=float)
    return math.fsum(np.log1p(-0.5 / i))


def expected_nn_angle(n) -> float:
    """
    Mean nearest-neighbor angle of an n-point BPP:
    pi * prod_{i=1}^{n-1} (2i - 1) / (2i), evaluated in log space.
    """
    n = validate_count(n, minimum=2)
    return math.pi * math.exp(_log_wallis(n - 1))


def expected_contact_angle(n) -> float:
    """Mean contact angle for n points, pi * prod_{i=1}^{n} (2i - 1) / (2i)"""
    n = validate_count(n)
    return math.pi * math.exp(_log_wallis(n))


def tammes_approx_dopt(n, radius_km) -> float:
    """Approximate max-min chord distance for n points: 2R sin(E[theta_n])"""
    radius_km = validate_radius(radius_km)
    return 2.0 * radius_km * math.sin(expected_nn_angle(n))


def nearest_neighbor_angles(config: PointConfiguration) -> np.ndarray:
    """Per point, the central angle to its nearest fellow point"""
    if config.n_points < 2:
        raise InsufficientPointsError("nearest-neighbor angles need >= 2 points")
    xyz = config.unit_vectors()
    dots = xyz @ xyz.T
    np.fill_diagonal(dots, -np.inf)
    return np.arccos(np.clip(dots.max(axis=1), -1.0, 1.0))


def tammes_comparison(n, radius_km, layout='spiral') -> TammesRow:
    """Approximate d_opt against the measured minimum distance of a Fibonacci lattice"""
    approx = tammes_approx_dopt(n, radius_km)
    measured = min_pairwise_distance(gen_fibonacci(n, radius_km, layout=layout))
    row = TammesRow(
        n=validate_count(n, minimum=2),
        approx_dopt_km=approx,
        measured_fibonacci_dmin_km=measured,
        relative_error=abs(approx - measured) / measured,
        altitude_km=float(radius_km) - EARTH_RADIUS_KM
    )
    logger.info(
        f"TAMMES: n={n} R={radius_km:.1f}km | approx={approx:.3f}km | "
        f"measured={measured:.3f}km | rel_err={row.relative_error:.4f}"
    )
    return row
