"""
Sphere geometry: coordinates, the chord metric and minimum pairwise distance
"""
import logging
import math

import numpy as np

from models.point import (
    EARTH_RADIUS_KM,
    CartesianPoint,
    PointConfiguration,
    SphericalPoint,
    canonical_azimuth
)
from utils.errors import ConfigurationError, InsufficientPointsError, RadiusMismatchError
from utils.validators import validate_altitude

logger = logging.getLogger(__name__)

# rows per block when scanning all pairs, keeps the scratch matrix near 8 MB
_BLOCK_ROWS = 1024


def shell_radius(altitude_km: float) -> float:
    """Radius of the shell at altitude h above the 6371 km Earth"""
    return EARTH_RADIUS_KM + validate_altitude(altitude_km)


def _half_chord_sq(polar_a, azimuth_a, polar_b, azimuth_b):
    # Half-angle form of 1 - cos(ta)cos(tb) - sin(ta)sin(tb)cos(pa - pb), divided by 2.
    # Identical points give exactly 0.
    s_polar = np.sin(0.5 * (polar_a - polar_b))
    s_azimuth = np.sin(0.5 * (azimuth_a - azimuth_b))
    return s_polar * s_polar + np.sin(polar_a) * np.sin(polar_b) * s_azimuth * s_azimuth


def chord_distance(a: SphericalPoint, b: SphericalPoint) -> float:
    """
    Straight-line distance between two points on the same shell.

    Returns R * sqrt(2 * (1 - cos ta cos tb - sin ta sin tb cos(pa - pb))),
    with the radicand floored at zero.
    """
    if a.radius_km != b.radius_km:
        raise RadiusMismatchError(
            f"points lie on different shells ({a.radius_km} km vs {b.radius_km} km)"
        )
    h = _half_chord_sq(a.polar_rad, a.azimuth_rad, b.polar_rad, b.azimuth_rad)
    d = 2.0 * a.radius_km * math.sqrt(max(float(h), 0.0))
    return min(d, 2.0 * a.radius_km)


def chord_distance_matrix(a: PointConfiguration, b: PointConfiguration) -> np.ndarray:
    """All-pairs chord distances, shape (len(a), len(b))"""
    if a.radius_km != b.radius_km:
        raise RadiusMismatchError(
            f"configurations lie on different shells ({a.radius_km} km vs {b.radius_km} km)"
        )
    h = _half_chord_sq(a.polar[:, None], a.azimuth[:, None], b.polar[None, :], b.azimuth[None, :])
    d = 2.0 * a.radius_km * np.sqrt(np.maximum(h, 0.0))
    return np.minimum(d, 2.0 * a.radius_km)


def central_angle(a: SphericalPoint, b: SphericalPoint) -> float:
    """Dome angle at the sphere center between two points"""
    ratio = chord_distance(a, b) / (2.0 * a.radius_km)
    return 2.0 * math.asin(min(1.0, ratio))


def to_cartesian(p: SphericalPoint) -> CartesianPoint:
    sin_t = math.sin(p.polar_rad)
    return CartesianPoint(
        p.radius_km * sin_t * math.cos(p.azimuth_rad),
        p.radius_km * sin_t * math.sin(p.azimuth_rad),
        p.radius_km * math.cos(p.polar_rad)
    )


def from_cartesian(c: CartesianPoint) -> SphericalPoint:
    radius = math.sqrt(c.x_km ** 2 + c.y_km ** 2 + c.z_km ** 2)
    if radius == 0.0:
        raise ConfigurationError("the origin has no spherical coordinates")
    polar = math.acos(max(-1.0, min(1.0, c.z_km / radius)))
    return SphericalPoint(radius, polar, canonical_azimuth(math.atan2(c.y_km, c.x_km)))


def min_pairwise_distance(cfg: PointConfiguration) -> float:
    """Exact minimum chord distance over all pairs i != j (O(N^2) scan)"""
    n = cfg.n_points
    if n < 2:
        raise InsufficientPointsError(f"minimum pairwise distance needs >= 2 points, got {n}")
    best = math.inf
    for start in range(0, n, _BLOCK_ROWS):
        stop = min(start + _BLOCK_ROWS, n)
        h = _half_chord_sq(
            cfg.polar[start:stop, None], cfg.azimuth[start:stop, None],
            cfg.polar[None, :], cfg.azimuth[None, :]
        )
        rows = np.arange(stop - start)
        h[rows, rows + start] = np.inf
        best = min(best, float(h.min()))
    d = 2.0 * cfg.radius_km * math.sqrt(max(best, 0.0))
    logger.debug(f"min pairwise distance over {n} points: {d:.6f} km")
    return min(d, 2.0 * cfg.radius_km)
