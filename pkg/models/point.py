from dataclasses import dataclass
from enum import Enum
import math

import numpy as np

from utils.errors import ConfigurationError, InvalidCountError, RadiusMismatchError
from utils.validators import validate_radius

EARTH_RADIUS_KM = 6371.0
TWO_PI = 2.0 * math.pi


class ModelLabel(str, Enum):
    BPP = 'BPP'
    NBPP = 'NBPP'
    FIBONACCI = 'Fibonacci'
    ORBIT_PAPER = 'OrbitPaper'
    ORBIT_RECONCILED = 'OrbitReconciled'
    ORBIT_TRACK_ORACLE = 'OrbitTrackOracle'


def canonical_azimuth(azimuth):
    """Reduce azimuth(s) to [0, 2*pi); works on floats and arrays"""
    if np.ndim(azimuth) == 0:
        value = float(azimuth) % TWO_PI
        # a tiny negative input rounds up to exactly 2*pi
        return 0.0 if value >= TWO_PI else value
    reduced = np.mod(np.asarray(azimuth, dtype=float), TWO_PI)
    return np.where(reduced >= TWO_PI, 0.0, reduced)


@dataclass(frozen=True)
class SphericalPoint:
    radius_km: float
    polar_rad: float
    azimuth_rad: float

    def __post_init__(self):
        object.__setattr__(self, 'radius_km', validate_radius(self.radius_km))
        polar = float(self.polar_rad)
        if not 0.0 <= polar <= math.pi:
            raise ConfigurationError(f"polar_rad must lie in [0, pi], got {polar}")
        object.__setattr__(self, 'polar_rad', polar)
        object.__setattr__(self, 'azimuth_rad', canonical_azimuth(self.azimuth_rad))

    def to_dict(self):
        return {
            'radius_km': self.radius_km,
            'polar_rad': self.polar_rad,
            'azimuth_rad': self.azimuth_rad
        }


@dataclass(frozen=True)
class CartesianPoint:
    x_km: float
    y_km: float
    z_km: float

    def __post_init__(self):
        for name in ('x_km', 'y_km', 'z_km'):
            value = float(getattr(self, name))
            if not math.isfinite(value):
                raise ConfigurationError(f"{name} must be finite, got {value}")
            object.__setattr__(self, name, value)

    def as_array(self) -> np.ndarray:
        return np.array([self.x_km, self.y_km, self.z_km])

    def distance_to(self, other: 'CartesianPoint') -> float:
        """Euclidean distance, the straight-line oracle for chord distances"""
        return float(np.linalg.norm(self.as_array() - other.as_array()))


class PointConfiguration:
    """
    Ordered, immutable collection of same-radius points.

    Angles are held as read-only numpy arrays; `points` materializes
    SphericalPoint values on demand.
    """

    __slots__ = ('radius_km', 'polar', 'azimuth', 'label')

    def __init__(self, radius_km, polar, azimuth, label):
        polar = np.array(polar, dtype=float).reshape(-1)
        azimuth = canonical_azimuth(np.array(azimuth, dtype=float).reshape(-1))
        if polar.size < 1:
            raise InvalidCountError("a point configuration needs at least one point")
        if polar.shape != azimuth.shape:
            raise ConfigurationError(
                f"polar and azimuth lengths differ ({polar.size} != {azimuth.size})"
            )
        if not (np.all(np.isfinite(polar)) and np.all(np.isfinite(azimuth))):
            raise ConfigurationError("angles must be finite")
        if np.any(polar < 0.0) or np.any(polar > math.pi):
            raise ConfigurationError("polar angles must lie in [0, pi]")
        polar.setflags(write=False)
        azimuth.setflags(write=False)
        object.__setattr__(self, 'radius_km', validate_radius(radius_km))
        object.__setattr__(self, 'polar', polar)
        object.__setattr__(self, 'azimuth', azimuth)
        object.__setattr__(self, 'label', ModelLabel(label))

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    @classmethod
    def from_points(cls, points, label):
        points = list(points)
        if not points:
            raise InvalidCountError("a point configuration needs at least one point")
        radius = points[0].radius_km
        if any(p.radius_km != radius for p in points):
            raise RadiusMismatchError("all points of a configuration must share one radius")
        return cls(
            radius,
            [p.polar_rad for p in points],
            [p.azimuth_rad for p in points],
            label
        )

    @property
    def n_points(self) -> int:
        return int(self.polar.size)

    def __len__(self):
        return self.n_points

    @property
    def points(self):
        return [
            SphericalPoint(self.radius_km, float(t), float(p))
            for t, p in zip(self.polar, self.azimuth)
        ]

    def unit_vectors(self) -> np.ndarray:
        """(n, 3) array of unit position vectors"""
        sin_t = np.sin(self.polar)
        return np.column_stack((
            sin_t * np.cos(self.azimuth),
            sin_t * np.sin(self.azimuth),
            np.cos(self.polar)
        ))

    def __eq__(self, other):
        if not isinstance(other, PointConfiguration):
            return NotImplemented
        return (
            self.radius_km == other.radius_km
            and self.label == other.label
            and np.array_equal(self.polar, other.polar)
            and np.array_equal(self.azimuth, other.azimuth)
        )

    __hash__ = None

    def __repr__(self):
        return (
            f"PointConfiguration(label={self.label.value}, n_points={self.n_points}, "
            f"radius_km={self.radius_km})"
        )

    def to_records(self):
        return [
            {
                'index': i,
                'radius_km': self.radius_km,
                'polar_rad': float(t),
                'azimuth_rad': float(p)
            }
            for i, (t, p) in enumerate(zip(self.polar, self.azimuth))
        ]
