"""
Point models on a sphere: homogeneous and non-homogeneous BPP, the Fibonacci
lattice, and the orbit-shell process (literal and reconciled readings plus a
track-based geometric oracle).
"""
from dataclasses import dataclass
import logging
import math

import numpy as np
from scipy import stats

from models.orbit import OrbitMode, OrbitShellConfig
from models.point import TWO_PI, ModelLabel, PointConfiguration
from services.rng import as_generator
from services.sphere import shell_radius
from utils.errors import ConfigurationError
from utils.validators import validate_choice, validate_count

logger = logging.getLogger(__name__)

GOLDEN_AZIMUTH_STEP = (math.sqrt(5.0) - 1.0) * math.pi
KS_CRITICAL_COEFFICIENT = 1.63  # alpha = 0.01


def bpp_polar_from_uniform(u):
    """Inverse of F(theta) = (1 - cos theta) / 2"""
    return np.arccos(np.clip(1.0 - 2.0 * np.asarray(u, dtype=float), -1.0, 1.0))


def orbit_polar_from_uniform(u, gamma_rad):
    """Inverse of F(theta) = (cos g - cos theta) / (2 cos g) on [g, pi - g]"""
    arg = math.cos(gamma_rad) * (1.0 - 2.0 * np.asarray(u, dtype=float))
    return np.arccos(np.clip(arg, -1.0, 1.0))


def gen_bpp(n, radius_km, rng) -> PointConfiguration:
    n = validate_count(n)
    g = as_generator(rng)
    polar = bpp_polar_from_uniform(g.random(n))
    azimuth = TWO_PI * g.random(n)
    return PointConfiguration(radius_km, polar, azimuth, ModelLabel.BPP)


def gen_nbpp(n, radius_km, rng) -> PointConfiguration:
    """Polar angle uniform on [0, pi]: over-dense near the poles"""
    n = validate_count(n)
    g = as_generator(rng)
    polar = math.pi * g.random(n)
    azimuth = TWO_PI * g.random(n)
    return PointConfiguration(radius_km, polar, azimuth, ModelLabel.NBPP)


def gen_fibonacci(n, radius_km, layout='paper') -> PointConfiguration:
    """
    Deterministic Fibonacci lattice.

    layout='paper': two mirrored half-spirals,
        i <= ceil(N/2):  theta = arccos((2i - 1) / (N - 1)),           phi = (sqrt5 - 1) pi i
        i >  ceil(N/2):  theta = pi - arccos((2k - 1) / (N - 1)),      phi = (sqrt5 - 1) pi k,
                         k = i - ceil(N/2)
    layout='spiral': one continuous golden spiral,
        theta = arccos(1 - (2i - 1) / N),  phi = (sqrt5 - 1) pi i

    arccos arguments are clamped to [-1, 1]; azimuths reduced mod 2 pi.
    """
    n = validate_count(n, minimum=2)
    validate_choice(layout, ('paper', 'spiral'), 'layout')
    i = np.arange(1, n + 1, dtype=float)
    if layout == 'spiral':
        polar = np.arccos(np.clip(1.0 - (2.0 * i - 1.0) / n, -1.0, 1.0))
        azimuth = GOLDEN_AZIMUTH_STEP * i
    else:
        half = math.ceil(n / 2)
        k = np.where(i <= half, i, i - half)
        base = np.arccos(np.clip((2.0 * k - 1.0) / (n - 1), -1.0, 1.0))
        polar = np.where(i <= half, base, math.pi - base)
        azimuth = GOLDEN_AZIMUTH_STEP * k
    return PointConfiguration(radius_km, polar, azimuth, ModelLabel.FIBONACCI)


def _node_longitudes(k, n_orbits):
    return TWO_PI * k / n_orbits


def gen_orbit(cfg: OrbitShellConfig, rng) -> PointConfiguration:
    """
    Orbit-shell process, N_P = n_orbits * sats_per_orbit points.

    PaperLiteral: theta from the literal polar CDF on [g, pi - g];
        azimuth = 2 k pi / N_orb +/- arcsin(clamp(tan theta / tan g)).
    Reconciled: latitude l with sin l ~ U[-sin g, sin g];
        azimuth = Omega_k + d or Omega_k + pi - d, d = arcsin(tan l / tan g),
        which lies exactly on the plane of orbit k.
    k and the branch are drawn independently of theta.
    """
    g = as_generator(rng)
    n = cfg.n_points
    gamma = cfg.gamma_rad
    k = g.integers(1, cfg.n_orbits + 1, size=n)
    branch = g.integers(0, 2, size=n)
    nodes = _node_longitudes(k, cfg.n_orbits)
    if cfg.mode is OrbitMode.PAPER_LITERAL:
        polar = orbit_polar_from_uniform(g.random(n), gamma)
        offset = np.arcsin(np.clip(np.tan(polar) / math.tan(gamma), -1.0, 1.0))
        azimuth = nodes + np.where(branch == 0, offset, -offset)
    else:
        sin_lat = math.sin(gamma) * (2.0 * g.random(n) - 1.0)
        latitude = np.arcsin(sin_lat)
        polar = 0.5 * math.pi - latitude
        offset = np.arcsin(np.clip(np.tan(latitude) / math.tan(gamma), -1.0, 1.0))
        azimuth = nodes + np.where(branch == 0, offset, math.pi - offset)
    return PointConfiguration(cfg.radius_km, np.clip(polar, 0.0, math.pi), azimuth, cfg.mode.label)


def track_point(u, gamma_rad, node_rad):
    """
    Polar angle and azimuth of the point at argument of latitude u on the
    circle of inclination gamma with ascending node at node_rad.
    """
    u = np.asarray(u, dtype=float)
    latitude = np.arcsin(np.clip(math.sin(gamma_rad) * np.sin(u), -1.0, 1.0))
    longitude = node_rad + np.arctan2(math.cos(gamma_rad) * np.sin(u), np.cos(u))
    return 0.5 * math.pi - latitude, longitude


def gen_orbit_track_oracle(cfg: OrbitShellConfig, rng) -> PointConfiguration:
    """
    Points spread uniformly along the N_orb great circles.

    Only for plane-geometry validation: its polar marginal is arcsine
    shaped and differs from the orbit-shell process.
    """
    g = as_generator(rng)
    n = cfg.n_points
    k = g.integers(1, cfg.n_orbits + 1, size=n)
    u = TWO_PI * g.random(n)
    polar, azimuth = track_point(u, cfg.gamma_rad, _node_longitudes(k, cfg.n_orbits))
    return PointConfiguration(cfg.radius_km, polar, azimuth, ModelLabel.ORBIT_TRACK_ORACLE)


def orbital_plane_normals(cfg: OrbitShellConfig) -> np.ndarray:
    """Unit normals of the N_orb orbital planes, shape (N_orb, 3)"""
    nodes = _node_longitudes(np.arange(1, cfg.n_orbits + 1), cfg.n_orbits)
    s = math.sin(cfg.gamma_rad)
    return np.column_stack((
        np.sin(nodes) * s,
        -np.cos(nodes) * s,
        np.full(cfg.n_orbits, math.cos(cfg.gamma_rad))
    ))


def plane_residual(config: PointConfiguration, cfg: OrbitShellConfig) -> np.ndarray:
    """Per point, min over planes of |n_k . x_hat|; zero means on an orbit"""
    return np.abs(config.unit_vectors() @ orbital_plane_normals(cfg).T).min(axis=1)


@dataclass(frozen=True)
class KsResult:
    statistic: float
    critical_value: float
    n: int

    @property
    def passed(self) -> bool:
        return self.statistic < self.critical_value


def polar_uniformity_ks(config: PointConfiguration) -> KsResult:
    """KS statistic of cos(theta) against U[-1, 1], alpha = 0.01"""
    result = stats.kstest(np.cos(config.polar), 'uniform', args=(-1.0, 2.0))
    n = config.n_points
    return KsResult(
        statistic=float(result.statistic),
        critical_value=KS_CRITICAL_COEFFICIENT / math.sqrt(n),
        n=n
    )


def generate(model, n, altitude_km, rng=None, *, gamma_rad=math.radians(53.0),
             orbit_mode=OrbitMode.RECONCILED, sats_per_orbit=22, layout='paper') -> PointConfiguration:
    """Build one configuration by CLI model name"""
    radius = shell_radius(altitude_km)
    if model == 'fibonacci':
        return gen_fibonacci(n, radius, layout=layout)
    if rng is None:
        raise ConfigurationError(f"model {model!r} needs a random stream")
    if model == 'bpp':
        return gen_bpp(n, radius, rng)
    if model == 'nbpp':
        return gen_nbpp(n, radius, rng)
    if model in ('orbit', 'orbit-track-oracle'):
        cfg = OrbitShellConfig.for_points(
            n, gamma_rad, sats_per_orbit=sats_per_orbit, altitude_km=altitude_km, mode=orbit_mode
        )
        if model == 'orbit':
            return gen_orbit(cfg, rng)
        return gen_orbit_track_oracle(cfg, rng)
    raise ConfigurationError(f"unknown model {model!r}")
