from dataclasses import dataclass
from enum import Enum
import math

from models.point import EARTH_RADIUS_KM, ModelLabel
from utils.errors import ConfigurationError
from utils.validators import validate_altitude, validate_count, validate_inclination


class OrbitMode(str, Enum):
    PAPER_LITERAL = 'paper'
    RECONCILED = 'reconciled'

    @property
    def label(self) -> ModelLabel:
        if self is OrbitMode.PAPER_LITERAL:
            return ModelLabel.ORBIT_PAPER
        return ModelLabel.ORBIT_RECONCILED


@dataclass(frozen=True)
class OrbitShellConfig:
    """N_orb equally spaced orbital planes at one altitude and inclination"""
    gamma_rad: float
    n_orbits: int
    sats_per_orbit: int = 22
    altitude_km: float = 550.0
    mode: OrbitMode = OrbitMode.RECONCILED

    def __post_init__(self):
        object.__setattr__(self, 'gamma_rad', validate_inclination(self.gamma_rad))
        object.__setattr__(self, 'n_orbits', validate_count(self.n_orbits, name='n_orbits'))
        object.__setattr__(
            self, 'sats_per_orbit', validate_count(self.sats_per_orbit, name='sats_per_orbit')
        )
        object.__setattr__(self, 'altitude_km', validate_altitude(self.altitude_km))
        object.__setattr__(self, 'mode', OrbitMode(self.mode))

    @classmethod
    def for_points(cls, n_points, gamma_rad, sats_per_orbit=22, altitude_km=550.0,
                   mode=OrbitMode.RECONCILED):
        """Build the shell for a total point count; the count must fill whole orbits"""
        n_points = validate_count(n_points, name='n_points')
        sats_per_orbit = validate_count(sats_per_orbit, name='sats_per_orbit')
        if n_points % sats_per_orbit:
            raise ConfigurationError(
                f"n_points={n_points} is not a multiple of sats_per_orbit={sats_per_orbit}"
            )
        return cls(
            gamma_rad=gamma_rad,
            n_orbits=n_points // sats_per_orbit,
            sats_per_orbit=sats_per_orbit,
            altitude_km=altitude_km,
            mode=mode
        )

    @property
    def n_points(self) -> int:
        return self.n_orbits * self.sats_per_orbit

    @property
    def radius_km(self) -> float:
        return EARTH_RADIUS_KM + self.altitude_km

    @property
    def gamma_deg(self) -> float:
        return math.degrees(self.gamma_rad)

    def to_dict(self):
        return {
            'gamma_deg': self.gamma_deg,
            'n_orbits': self.n_orbits,
            'sats_per_orbit': self.sats_per_orbit,
            'n_points': self.n_points,
            'altitude_km': self.altitude_km,
            'mode': self.mode.value
        }
