from models.point import CartesianPoint, ModelLabel, PointConfiguration, SphericalPoint
from models.orbit import OrbitMode, OrbitShellConfig
from models.matching import Assignment, CostMatrix, GreedyState, MatchOutcome
from models.experiment import DistanceStats, ExperimentConfig, SweepSeries, TammesRow

__all__ = [
    'CartesianPoint', 'ModelLabel', 'PointConfiguration', 'SphericalPoint',
    'OrbitMode', 'OrbitShellConfig',
    'Assignment', 'CostMatrix', 'GreedyState', 'MatchOutcome',
    'DistanceStats', 'ExperimentConfig', 'SweepSeries', 'TammesRow'
]
