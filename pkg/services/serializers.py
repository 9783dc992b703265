"""
CSV and JSON tables for point configurations, distance statistics and
Tammes rows. Floats are written with repr precision so every table reads
back without loss.
"""
import csv
import json

from models.experiment import STATS_FIELDS, TAMMES_FIELDS, TAMMES_SWEEP_FIELDS, DistanceStats, TammesRow
from models.point import ModelLabel, PointConfiguration
from utils.errors import ConfigurationError

POINT_FIELDS = ('index', 'radius_km', 'polar_rad', 'azimuth_rad')

_STATS_TYPES = {
    'n_points': int,
    'altitude_km': float,
    'gamma_deg': float,
    'n_iterations': int,
    'mean_km': float,
    'std_km': float,
    'stderr_km': float,
    'seed': int,
}
_TAMMES_TYPES = {
    'n': int,
    'approx_dopt_km': float,
    'measured_fibonacci_dmin_km': float,
    'relative_error': float,
    'altitude_km': float,
}


def _write_rows(stream, fields, records):
    writer = csv.DictWriter(stream, fieldnames=fields, lineterminator='\n')
    writer.writeheader()
    writer.writerows(records)


def _read_rows(stream, fields, types):
    reader = csv.DictReader(stream)
    if tuple(reader.fieldnames or ()) != tuple(fields):
        raise ConfigurationError(
            f"unexpected CSV header {reader.fieldnames}, expected {list(fields)}"
        )
    rows = []
    for line_no, row in enumerate(reader, start=2):
        try:
            rows.append({k: types.get(k, str)(v) for k, v in row.items()})
        except (TypeError, ValueError):
            raise ConfigurationError(f"line {line_no}: malformed row {row}")
    return rows


# Point configurations

def write_points_csv(config: PointConfiguration, stream):
    _write_rows(stream, POINT_FIELDS, config.to_records())


def read_points_csv(stream, label=ModelLabel.BPP) -> PointConfiguration:
    rows = _read_rows(stream, POINT_FIELDS, {'index': int, 'radius_km': float,
                                            'polar_rad': float, 'azimuth_rad': float})
    if not rows:
        raise ConfigurationError("points CSV has no rows")
    if [r['index'] for r in rows] != list(range(len(rows))):
        raise ConfigurationError("points CSV indices must run 0..n-1 in order")
    radii = {r['radius_km'] for r in rows}
    if len(radii) != 1:
        raise ConfigurationError("points CSV mixes several radii")
    return PointConfiguration(
        radii.pop(),
        [r['polar_rad'] for r in rows],
        [r['azimuth_rad'] for r in rows],
        label
    )


def points_to_json(config: PointConfiguration) -> str:
    """A JSON array of point records, the CSV columns as keys"""
    return json.dumps(config.to_records(), indent=2)


def points_from_json(text: str, label=ModelLabel.BPP) -> PointConfiguration:
    try:
        data = json.loads(text)
    except ValueError as e:
        raise ConfigurationError(f"points JSON is not valid JSON: {e}")
    if not isinstance(data, list) or not data:
        raise ConfigurationError("points JSON must be a non-empty array of records")
    try:
        points = sorted(data, key=lambda p: p['index'])
        radii = {float(p['radius_km']) for p in points}
        polar = [float(p['polar_rad']) for p in points]
        azimuth = [float(p['azimuth_rad']) for p in points]
    except (KeyError, TypeError, ValueError) as e:
        raise ConfigurationError(f"malformed point record: {e}")
    if [p['index'] for p in points] != list(range(len(points))):
        raise ConfigurationError("points JSON indices must run 0..n-1")
    if len(radii) != 1:
        raise ConfigurationError("points JSON mixes several radii")
    return PointConfiguration(radii.pop(), polar, azimuth, label)


# Distance statistics

def write_stats_csv(rows, stream):
    _write_rows(stream, STATS_FIELDS, [r.to_dict() for r in rows])


def read_stats_csv(stream):
    return [DistanceStats(**row) for row in _read_rows(stream, STATS_FIELDS, _STATS_TYPES)]


def stats_to_json(rows) -> str:
    return json.dumps([r.to_dict() for r in rows], indent=2)


# Tammes rows
#
# The `tammes` command table has TAMMES_FIELDS; experiment sweeps add the
# altitude column (TAMMES_SWEEP_FIELDS). Rows read without it sit at h = 0.

def _tammes_records(rows, fields):
    return [{name: r.to_dict()[name] for name in fields} for r in rows]


def write_tammes_csv(rows, stream, fields=TAMMES_FIELDS):
    _write_rows(stream, fields, _tammes_records(rows, fields))


def read_tammes_csv(stream, fields=TAMMES_FIELDS):
    return [TammesRow(**row) for row in _read_rows(stream, fields, _TAMMES_TYPES)]


def tammes_to_json(rows, fields=TAMMES_FIELDS) -> str:
    return json.dumps(_tammes_records(rows, fields), indent=2)
