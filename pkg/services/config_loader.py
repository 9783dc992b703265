"""
Experiment config files.

Flat `key = value` statements with `#` comments. Values are JSON scalars,
JSON lists or bare words:

    preset = fig5
    iterations = 2000
    n_points = [100, 400, 1000]
"""
from dataclasses import replace
import io
import json
import logging
import math

from dotenv.parser import parse_stream

from models.experiment import ExperimentConfig, SweepSeries
from services.presets import figure_preset
from utils.errors import ConfigParseError, ConfigurationError

logger = logging.getLogger(__name__)

# config key -> ExperimentConfig field
SHARED_KEYS = {
    'name': 'name',
    'iterations': 'n_iterations',
    'seed': 'base_seed',
    'solver': 'solver',
    'orbit_mode': 'orbit_mode',
    'sats_per_orbit': 'sats_per_orbit',
    'aggregation': 'aggregation',
    'fibonacci_layout': 'fibonacci_layout',
    'exact_method': 'exact_method',
}
SERIES_KEYS = ('source_model', 'target_model', 'n_points', 'altitude_km', 'gamma_deg', 'gamma_rad')
KNOWN_KEYS = ('preset',) + tuple(SHARED_KEYS) + SERIES_KEYS


def _parse_value(raw: str):
    try:
        return json.loads(raw)
    except ValueError:
        return raw


def parse_config_text(text: str) -> dict:
    """key -> value for every statement, rejecting malformed, unknown and repeated keys"""
    values = {}
    for binding in parse_stream(io.StringIO(text)):
        original = binding.original.string
        # the parser marks a statement before skipping the blank lines above it
        skipped = original[:len(original) - len(original.lstrip())]
        line = binding.original.line + skipped.count('\n')
        if binding.error:
            raise ConfigParseError(f"cannot parse {original.strip()!r}", line=line)
        if binding.key is None:
            continue
        if not binding.value:
            raise ConfigParseError(f"key {binding.key!r} has no value", line=line)
        if binding.key not in KNOWN_KEYS:
            raise ConfigParseError(f"unknown key {binding.key!r}", line=line)
        if binding.key in values:
            raise ConfigParseError(f"key {binding.key!r} is set twice", line=line)
        values[binding.key] = _parse_value(binding.value)
    return values


def _as_list(key, value):
    items = value if isinstance(value, list) else [value]
    for item in items:
        if isinstance(item, bool) or not isinstance(item, (int, float)):
            raise ConfigurationError(f"{key}: expected numbers, got {item!r}")
    return tuple(items)


def _series_changes(values: dict) -> dict:
    if 'gamma_deg' in values and 'gamma_rad' in values:
        raise ConfigurationError("gamma_deg: conflicts with gamma_rad, set only one")
    changes = {}
    for key in ('source_model', 'target_model'):
        if key in values:
            changes[key] = str(values[key])
    if 'n_points' in values:
        changes['n_points'] = _as_list('n_points', values['n_points'])
    if 'altitude_km' in values:
        changes['altitudes_km'] = _as_list('altitude_km', values['altitude_km'])
    if 'gamma_deg' in values:
        changes['gammas_rad'] = tuple(math.radians(g) for g in _as_list('gamma_deg', values['gamma_deg']))
    if 'gamma_rad' in values:
        changes['gammas_rad'] = _as_list('gamma_rad', values['gamma_rad'])
    return changes


def _shared_changes(values: dict) -> dict:
    changes = {}
    for key, field_name in SHARED_KEYS.items():
        if key in values:
            value = values[key]
            changes[field_name] = str(value) if key in ('name', 'solver', 'orbit_mode', 'aggregation',
                                                         'fibonacci_layout', 'exact_method') else value
    return changes


def config_from_values(values: dict, overrides: dict = None) -> ExperimentConfig:
    """
    Build and validate an ExperimentConfig.

    With `preset`, the figure preset is the base and series keys apply to
    each of its series; without it, the keys describe a single series.
    `overrides` (command-line flags) win over file values.
    """
    series_changes = _series_changes(values)
    shared = _shared_changes(values)
    shared.update({k: v for k, v in (overrides or {}).items() if v is not None})

    if 'preset' in values:
        base = figure_preset(str(values['preset']))
        series = tuple(replace(s, **series_changes) for s in base.series)
        if series_changes:
            shared.setdefault('series', series)
        return base.with_overrides(**shared)

    return ExperimentConfig(
        name=shared.pop('name', 'custom'),
        series=(SweepSeries(**series_changes),),
        **shared
    )


def load_config_text(text: str, overrides: dict = None) -> ExperimentConfig:
    return config_from_values(parse_config_text(text), overrides)


def load_config(path, overrides: dict = None) -> ExperimentConfig:
    try:
        with open(path, encoding='utf-8') as f:
            text = f.read()
    except OSError as e:
        raise ConfigurationError(f"cannot read config file {path}: {e.strerror}")
    cfg = load_config_text(text, overrides)
    logger.info(f"CONFIG: loaded {path} | experiment={cfg.name} | series={len(cfg.series)}")
    return cfg
