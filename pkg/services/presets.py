"""
Named experiment and constellation parameter sets
"""
import math

from models.experiment import ExperimentConfig, SweepSeries
from models.orbit import OrbitMode, OrbitShellConfig
from utils.errors import ConfigurationError

DESK_ITERATIONS = 1000

FIGURE_PRESETS = ('fig3', 'fig4', 'fig5', 'fig6')
CONSTELLATION_PRESETS = ('starlink', 'iridium', 'oneweb')

_GAMMA_53 = math.radians(53.0)
_GAMMA_87_5 = math.radians(87.5)

# (gamma_deg, n_orbits, sats_per_orbit, altitude_km)
_CONSTELLATIONS = {
    'starlink': (53.0, 72, 22, 550.0),
    'iridium': (87.5, 9, 9, 778.0),
    'oneweb': (87.5, 18, 40, 1200.0),
}


def _fig3(n_iterations, seed):
    return ExperimentConfig(
        name='fig3',
        series=(
            SweepSeries('bpp', 'orbit', tuple(range(2, 9)), (550.0, 1200.0), (_GAMMA_53,)),
        ),
        n_iterations=n_iterations,
        base_seed=seed,
        solver='both',
        sats_per_orbit=1
    )


def _fig4(n_iterations, seed):
    return ExperimentConfig(
        name='fig4',
        series=(SweepSeries(n_points=(50, 100, 500, 1000), altitudes_km=(0.0, 550.0), kind='tammes'),),
        n_iterations=n_iterations,
        base_seed=seed
    )


def _fig5(n_iterations, seed):
    lattice_sizes = (100, 400, 1000)
    shell_sizes = (88, 396, 1584)
    return ExperimentConfig(
        name='fig5',
        series=(
            SweepSeries('bpp', 'fibonacci', lattice_sizes, (0.0,)),
            SweepSeries('nbpp', 'fibonacci', lattice_sizes, (0.0,)),
            SweepSeries('bpp', 'orbit', shell_sizes, (550.0,), (_GAMMA_53,)),
            SweepSeries('orbit', 'orbit', shell_sizes, (550.0,), (_GAMMA_53,)),
        ),
        n_iterations=n_iterations,
        base_seed=seed,
        sats_per_orbit=22
    )


def _fig6(n_iterations, seed):
    # the inclination trend is defined for the literal orbit process
    return ExperimentConfig(
        name='fig6',
        series=(
            SweepSeries('bpp', 'orbit', (1584,), (550.0,),
                        (_GAMMA_87_5, math.radians(70.0), _GAMMA_53)),
            SweepSeries('bpp', 'orbit', (1584,), (1200.0, 778.0, 550.0), (_GAMMA_53,)),
            SweepSeries('bpp', 'orbit', (88, 726, 1584), (550.0,), (_GAMMA_53,)),
        ),
        n_iterations=n_iterations,
        base_seed=seed,
        orbit_mode=OrbitMode.PAPER_LITERAL,
        sats_per_orbit=22
    )


_FIGURES = {
    'fig3': _fig3,
    'fig4': _fig4,
    'fig5': _fig5,
    'fig6': _fig6,
}


def figure_preset(name: str, n_iterations: int = DESK_ITERATIONS, seed: int = 0) -> ExperimentConfig:
    try:
        builder = _FIGURES[name]
    except KeyError:
        raise ConfigurationError(
            f"unknown figure preset {name!r}; expected one of {', '.join(FIGURE_PRESETS)}"
        )
    return builder(n_iterations, seed)


def constellation_preset(name: str, mode=OrbitMode.RECONCILED) -> OrbitShellConfig:
    try:
        gamma_deg, n_orbits, sats_per_orbit, altitude_km = _CONSTELLATIONS[name]
    except KeyError:
        raise ConfigurationError(
            f"unknown constellation {name!r}; expected one of {', '.join(CONSTELLATION_PRESETS)}"
        )
    return OrbitShellConfig(
        gamma_rad=math.radians(gamma_deg),
        n_orbits=n_orbits,
        sats_per_orbit=sats_per_orbit,
        altitude_km=altitude_km,
        mode=mode
    )


def _format_value(value):
    if isinstance(value, (list, tuple)):
        return '[' + ', '.join(_format_value(v) for v in value) + ']'
    if isinstance(value, float):
        return repr(round(value, 10))
    return str(value)


def figure_preset_text(name: str) -> str:
    """An editable config file that loads back into the named figure preset"""
    cfg = figure_preset(name)
    lines = [f"# {name}"]
    for series in cfg.series:
        if series.kind == 'tammes':
            lines.append(
                f"#   tammes n_points={_format_value(series.n_points)} "
                f"altitude_km={_format_value(series.altitudes_km)}"
            )
            continue
        gammas = [math.degrees(g) for g in series.gammas_rad] if series.uses_orbit else []
        lines.append(
            f"#   {series.source_model} vs {series.target_model} "
            f"n_points={_format_value(series.n_points)} "
            f"altitude_km={_format_value(series.altitudes_km)}"
            + (f" gamma_deg={_format_value(gammas)}" if gammas else '')
        )
    lines += [
        f"preset = {name}",
        f"iterations = {cfg.n_iterations}",
        f"seed = {cfg.base_seed}",
        f"solver = {cfg.solver}",
        f"orbit_mode = {cfg.orbit_mode.value}",
        f"sats_per_orbit = {cfg.sats_per_orbit}",
        f"aggregation = {cfg.aggregation}",
    ]
    return '\n'.join(lines) + '\n'


def constellation_preset_text(name: str) -> str:
    """A BPP-vs-shell distance config for the named constellation"""
    shell = constellation_preset(name)
    return '\n'.join([
        f"# {name}: {shell.n_orbits} orbits x {shell.sats_per_orbit} satellites",
        f"name = {name}",
        "source_model = bpp",
        "target_model = orbit",
        f"n_points = [{shell.n_points}]",
        f"altitude_km = [{_format_value(shell.altitude_km)}]",
        f"gamma_deg = [{_format_value(shell.gamma_deg)}]",
        f"sats_per_orbit = {shell.sats_per_orbit}",
        f"iterations = {DESK_ITERATIONS}",
        "seed = 0",
    ]) + '\n'


def all_presets_text() -> str:
    blocks = [figure_preset_text(name) for name in FIGURE_PRESETS]
    blocks += [constellation_preset_text(name) for name in CONSTELLATION_PRESETS]
    return '\n'.join(blocks)
