"""
Pytest configuration and fixtures
"""
import math

import numpy as np
import pytest

from app import create_app
from config import Config
from models.point import ModelLabel, PointConfiguration


class TestConfig(Config):
    """Test configuration"""
    TESTING = True
    DEBUG = False
    REDIS_URL = ''  # no result cache in tests
    LOG_LEVEL = 'WARNING'
    EXPERIMENT_WORKERS = 1


@pytest.fixture(scope='session')
def app():
    """Create application for testing"""
    app = create_app(TestConfig)
    yield app


@pytest.fixture(scope='function')
def runner(app):
    """CLI runner for the registered commands"""
    return app.test_cli_runner()


@pytest.fixture
def equator_triangle():
    """Three points 120 degrees apart on the unit equator"""
    return PointConfiguration(
        1.0,
        [math.pi / 2] * 3,
        [0.0, 2 * math.pi / 3, 4 * math.pi / 3],
        ModelLabel.BPP
    )


@pytest.fixture
def random_cost_matrices():
    """Factory of seeded random spherical cost matrices"""
    from services.generators import gen_bpp
    from services.matching import build_cost_matrix
    from services.rng import RandomStream

    def make(n, count, seed=2024):
        base = RandomStream(seed)
        for i in range(count):
            stream = base.substream(i)
            a = gen_bpp(n, 1.0, stream.substream(0))
            b = gen_bpp(n, 1.0, stream.substream(1))
            yield build_cost_matrix(a, b)

    return make


@pytest.fixture
def rng():
    return np.random.Generator(np.random.Philox(12345))
