"""
Test application setup, monitoring, error mapping and the result cache
"""
import json

import click
import pytest

import extensions
from config import Config, ConfigValidationError
from middleware.error_handling import CommandError, handle_domain_errors
from utils.errors import ConfigParseError, SizeLimitError
from utils.monitoring import error_tracker, performance_logging, performance_monitor


class TestConfigValidation:
    """Test Config.validate"""

    def test_defaults_valid(self):
        """Test the shipped defaults"""
        Config.validate()

    def test_collects_every_error(self):
        """Test one error lists all bad values"""
        class Broken(Config):
            EXPERIMENT_WORKERS = 0
            LOG_LEVEL = 'LOUD'
            REDIS_URL = 'http://localhost'

        with pytest.raises(ConfigValidationError) as exc:
            Broken.validate()
        assert 'ORBITLENS_WORKERS' in exc.value.message
        assert 'LOG_LEVEL' in exc.value.message
        assert 'REDIS_URL' in exc.value.message
        assert exc.value.exit_code == 2

    def test_app_registers_commands(self, app):
        """Test every command is on the app CLI"""
        assert {'generate', 'distance', 'tammes', 'experiment', 'presets'} <= set(app.cli.commands)
        assert app.config['TESTING']


class TestMonitoring:
    """Test the timing decorator"""

    def test_records_success_and_failure(self):
        """Test counts for passing and failing calls"""
        performance_monitor.reset()

        @performance_logging('unit_op')
        def op(fail):
            if fail:
                raise ValueError('boom')
            return 1

        assert op(False) == 1
        with pytest.raises(ValueError):
            op(True)
        stats = performance_monitor.get_stats()
        assert stats['total_operations'] == 2
        assert stats['failed_operations'] == 1
        assert stats['operation_stats']['unit_op']['count'] == 2

    def test_slow_threshold(self):
        """Test durations over the threshold count as slow"""
        performance_monitor.reset()
        performance_monitor.record_operation('sweep_point', performance_monitor.slow_seconds + 1)
        assert performance_monitor.get_stats()['slow_operations'] == 1


class TestErrorMapping:
    """Test handle_domain_errors"""

    def test_configuration_error(self):
        """Test exit code 2 and a single-line message"""
        @handle_domain_errors
        def cmd():
            raise ConfigParseError("unknown key\n  'warp'", line=4)

        with pytest.raises(CommandError) as exc:
            cmd()
        assert exc.value.exit_code == 2
        assert exc.value.message == "line 4: unknown key 'warp'"

    def test_numerical_error(self):
        """Test exit code 3"""
        @handle_domain_errors
        def cmd():
            raise SizeLimitError("n = 12 exceeds 10")

        with pytest.raises(CommandError) as exc:
            cmd()
        assert exc.value.exit_code == 3

    def test_unexpected_error_tracked(self):
        """Test unknown exceptions exit with 3 and are tracked"""
        before = error_tracker.get_error_stats()['total_errors']

        @handle_domain_errors
        def cmd():
            raise ZeroDivisionError('division by zero')

        with pytest.raises(CommandError) as exc:
            cmd()
        assert exc.value.exit_code == 3
        assert error_tracker.get_error_stats()['by_type']['ZeroDivisionError'] >= 1
        assert error_tracker.get_error_stats()['total_errors'] == min(before + 1, 100)

    def test_click_errors_pass_through(self):
        """Test usage errors are left to click"""
        @handle_domain_errors
        def cmd():
            raise click.UsageError('bad flag')

        with pytest.raises(click.UsageError):
            cmd()


class FakeRedis:
    def __init__(self):
        self.store = {}

    def setex(self, key, expire, value):
        self.store[key] = value

    def get(self, key):
        return self.store.get(key)


class TestCache:
    """Test the optional redis result cache"""

    def test_disabled_without_client(self, monkeypatch):
        """Test no client means no cache"""
        monkeypatch.setattr(extensions, 'redis_client', None)
        assert extensions.store_rows('k', [1]) is False
        assert extensions.load_rows('k') is None

    def test_round_trip(self, monkeypatch):
        """Test JSON rows through the client"""
        fake = FakeRedis()
        monkeypatch.setattr(extensions, 'redis_client', fake)
        assert extensions.store_rows('k', [{'mean_km': 1.5}], ttl=60)
        assert json.loads(fake.store['k']) == [{'mean_km': 1.5}]
        assert extensions.load_rows('k') == [{'mean_km': 1.5}]
        assert extensions.load_rows('missing') is None

    def test_key_ignores_payload_order(self):
        """Test equal payloads share a key"""
        key = extensions.experiment_cache_key({'a': 1, 'b': 2})
        assert key == extensions.experiment_cache_key({'b': 2, 'a': 1})
        assert key.startswith(extensions.CACHE_PREFIX)
        assert extensions.fingerprint({'a': 1}) != extensions.fingerprint({'a': 2})

    def test_experiment_served_from_cache(self, runner, monkeypatch):
        """Test a cached experiment skips the run and prints the stored rows"""
        fake = FakeRedis()
        monkeypatch.setattr(extensions, 'redis_client', fake)
        args = ['experiment', '--preset', 'fig3', '--iterations', '2']
        first = runner.invoke(args=args)
        assert first.exit_code == 0
        assert len(fake.store) == 1

        import commands.experiment as experiment_cmd

        def fail(*args, **kwargs):
            raise AssertionError('experiment should come from the cache')

        monkeypatch.setattr(experiment_cmd, 'run_experiment', fail)
        second = runner.invoke(args=args)
        assert second.exit_code == 0
        assert second.stdout == first.stdout
