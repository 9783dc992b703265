from flask import Flask
from flask.cli import FlaskGroup
from dotenv import load_dotenv

# Load environment variables FIRST before importing Config
load_dotenv()

from config import Config
from extensions import init_redis
from utils.monitoring import configure_monitoring, performance_monitor, error_tracker
from commands.generate import generate_bp
from commands.distance import distance_bp
from commands.tammes import tammes_bp
from commands.experiment import experiment_bp
from commands.presets import presets_bp
import logging


def create_app(config_class=Config):
    app = Flask(__name__)
    app.config.from_object(config_class)

    # Validate configuration
    config_class.validate()

    # Log records go to stderr, stdout carries only tables
    logging.basicConfig(
        level=app.config['LOG_LEVEL'],
        format='%(asctime)s %(levelname)s %(name)s: %(message)s'
    )
    app.logger.setLevel(app.config['LOG_LEVEL'])

    # Initialize extensions
    init_redis(app)  # Optional result cache
    configure_monitoring(app)

    # Register command blueprints
    app.register_blueprint(generate_bp)
    app.register_blueprint(distance_bp)
    app.register_blueprint(tammes_bp)
    app.register_blueprint(experiment_bp)
    app.register_blueprint(presets_bp)

    @app.teardown_appcontext
    def log_metrics(exc):
        stats = performance_monitor.get_stats()
        if stats['total_operations']:
            app.logger.debug(
                f"METRICS: operations={stats['total_operations']} "
                f"slow={stats['slow_operations']} failed={stats['failed_operations']} "
                f"errors={error_tracker.get_error_stats()['total_errors']}"
            )

    return app


cli_main = FlaskGroup(
    create_app=create_app,
    add_default_commands=False,
    add_version_option=False,
    load_dotenv=False,
    help='Spherical point models, matching distances and Monte Carlo experiments.'
)


if __name__ == '__main__':
    cli_main()
