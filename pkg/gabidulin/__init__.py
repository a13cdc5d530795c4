import logging
import os

from dotenv import load_dotenv
from flask import Flask

from gabidulin.commands.make import make_bp
from gabidulin.commands.recognize import recognize_bp
from gabidulin.commands.verify import verify_bp
from gabidulin.config import (
    DEFAULT_DISTANCE_CAP,
    DEFAULT_ENUM_CAP,
    DEFAULT_LOG_TABLE_LIMIT,
    DEFAULT_SEED,
)

# Cargar variables de entorno
load_dotenv()


def create_app(config_name='development'):
    """Factory function para crear la aplicación con los comandos recognize, make y verify"""
    app = Flask(__name__)

    # Configuración
    app.config['GABIDULIN_ENUM_CAP'] = int(os.getenv('GABIDULIN_ENUM_CAP', DEFAULT_ENUM_CAP))
    app.config['GABIDULIN_DISTANCE_CAP'] = int(os.getenv('GABIDULIN_DISTANCE_CAP', DEFAULT_DISTANCE_CAP))
    app.config['GABIDULIN_LOG_TABLE_LIMIT'] = int(os.getenv('GABIDULIN_LOG_TABLE_LIMIT', DEFAULT_LOG_TABLE_LIMIT))
    app.config['GABIDULIN_SEED'] = int(os.getenv('GABIDULIN_SEED', DEFAULT_SEED))
    app.config['GABIDULIN_FORMAT'] = os.getenv('GABIDULIN_FORMAT', 'records')
    log_level = os.getenv('GABIDULIN_LOG_LEVEL', 'INFO')

    if config_name == 'testing':
        app.config['TESTING'] = True
        app.config['GABIDULIN_FORMAT'] = 'records'
        app.config['GABIDULIN_ENUM_CAP'] = 10 ** 5
        app.config['GABIDULIN_DISTANCE_CAP'] = 2 ** 16
        log_level = 'ERROR'

    # El logger de la aplicación es el padre de los loggers gabidulin.*
    app.logger.setLevel(getattr(logging, log_level.upper(), logging.INFO))

    # Registrar blueprints
    app.register_blueprint(recognize_bp)
    app.register_blueprint(make_bp)
    app.register_blueprint(verify_bp)

    return app
