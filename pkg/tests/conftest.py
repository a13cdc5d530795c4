import os

import numpy as np
import pytest

from gabidulin import create_app
from gabidulin.models.field_tower import standard_tower, tower_build
from gabidulin.utils.formats import load_field

DATA_DIR = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), 'gabidulin', 'data')


@pytest.fixture
def app():
    """Fixture de la aplicación para pruebas"""
    app = create_app('testing')
    with app.app_context():
        yield app


@pytest.fixture
def runner(app):
    """Runner de comandos"""
    return app.test_cli_runner()


@pytest.fixture
def data_path():
    """Ruta a un archivo de datos del paquete"""
    return lambda name: os.path.join(DATA_DIR, name)


@pytest.fixture
def rng():
    return np.random.default_rng(7)


@pytest.fixture(scope='session')
def f8():
    return standard_tower(2, 3)


@pytest.fixture(scope='session')
def f16():
    return standard_tower(2, 4)


@pytest.fixture(scope='session')
def f27():
    return standard_tower(3, 3)


@pytest.fixture(scope='session')
def f4_2():
    """F_{4^2} con F_4 = F_2[x]/(x^2+x+1) y módulo y^2 + y + x"""
    return tower_build(2, 2, [1, 1, 1], 2, [2, 1, 1])


@pytest.fixture(scope='session')
def f64():
    return load_field(os.path.join(DATA_DIR, 'f2_6.field'))


@pytest.fixture(scope='session')
def f729():
    return load_field(os.path.join(DATA_DIR, 'f3_6.field'))
