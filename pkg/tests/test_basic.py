import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))


def test_basic_import():
    """Test basic imports work"""
    try:
        from gabidulin.models.codes import CodeHandle, GabidulinSpec, Verdict
        from gabidulin.models.field_tower import FieldTower
        from gabidulin.models.q_cauchy import QCauchyParams
        assert CodeHandle is not None
        assert GabidulinSpec is not None
        assert FieldTower is not None
        assert QCauchyParams is not None
        assert Verdict.GABIDULIN.value == 'gabidulin'
    except Exception as e:
        pytest.fail(f"Import failed: {e}")


def test_app_config():
    """Test the testing configuration"""
    from gabidulin import create_app

    app = create_app('testing')
    assert app.config['TESTING'] is True
    assert app.config['GABIDULIN_FORMAT'] == 'records'
    assert app.config['GABIDULIN_ENUM_CAP'] == 10 ** 5
    assert {'recognize', 'make', 'verify'} <= set(app.cli.commands)


def test_run_config(app):
    """Test run configuration overrides and validation"""
    from gabidulin.config import RunConfig

    config = RunConfig.from_app(app, 'verify', enum_cap=50, seed=None)
    assert config.enum_cap == 50
    assert config.seed == app.config['GABIDULIN_SEED']
    assert config.validate() == []

    with pytest.raises(ValueError):
        RunConfig(command='verify', output_format='json')
    with pytest.raises(ValueError):
        RunConfig(command='borrar')


def test_error_to_dict():
    """Test error serialization"""
    from gabidulin.errors import CapExceeded

    error = CapExceeded('demasiado', size=20, cap=10)
    assert error.to_dict()['error'] == 'cap_exceeded'
    assert error.details == {'size': 20, 'cap': 10}
