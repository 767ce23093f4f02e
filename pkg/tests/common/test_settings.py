import importlib

from bistochastic.common import settings
from mock import patch


def test_defaults():
    assert settings.BISTOCHASTIC_TOLERANCE == 1e-9
    assert settings.BISTOCHASTIC_SEARCH_RESTARTS == 32
    assert settings.BISTOCHASTIC_SEARCH_MAX_ITERS == 5000
    assert settings.BISTOCHASTIC_SEARCH_STEP == 0.1
    assert settings.BISTOCHASTIC_SEARCH_TOLERANCE == 1e-6
    assert settings.BISTOCHASTIC_SCAN_WORKERS == 4
    assert settings.BISTOCHASTIC_SCAN_RESTARTS == 8
    assert settings.BISTOCHASTIC_SCAN_MAX_ITERS == 1000


def test_environment_overrides():
    env = {'BISTOCHASTIC_SEARCH_RESTARTS': '3',
           'BISTOCHASTIC_TOLERANCE': '1e-7'}
    try:
        with patch.dict('os.environ', env):
            importlib.reload(settings)
            assert settings.BISTOCHASTIC_SEARCH_RESTARTS == 3
            assert settings.BISTOCHASTIC_TOLERANCE == 1e-7
    finally:
        importlib.reload(settings)
    assert settings.BISTOCHASTIC_SEARCH_RESTARTS == 32
