"""Library-wide defaults.

Every value can be overridden through an environment variable of the same
name, read once at import time.
"""
import os


def _env(name, default, cast=float):
    value = os.getenv(name)
    if value is None or value == '':
        return default
    return cast(value)


BISTOCHASTIC_TOLERANCE = _env('BISTOCHASTIC_TOLERANCE', 1e-9)
BISTOCHASTIC_SEARCH_RESTARTS = _env('BISTOCHASTIC_SEARCH_RESTARTS', 32, int)
BISTOCHASTIC_SEARCH_MAX_ITERS = _env(
    'BISTOCHASTIC_SEARCH_MAX_ITERS', 5000, int)
BISTOCHASTIC_SEARCH_STEP = _env('BISTOCHASTIC_SEARCH_STEP', 0.1)
BISTOCHASTIC_SEARCH_TOLERANCE = _env('BISTOCHASTIC_SEARCH_TOLERANCE', 1e-6)
BISTOCHASTIC_SCAN_WORKERS = _env('BISTOCHASTIC_SCAN_WORKERS', 4, int)
BISTOCHASTIC_SCAN_RESTARTS = _env('BISTOCHASTIC_SCAN_RESTARTS', 8, int)
BISTOCHASTIC_SCAN_MAX_ITERS = _env('BISTOCHASTIC_SCAN_MAX_ITERS', 1000, int)
