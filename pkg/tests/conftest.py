import json

import numpy as np
import pytest
from bistochastic.core.matrices import BistochasticMatrix


@pytest.fixture
def uniform3():
    """J_3 / 3."""
    return BistochasticMatrix(np.full((3, 3), 1.0 / 3))


@pytest.fixture
def identity3():
    return BistochasticMatrix(np.eye(3))


@pytest.fixture
def swap3():
    """Fixes the first index and swaps the other two: diagonal (1, 0, 0)."""
    return BistochasticMatrix([[1, 0, 0], [0, 0, 1], [0, 1, 0]])


@pytest.fixture
def circulant3():
    """The circulant matrix with first row (0.2, 0.3, 0.5)."""
    row = [0.2, 0.3, 0.5]
    return BistochasticMatrix(
        [[row[(i - j) % 3] for i in range(3)] for j in range(3)])


@pytest.fixture
def weighted_infeasible3():
    """Its weighted cyclic system has y_2 = -0.24."""
    return BistochasticMatrix(
        [[0.8, 0.1, 0.1], [0.1, 0.1, 0.8], [0.1, 0.8, 0.1]])


@pytest.fixture
def write_json(tmp_path):
    """Return a function that dumps a document and returns its path."""

    def _write(name, data):
        path = tmp_path / name
        path.write_text(json.dumps(data))
        return str(path)

    return _write
