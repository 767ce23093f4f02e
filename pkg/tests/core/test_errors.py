import json

import pytest
from bistochastic.core import errors


@pytest.mark.parametrize('error_class,code,exit_code', [
    (errors.InvalidArgument, 'INVALID_ARGUMENT', 2),
    (errors.MalformedInput, 'MALFORMED_INPUT', 2),
    (errors.FieldMismatch, 'FIELD_MISMATCH', 2),
    (errors.DimensionMismatch, 'DIMENSION_MISMATCH', 2),
    (errors.NotBistochastic, 'NOT_BISTOCHASTIC', 1),
    (errors.IsometryViolation, 'ISOMETRY_VIOLATION', 1),
    (errors.EvenN, 'EVEN_N', 1),
    (errors.InfeasibleXi, 'INFEASIBLE_XI', 1),
    (errors.WeightedInfeasible, 'WEIGHTED_INFEASIBLE', 1),
    (errors.ZeroDivisor, 'ZERO_DIVISOR', 1),
    (errors.NonConvergence, 'NON_CONVERGENCE', 1),
])
def test_codes(error_class, code, exit_code):
    error = error_class('message')
    assert isinstance(error, errors.BistochasticError)
    assert error.code == code
    assert error.exit_code == exit_code


def test_to_dict():
    error = errors.IsometryViolation('bad', residual=0.5, pair=[0, 1])
    assert json.loads(json.dumps(error.to_dict())) == {
        'error': {
            'code': 'ISOMETRY_VIOLATION',
            'message': 'bad',
            'details': {'residual': 0.5, 'pair': [0, 1]},
        }
    }


def test_validation_errors_are_value_errors():
    for error_class in (errors.InvalidArgument, errors.NotBistochastic,
                        errors.EvenN, errors.MalformedInput):
        assert issubclass(error_class, ValueError)
