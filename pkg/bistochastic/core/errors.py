"""Exceptions raised by the library.

Every exception carries a machine-readable `code` and the exit status the
command-line interface uses for it: 1 for an honest failure (the input is
valid but no certificate could be produced), 2 for malformed input.
"""

EXIT_CERTIFIED_FAILURE = 1
EXIT_USAGE = 2


class BistochasticError(Exception):
    """Base class of all library errors."""

    code = 'ERROR'
    exit_code = EXIT_CERTIFIED_FAILURE

    def __init__(self, message, **details):
        super(BistochasticError, self).__init__(message)
        self.message = message
        self.details = details

    def to_dict(self):
        """Return the error in the JSON shape used on the command line.

        :rtype: dict
        """
        return {
            'error': {
                'code': self.code,
                'message': self.message,
                'details': self.details,
            }
        }


class InvalidArgument(BistochasticError, ValueError):
    code = 'INVALID_ARGUMENT'
    exit_code = EXIT_USAGE


class MalformedInput(BistochasticError, ValueError):
    """Raised when a JSON document does not describe the expected object."""

    code = 'MALFORMED_INPUT'
    exit_code = EXIT_USAGE


class FieldMismatch(InvalidArgument):
    code = 'FIELD_MISMATCH'


class DimensionMismatch(InvalidArgument):
    code = 'DIMENSION_MISMATCH'


class NotBistochastic(BistochasticError, ValueError):
    """Raised when a matrix has negative entries or rows/columns that do not
    sum to one, within tolerance."""

    code = 'NOT_BISTOCHASTIC'


class IsometryViolation(BistochasticError, ValueError):
    """Raised when a vector-entry matrix is required to be an isometry
    but is not.

    `details` holds the worst residual and the offending (row, column)
    index pair of the column Gram matrix.
    """

    code = 'ISOMETRY_VIOLATION'


class EvenN(BistochasticError, ValueError):
    """The cyclic constructions only exist for odd n."""

    code = 'EVEN_N'


class InfeasibleXi(BistochasticError):
    code = 'INFEASIBLE_XI'


class WeightedInfeasible(BistochasticError):
    code = 'WEIGHTED_INFEASIBLE'


class ZeroDivisor(BistochasticError):
    code = 'ZERO_DIVISOR'


class NonConvergence(BistochasticError):
    code = 'NON_CONVERGENCE'
