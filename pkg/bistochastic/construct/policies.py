"""Policies that choose the skew coefficient matrix A of the
(n-1)-dimensional construction.

A policy receives a bistochastic matrix P and returns a real n x n matrix A
with a zero diagonal. The construction then sets, for each row j,

    v_k^j = sqrt(p_k^j) e_k        (k != j)
    v_j^j = sum_{k != j} a_k^j e_k

in an orthonormal basis {e_k : k != j} of R^{n-1}.
"""
import numpy as np

from bistochastic.common.utils import import_to_python
from bistochastic.construct.cyclic import (NEGATIVE_TOLERANCE, build_skew,
                                           check_odd, skew_from_pairs)
from bistochastic.core.errors import (InvalidArgument, WeightedInfeasible,
                                      ZeroDivisor)

ZERO_TOLERANCE = 1e-15


class CoefficientPolicy(object):
    """Determines the coefficient matrix A of the construction.

    It is meant to be subclassed, each subclass providing its own
    `coefficients()`.
    """

    # Unique identifier, as accepted on the command line
    name = None

    # Alternative identifiers
    aliases = ()

    def coefficients(self, P):
        """Return the coefficient matrix for P.

        Needs to be overridden in subclasses.

        :param BistochasticMatrix P: an n x n matrix, n odd
        :rtype: np.ndarray
        """
        raise NotImplementedError()

    def __repr__(self):
        return '<{} {}>'.format(self.__class__.__name__, self.name)


class PaperLiteralPolicy(CoefficientPolicy):
    """Uses the skew matrix A with prescribed row square sums equal to the
    diagonal of P.

    The result is an isometry when P is symmetric and its diagonal
    satisfies the alternating inequalities. For a non-symmetric P the
    column condition generally fails; the residual is reported and the
    result is not certified.
    """

    name = 'paper_literal'
    aliases = ('paper',)

    def coefficients(self, P):
        return build_skew(P.diagonal)


class WeightedPolicy(CoefficientPolicy):
    """Supports A on the cyclic-neighbor pairs and sets A = C / sqrt(P)
    entry-wise, for a real skew C.

    Then <w_i, w_l> = c_l^i + c_i^l = 0 for every pair, and the diagonal
    normalization reads, with y_m = (c_{m+1}^m)^2,

        y_{j-1} / p_{j-1}^j + y_j / p_{j+1}^j = p_j^j

    a cyclic system that is solved directly. It needs positive entries on
    the cyclic-neighbor pairs and a nonnegative solution y.
    """

    name = 'weighted'

    def edge_squares(self, P):
        """Solve the cyclic system for y.

        :param BistochasticMatrix P: an n x n matrix, n odd
        :return: the n values y_m, one per cyclic-neighbor pair (m, m+1)
        :rtype: np.ndarray
        :raise ZeroDivisor: if an entry on a cyclic-neighbor pair is zero
        """
        check_odd(P.n)
        n = P.n
        entries = P.entries
        rows = np.arange(n)
        left = entries[rows, (rows - 1) % n]
        right = entries[rows, (rows + 1) % n]
        zeros = sorted(
            [(int(j), int((j - 1) % n)) for j in rows
             if left[j] <= ZERO_TOLERANCE] +
            [(int(j), int((j + 1) % n)) for j in rows
             if right[j] <= ZERO_TOLERANCE]
        )
        if zeros:
            raise ZeroDivisor(
                'Weighted coefficients need positive entries next to the '
                'diagonal; zero at {}'.format(zeros[0]),
                pairs=[list(p) for p in zeros],
            )

        system = np.zeros((n, n))
        system[rows, (rows - 1) % n] += 1.0 / left
        system[rows, rows] += 1.0 / right
        try:
            return np.linalg.solve(system, P.diagonal)
        except np.linalg.LinAlgError:
            raise WeightedInfeasible(
                'The weighted cyclic system is singular')

    def coefficients(self, P):
        """:raise WeightedInfeasible: if the system has a negative solution
        """
        y = self.edge_squares(P)
        negative = np.nonzero(y < -NEGATIVE_TOLERANCE)[0]
        if negative.size:
            index = int(negative[0])
            raise WeightedInfeasible(
                'Weighted coefficients are infeasible: y_{} = {:.6g} '
                '< 0'.format(index + 1, y[index]),
                y=y.tolist(), index=index,
            )
        skew = skew_from_pairs(np.sqrt(np.clip(y, 0.0, None)))
        support = skew != 0
        coefficients = np.zeros_like(skew)
        coefficients[support] = (
            skew[support] / np.sqrt(P.entries[support]))
        return coefficients


POLICY_CLASSES = (PaperLiteralPolicy, WeightedPolicy)


def create_coefficient_policy(policy_id):
    """Create the policy object that corresponds to the given ID.

    :param str policy_id: e.g. 'weighted', 'paper_literal' or 'paper'
    :rtype: CoefficientPolicy
    :raise InvalidArgument: on an unknown ID
    """
    policy_classes = {}
    for _class in POLICY_CLASSES:
        for key in (_class.name,) + tuple(_class.aliases):
            policy_classes[key] = _class
    try:
        _class = policy_classes[policy_id.lower()]
        return _class()
    except KeyError:
        raise InvalidArgument(
            'Invalid coefficient mode `{}`'.format(policy_id),
            choices=sorted(policy_classes),
        )


def parse_coefficient_policy(policy):
    """Parse the given policy and return a CoefficientPolicy object.

    :param Union[CoefficientPolicy, str] policy: could be
        - an instance of CoefficientPolicy
        - the ID of a built-in policy
        - the dotted path of a CoefficientPolicy subclass
    :rtype: CoefficientPolicy
    """
    if isinstance(policy, CoefficientPolicy):
        return policy
    if '.' not in policy:
        return create_coefficient_policy(policy)
    try:
        _class = import_to_python(policy)
    except (ImportError, AttributeError, ValueError):
        raise InvalidArgument(
            'Cannot import coefficient policy `{}`'.format(policy))
    return _class()
