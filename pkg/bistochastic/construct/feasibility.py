"""The alternating diagonal inequalities that make a bistochastic matrix
(n-1)-orthostochastic.

For odd n and every i (cyclic indices):

    p_i + p_{i+3} + p_{i+5} + ... + p_{i+n-2}
        <= p_{i+1} + p_{i+2} + p_{i+4} + ... + p_{i+n-1}

where p_k is the k-th diagonal entry. For n = 3 these are the triangle
inequalities on (p_1, p_2, p_3).
"""
import numpy as np

from bistochastic.construct.cyclic import check_odd
from bistochastic.core.errors import InvalidArgument

STRICT_INTERIOR = 'strict_interior'
BOUNDARY = 'boundary'
INFEASIBLE = 'infeasible'

FEASIBILITY_TOLERANCE = 1e-12


def inequality_offsets(n):
    """Return the (left, right) offsets of the i-th inequality.

    Usage:
    >>> inequality_offsets(5)
    ([0, 3], [1, 2, 4])
    """
    left = [0] + list(range(3, n - 1, 2))
    right = [1] + list(range(2, n, 2))
    return left, right


def alternating_slacks(diagonal):
    """Return RHS - LHS of each inequality.

    :param Sequence[float] diagonal: the n diagonal entries, n odd
    :rtype: np.ndarray
    """
    diagonal = np.asarray(diagonal, dtype=float)
    n = diagonal.size
    left, right = inequality_offsets(n)
    slacks = np.empty(n)
    for i in range(n):
        lhs = sum(diagonal[(i + m) % n] for m in left)
        rhs = sum(diagonal[(i + m) % n] for m in right)
        slacks[i] = rhs - lhs
    return slacks


class FeasibilityReport(object):
    """Per-inequality slacks and the resulting verdict.

    `offdiag_zero_pairs` lists the (row, column) pairs with a zero
    off-diagonal entry; any of them keeps the matrix out of the strict
    interior.
    """

    def __init__(self, n, slacks, offdiag_zero_pairs,
                 tol=FEASIBILITY_TOLERANCE):
        self.n = n
        self.slacks = np.asarray(slacks, dtype=float)
        self.offdiag_zero_pairs = list(offdiag_zero_pairs)
        self.tol = tol

    @property
    def min_slack(self):
        return float(self.slacks.min())

    @property
    def verdict(self):
        if self.min_slack < -self.tol:
            return INFEASIBLE
        if self.min_slack > self.tol and not self.offdiag_zero_pairs:
            return STRICT_INTERIOR
        return BOUNDARY

    def to_dict(self):
        return {
            'n': self.n,
            'verdict': self.verdict,
            'slacks': self.slacks.tolist(),
            'min_slack': self.min_slack,
            'offdiag_zero_pairs': [list(p) for p in self.offdiag_zero_pairs],
        }

    def __repr__(self):
        return '<FeasibilityReport n={} {} min_slack={:.3g}>'.format(
            self.n, self.verdict, self.min_slack)


def check_feasibility(P):
    """Evaluate the alternating inequalities on the diagonal of P.

    :param BistochasticMatrix P: an n x n matrix, n odd, n >= 3
    :rtype: FeasibilityReport
    :raise EvenN: for even n
    """
    check_odd(P.n)
    if P.n < 3:
        raise InvalidArgument('Feasibility is only defined for n >= 3')
    return FeasibilityReport(
        P.n,
        alternating_slacks(P.diagonal),
        P.offdiagonal_zeros(tol=FEASIBILITY_TOLERANCE),
    )
