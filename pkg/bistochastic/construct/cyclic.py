"""The cyclic linear system and the skew-symmetric matrix built on it.

Indices are cyclic, i + n = i. For odd n the system

    x_i + x_{i+1} = xi_{i+2},   i = 1..n

is invertible and its solution has the closed form

    2 x_i = -xi_i + xi_{i+1} + xi_{i+2} - xi_{i+3} + xi_{i+4} - ... + xi_{i+n-1}
"""
import numpy as np

from bistochastic.core.errors import EvenN, InfeasibleXi, InvalidArgument

NEGATIVE_TOLERANCE = 1e-12


def check_odd(n):
    """:raise EvenN: if n is even"""
    if n % 2 == 0:
        raise EvenN(
            'The cyclic construction needs an odd n, got n={}'.format(n), n=n)


def alternating_signs(n):
    """Return the signs of xi_{i+m}, m = 0..n-1, in the closed form.

    :param int n: an odd size
    :rtype: np.ndarray
    """
    if n == 1:
        return np.ones(1)
    signs = np.where(np.arange(n) % 2 == 0, 1.0, -1.0)
    signs[0] = -1.0
    signs[1] = 1.0
    return signs


def solve_cyclic(xi):
    """Solve x_i + x_{i+1} = xi_{i+2} (cyclic) by the closed form.

    :param Sequence[float] xi: n reals, n odd
    :return: the n solutions x_i
    :rtype: np.ndarray
    :raise EvenN: the system is singular for even n
    """
    xi = np.asarray(xi, dtype=float).ravel()
    n = xi.size
    if n < 1:
        raise InvalidArgument('Need at least one right-hand side value')
    check_odd(n)
    # shifted[m, i] = xi_{i+m}
    shifted = np.stack([np.roll(xi, -m) for m in range(n)])
    return 0.5 * alternating_signs(n).dot(shifted)


def skew_from_pairs(values):
    """Place values on the cyclic-neighbor pairs of a skew matrix.

    `values[m]` goes on the pair (m, m+1); the entry above the diagonal is
    the positive one, which also settles the wraparound pair (0, n-1).

    :param Sequence[float] values: n nonnegative numbers
    :rtype: np.ndarray
    """
    values = np.asarray(values, dtype=float)
    n = values.size
    skew = np.zeros((n, n))
    for m in range(n):
        j, i = sorted((m, (m + 1) % n))
        skew[j, i] = values[m]
        skew[i, j] = -values[m]
    return skew


def build_skew(xi):
    """Return a real skew-symmetric A with sum_i (a_i^j)^2 = xi_j.

    A is supported on the cyclic-neighbor pairs only. The squared entry on
    the pair (k, k+1) is x_{k-1}, where x solves the cyclic system for xi.

    :param Sequence[float] xi: n >= 3 nonnegative reals, n odd
    :rtype: np.ndarray
    :raise EvenN: for even n
    :raise InfeasibleXi: if some x_i < -1e-12, i.e. xi violates the
        alternating inequalities
    """
    xi = np.asarray(xi, dtype=float).ravel()
    n = xi.size
    check_odd(n)
    if n < 3:
        raise InvalidArgument(
            'A skew matrix with prescribed square sums needs n >= 3')
    if np.any(xi < 0):
        raise InvalidArgument('Square sums must be nonnegative')

    x = solve_cyclic(xi)
    negative = np.nonzero(x < -NEGATIVE_TOLERANCE)[0]
    if negative.size:
        index = int(negative[0])
        raise InfeasibleXi(
            'Square sums are infeasible: x_{} = {:.6g} < 0'.format(
                index + 1, x[index]),
            x=x.tolist(), index=index,
        )
    x = np.clip(x, 0.0, None)
    # pair (k, k+1) carries x_{k-1}
    return skew_from_pairs(np.sqrt(np.roll(x, 1)))
