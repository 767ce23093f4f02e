"""Seeded random generators of bistochastic matrices and isometries.

Every generator takes an explicit seed and draws from a Philox stream, so
that the same (parameters, seed) always produce the same output.
"""
import logging

import numpy as np

from bistochastic.common.utils import make_rng
from bistochastic.construct.feasibility import (STRICT_INTERIOR,
                                                check_feasibility)
from bistochastic.core.errors import InvalidArgument, NonConvergence
from bistochastic.core.matrices import (BistochasticMatrix, VectorEntryMatrix,
                                        orthonormalize_columns)
from bistochastic.core.scalars import FieldTag, Scalar
from bistochastic.core.symmetries import act_diag

logger = logging.getLogger('bistochastic.sample')

SINKHORN_TOLERANCE = 1e-12
SINKHORN_MAX_SWEEPS = 10 ** 4
SYMMETRIC_MAX_ATTEMPTS = 1000


def _check_size(n, name='n'):
    if int(n) != n or n < 1:
        raise InvalidArgument(
            '`{}` must be a positive integer, got {}'.format(name, n))
    return int(n)


def sinkhorn_balance(matrix, tol=SINKHORN_TOLERANCE,
                     max_sweeps=SINKHORN_MAX_SWEEPS):
    """Alternately normalize the rows and columns of a positive matrix.

    :param np.ndarray matrix: a square matrix with positive entries
    :param float tol: the target deviation of row sums from 1
    :param int max_sweeps: the number of row+column passes allowed
    :rtype: np.ndarray
    :raise NonConvergence: if the row sums are still off after
        `max_sweeps` passes
    """
    matrix = np.array(matrix, dtype=float)
    for sweep in range(1, max_sweeps + 1):
        matrix /= matrix.sum(axis=1, keepdims=True)
        matrix /= matrix.sum(axis=0, keepdims=True)
        # columns are exact right after their normalization
        error = float(np.max(np.abs(matrix.sum(axis=1) - 1.0)))
        if error <= tol:
            logger.debug('Sinkhorn converged after %d sweeps', sweep)
            return matrix
    raise NonConvergence(
        'Sinkhorn balancing did not converge in {} sweeps (error '
        '{:.3e})'.format(max_sweeps, error),
        sweeps=max_sweeps, error=error,
    )


def sample_sinkhorn(n, seed):
    """Balance a matrix of i.i.d. uniform(0.1, 1.1) entries.

    :param int n: the size
    :param int seed: the random seed
    :rtype: BistochasticMatrix
    """
    n = _check_size(n)
    rng = make_rng(seed)
    return BistochasticMatrix(
        sinkhorn_balance(rng.uniform(0.1, 1.1, size=(n, n))))


def sample_birkhoff(n, k, seed):
    """Mix k uniformly random permutation matrices.

    Weights are drawn uniformly from the open simplex.

    :param int n: the size
    :param int k: the number of permutation matrices, k >= 1
    :param int seed: the random seed
    :rtype: BistochasticMatrix
    """
    n = _check_size(n)
    k = _check_size(k, 'k')
    rng = make_rng(seed)
    weights = rng.dirichlet(np.ones(k))
    entries = np.zeros((n, n))
    rows = np.arange(n)
    for weight in weights:
        entries[rows, rng.permutation(n)] += weight
    return BistochasticMatrix(entries)


def _gaussian(rng, shape, field):
    return rng.standard_normal(size=shape + (FieldTag.real_dim(field),))


def _balanced_isometry(rng, field, n, d):
    """Mix d independent square isometries with Dirichlet weights and
    rotate each row block by a random isometry of F^d.

    Each row block then has squared norm 1, so nu of the result is
    bistochastic for every d.
    """
    weights = rng.dirichlet(np.ones(d))
    entries = np.zeros((n, n, d, FieldTag.real_dim(field)))
    for a in range(d):
        unitary = orthonormalize_columns(_gaussian(rng, (n, n), field))
        entries[:, :, a] = np.sqrt(weights[a]) * unitary
    blocks = np.stack([
        orthonormalize_columns(_gaussian(rng, (d, d), field))
        for _ in range(n)
    ])
    return act_diag(VectorEntryMatrix(field, entries), blocks,
                    [Scalar.one(field)] * n)


def sample_isometry(field, n, d, seed, balanced=False):
    """Return a random isometry F^n -> F^{nd}.

    By default the column matrix is the orthonormalized matrix of i.i.d.
    standard normal coefficients. With `balanced`, the sample also has
    row blocks of unit norm (see `_balanced_isometry`).

    :param str field: the scalar field
    :param int n: the number of rows and columns
    :param int d: the internal dimension
    :param int seed: the random seed
    :param bool balanced: whether nu of the sample must be bistochastic
    :rtype: VectorEntryMatrix
    """
    field = FieldTag.parse(field)
    n = _check_size(n)
    d = _check_size(d, 'd')
    rng = make_rng(seed)
    if balanced:
        return _balanced_isometry(rng, field, n, d)
    columns = orthonormalize_columns(_gaussian(rng, (n * d, n), field))
    return VectorEntryMatrix.from_columns(field, columns, n, d)


def sample_symmetric_feasible(n, seed, max_attempts=SYMMETRIC_MAX_ATTEMPTS):
    """Return a symmetric bistochastic matrix whose diagonal strictly
    satisfies the alternating inequalities.

    Candidates are (P + P^T) / 2 for Sinkhorn samples P; they are rejected
    until one lies in the strict interior.

    :param int n: an odd size, n >= 3
    :param int seed: the random seed
    :param int max_attempts: the number of candidates to try
    :rtype: BistochasticMatrix
    :raise NonConvergence: if every candidate was rejected
    """
    n = _check_size(n)
    rng = make_rng(seed)
    for attempt in range(1, max_attempts + 1):
        balanced = sinkhorn_balance(rng.uniform(0.1, 1.1, size=(n, n)))
        P = BistochasticMatrix((balanced + balanced.T) / 2.0)
        if check_feasibility(P).verdict == STRICT_INTERIOR:
            logger.debug('Accepted symmetric sample after %d attempts',
                         attempt)
            return P
    raise NonConvergence(
        'No strictly feasible symmetric sample in {} attempts'.format(
            max_attempts),
        attempts=max_attempts,
    )
