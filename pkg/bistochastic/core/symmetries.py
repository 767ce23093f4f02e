"""Group actions on vector-entry matrices.

Permutations of rows and columns move the squared norms around in the same
way; block-diagonal isometries on the left and unit phases on the right
leave them unchanged.
"""
import numpy as np

from bistochastic.core.errors import DimensionMismatch, InvalidArgument
from bistochastic.core.matrices import (DEFAULT_TOLERANCE, VectorEntryMatrix,
                                        _gram, _identity_residual,
                                        check_permutation)
from bistochastic.core.scalars import FieldTag, Scalar, multiply


def act_perm(V, sigma, tau):
    """Permute the rows of V by `sigma` and its columns by `tau`.

    Row j of the result is row sigma[j] of V; column i of the result is
    column tau[i] of V. `BistochasticMatrix.permute` uses the same
    convention, so nu(act_perm(V, s, t)) == nu(V).permute(s, t).

    :param VectorEntryMatrix V: any vector-entry matrix
    :param list sigma: a permutation of range(n)
    :param list tau: a permutation of range(n)
    :rtype: VectorEntryMatrix
    """
    sigma = check_permutation(sigma, V.n)
    tau = check_permutation(tau, V.n)
    return VectorEntryMatrix(V.field, V.entries[np.ix_(sigma, tau)])


def _as_block_array(blocks, field, n, d):
    real_dim = FieldTag.real_dim(field)
    array = np.array(blocks, dtype=float)
    if array.ndim == 3 and real_dim == 1:
        array = array[..., None]
    if array.shape != (n, d, d, real_dim):
        raise DimensionMismatch(
            'Expected {} blocks of shape ({}, {}) over {}, got array of '
            'shape {}'.format(n, d, d, field, array.shape)
        )
    return array


def _as_phase_array(phases, field, n):
    real_dim = FieldTag.real_dim(field)
    rows = []
    for phase in phases:
        if not isinstance(phase, Scalar):
            phase = Scalar(phase)
        if phase.field != field:
            raise InvalidArgument(
                'Phase {} does not belong to {}'.format(phase, field))
        rows.append(phase.coefficients)
    array = np.array(rows, dtype=float).reshape(-1, real_dim)
    if array.shape[0] != n:
        raise DimensionMismatch(
            'Expected {} phases, got {}'.format(n, array.shape[0]))
    return array


def act_diag(V, blocks, phases, tol=DEFAULT_TOLERANCE):
    """Apply a block-diagonal isometry on the left and unit phases on the
    right.

    Every entry of row j is left-multiplied by the d x d isometry
    `blocks[j]`, every entry of column i is right-multiplied by
    `phases[i]`.

    :param VectorEntryMatrix V: the matrix to act on
    :param array_like blocks: n matrices of shape (d, d) over the field of
        V, given as coefficients of shape (n, d, d, r)
    :param list phases: n unit Scalars (or coefficient tuples)
    :param float tol: tolerance for the isometry/unit checks
    :rtype: VectorEntryMatrix
    :raise InvalidArgument: on a non-isometric block or a non-unit phase
    """
    n, d = V.n, V.d
    blocks = _as_block_array(blocks, V.field, n, d)
    phases = _as_phase_array(phases, V.field, n)

    for j in range(n):
        residual = float(_identity_residual(_gram(blocks[j])).max())
        if residual > tol:
            raise InvalidArgument(
                'Block {} is not an isometry of {}^{} (residual '
                '{:.3e})'.format(j, V.field, d, residual),
                block=j, residual=residual,
            )
    norms = np.sqrt(np.sum(phases ** 2, axis=-1))
    bad = np.nonzero(np.abs(norms - 1.0) > tol)[0]
    if bad.size:
        raise InvalidArgument(
            'Phase {} does not have unit norm ({})'.format(
                int(bad[0]), float(norms[bad[0]])),
            phase=int(bad[0]),
        )

    # (U_j v)[a] = sum_b U_j[a, b] v[b]
    rotated = np.sum(
        multiply(blocks[:, None, :, :, :], V.entries[:, :, None, :, :]),
        axis=3,
    )
    return VectorEntryMatrix(
        V.field, multiply(rotated, phases[None, :, None, :]))
