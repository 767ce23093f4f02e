"""Explicit isometries V with nu(V) = P.

`construct_nminus1` realizes a bistochastic matrix of odd size n with
vectors of R^{n-1}; `construct_full` works for any n with vectors of F^n.
Every result is certified by recomputing its residuals.
"""
import logging

import numpy as np

from bistochastic.construct.cyclic import check_odd
from bistochastic.construct.policies import (PaperLiteralPolicy,
                                             WeightedPolicy,
                                             parse_coefficient_policy)
from bistochastic.core.embeddings import lift_field
from bistochastic.core.errors import (InfeasibleXi, InvalidArgument,
                                      WeightedInfeasible, ZeroDivisor)
from bistochastic.core.matrices import (BistochasticMatrix, VectorEntryMatrix,
                                        is_isometry)
from bistochastic.core.scalars import FieldTag
from bistochastic.core.serialization import vector_matrix_to_dict

logger = logging.getLogger('bistochastic.construct')

CERTIFICATION_TOLERANCE = 1e-9


def residuals(V, P):
    """Return (max |nu(V) - P|, max column residual of V).

    :param VectorEntryMatrix V: the candidate certificate
    :param BistochasticMatrix P: the target
    :rtype: tuple
    """
    residual_nu = float(np.max(np.abs(V.squared_norms() - P.entries)))
    residual_isometry = is_isometry(V).max_residual_cols
    return residual_nu, residual_isometry


class ConstructionResult(object):
    """An isometry V built for a matrix P, with its recomputed residuals."""

    def __init__(self, V, A, mode, residual_nu, residual_isometry):
        self.V = V
        self.A = A
        self.mode = mode
        self.residual_nu = residual_nu
        self.residual_isometry = residual_isometry

    @property
    def certified(self):
        return (self.residual_nu <= CERTIFICATION_TOLERANCE and
                self.residual_isometry <= CERTIFICATION_TOLERANCE)

    def to_dict(self):
        return {
            'mode': self.mode,
            'certified': self.certified,
            'residual_nu': self.residual_nu,
            'residual_isometry': self.residual_isometry,
            'A': None if self.A is None else np.asarray(self.A).tolist(),
            'V': vector_matrix_to_dict(self.V),
        }

    def __repr__(self):
        return ('<ConstructionResult mode={} d={} certified={} '
                'residual_nu={:.3g} residual_isometry={:.3g}>').format(
            self.mode, self.V.d, self.certified, self.residual_nu,
            self.residual_isometry)


def assemble_nminus1(P, A):
    """Build the real vector-entry matrix of the (n-1) construction.

    Row j uses the basis {e_k : k != j} of R^{n-1}, where e_k is the k-th
    standard vector if k < j and the (k-1)-th one if k > j.

    :param BistochasticMatrix P: the target
    :param np.ndarray A: the coefficient matrix, A[j, k] = a_k^j
    :rtype: VectorEntryMatrix
    """
    n = P.n
    roots = np.sqrt(np.clip(P.entries, 0.0, None))
    entries = np.zeros((n, n, n - 1, 1))
    for j in range(n):
        for k in range(n):
            if k == j:
                continue
            index = k if k < j else k - 1
            entries[j, k, index, 0] = roots[j, k]
            entries[j, j, index, 0] = A[j, k]
    return VectorEntryMatrix(FieldTag.R, entries)


def construct_nminus1(P, mode=WeightedPolicy.name):
    """Realize P by an isometry R^n -> R^{n(n-1)}.

    :param BistochasticMatrix P: an n x n matrix, n odd and n > 1
    :param Union[str, CoefficientPolicy] mode: 'weighted' (default),
        'paper_literal' (alias 'paper') or a CoefficientPolicy
    :rtype: ConstructionResult
    :raise EvenN: for even n
    :raise InfeasibleXi: paper_literal mode, the diagonal violates the
        alternating inequalities
    :raise WeightedInfeasible: weighted mode, a negative edge square
    :raise ZeroDivisor: weighted mode, a zero next to the diagonal
    """
    check_odd(P.n)
    if P.n < 3:
        raise InvalidArgument(
            'The (n-1) construction needs n > 1, got n={}'.format(P.n))
    policy = parse_coefficient_policy(mode)
    A = policy.coefficients(P)
    V = assemble_nminus1(P, A)
    result = ConstructionResult(V, A, policy.name, *residuals(V, P))
    if result.certified:
        logger.debug('Constructed %r', result)
    else:
        logger.warning('Construction is not certified: %r', result)
    return result


def construct_full(P, field, d=None):
    """Realize P by v_i^j = sqrt(p_i^j) e_i in F^d.

    Columns are supported on distinct basis vectors, so they are
    orthogonal, and each has squared norm sum_j p_i^j = 1.

    :param BistochasticMatrix P: any bistochastic matrix
    :param str field: the scalar field of the result
    :param int d: the internal dimension, d >= n (default n)
    :rtype: VectorEntryMatrix
    :raise InvalidArgument: if d < n
    """
    field = FieldTag.parse(field)
    n = P.n
    d = n if d is None else int(d)
    if d < n:
        raise InvalidArgument(
            'The full construction needs d >= n, got d={} < n={}'.format(
                d, n),
            n=n, d=d,
        )
    entries = np.zeros((n, n, d, FieldTag.real_dim(field)))
    columns = np.arange(n)
    entries[:, columns, columns, 0] = np.sqrt(np.clip(P.entries, 0.0, None))
    return VectorEntryMatrix(field, entries)


class DminBound(object):
    """A constructive upper bound on the minimal internal dimension."""

    def __init__(self, d_upper, certificate, method):
        self.d_upper = d_upper
        self.certificate = certificate
        self.method = method

    def to_dict(self):
        return {
            'd_upper': self.d_upper,
            'method': self.method,
            'certificate': vector_matrix_to_dict(self.certificate),
        }

    def __repr__(self):
        return '<DminBound d_upper={} method={}>'.format(
            self.d_upper, self.method)


def _try_nminus1(P):
    """Return the first certified (n-1) construction, or None."""
    for policy in (WeightedPolicy(), PaperLiteralPolicy()):
        try:
            A = policy.coefficients(P)
        except (WeightedInfeasible, ZeroDivisor, InfeasibleXi) as e:
            logger.debug('%s construction failed: %s', policy.name, e)
            continue
        V = assemble_nminus1(P, A)
        result = ConstructionResult(V, A, policy.name, *residuals(V, P))
        if result.certified:
            return result
        logger.debug('%s construction is not certified: %r',
                     policy.name, result)
    return None


def dmin_upper_bound(P, field):
    """Return the smallest d for which a certificate could be constructed.

    For odd n > 1 the (n-1) construction is tried first, weighted then
    paper_literal, and a real certificate is lifted to `field`. Otherwise,
    or if both fail, the full construction gives d = n.

    :param BistochasticMatrix P: any bistochastic matrix
    :param str field: the scalar field
    :rtype: DminBound
    """
    field = FieldTag.parse(field)
    n = P.n
    if n % 2 == 1 and n > 1:
        result = _try_nminus1(P)
        if result is not None:
            return DminBound(
                n - 1, lift_field(result.V, field), result.mode)
        logger.info('No (n-1) certificate, falling back to d=n')
    return DminBound(n, construct_full(P, field, n), 'full')


def uniform_certificate(n):
    """Return the (n-1) construction of the uniform matrix J_n / n.

    :param int n: an odd size, n >= 3
    :rtype: ConstructionResult
    """
    return construct_nminus1(
        BistochasticMatrix(np.full((n, n), 1.0 / n)), WeightedPolicy.name)
