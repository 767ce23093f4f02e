# -*- coding: utf-8 -*-
"""Bistochastic matrices, vector-entry matrices and the squared norm map.

Index convention: an n x n matrix P = [p_i^j] has its UPPER index j for the
row and its LOWER index i for the column. Arrays are always indexed
[row, column], so `P.entries[j, i]` is p_i^j and `V.entries[j, i]` is the
vector v_i^j.

The column w_i of a vector-entry matrix V is the vector
(v_i^1, ..., v_i^n) of F^{nd}. V is an isometry F^n -> F^{nd} when

    sum_j <v_i^j, v_k^j> = delta(i, k)       (column condition)

and the row condition reads

    sum_i <v_i^j, v_i^k> = delta(j, k).
"""
import numpy as np

from bistochastic.common import settings
from bistochastic.core.errors import (DimensionMismatch, InvalidArgument,
                                      IsometryViolation, NotBistochastic)
from bistochastic.core.scalars import (FieldTag, FVector, conjugate,
                                       inner_arrays, multiply, squared_norm)

DEFAULT_TOLERANCE = settings.BISTOCHASTIC_TOLERANCE


def _readonly(array):
    array = np.array(array, dtype=float, copy=True)
    array.setflags(write=False)
    return array


def bistochastic_violation(entries):
    """Return how far a real square matrix is from being bistochastic.

    :param np.ndarray entries: an n x n real array
    :return: the largest of: the most negative entry (as a positive number)
        and the largest deviation of a row or column sum from 1
    :rtype: float
    """
    entries = np.asarray(entries, dtype=float)
    negative = max(0.0, -float(entries.min()))
    rows = float(np.max(np.abs(entries.sum(axis=1) - 1.0)))
    cols = float(np.max(np.abs(entries.sum(axis=0) - 1.0)))
    return max(negative, rows, cols)


def is_bistochastic(entries, tol=DEFAULT_TOLERANCE):
    """Return True if `entries` is bistochastic within `tol`."""
    entries = np.asarray(entries, dtype=float)
    if entries.ndim != 2 or entries.shape[0] != entries.shape[1]:
        return False
    if not np.all(np.isfinite(entries)):
        return False
    return bistochastic_violation(entries) <= tol


class BistochasticMatrix(object):
    """A real n x n matrix with nonnegative entries and unit row and
    column sums, all within `tol`."""

    def __init__(self, entries, tol=DEFAULT_TOLERANCE):
        """Constructor.

        :param array_like entries: the n x n real entries, indexed
            [row, column]
        :param float tol: the tolerance used for validation
        :raise NotBistochastic: if the entries fail the invariants
        """
        entries = np.array(entries, dtype=float)
        if entries.ndim != 2 or entries.shape[0] != entries.shape[1] or \
                entries.shape[0] < 1:
            raise NotBistochastic(
                'A bistochastic matrix must be square and non-empty, '
                'got shape {}'.format(entries.shape),
            )
        if not np.all(np.isfinite(entries)):
            raise NotBistochastic('Matrix entries must be finite')
        if tol < 0:
            raise InvalidArgument('Tolerance must be nonnegative')
        violation = bistochastic_violation(entries)
        if violation > tol:
            raise NotBistochastic(
                'Matrix is not bistochastic: violation {:.3e} exceeds '
                'tolerance {:.3e}'.format(violation, tol),
                violation=violation,
                tol=tol,
            )
        self._entries = _readonly(entries)
        self.tol = tol

    @property
    def entries(self):
        return self._entries

    @property
    def n(self):
        return self._entries.shape[0]

    @property
    def diagonal(self):
        return np.diag(self._entries).copy()

    def is_symmetric(self, tol=0.0):
        return bool(np.max(np.abs(self._entries - self._entries.T)) <= tol)

    def offdiagonal_zeros(self, tol=0.0):
        """Return the (row, column) pairs, row != column, of entries that
        are zero within `tol`.

        :rtype: list
        """
        rows, cols = np.nonzero(np.abs(self._entries) <= tol)
        return [(int(j), int(i)) for j, i in zip(rows, cols) if j != i]

    def permute(self, sigma, tau):
        """Permute rows by `sigma` and columns by `tau`.

        Row j of the result is row sigma[j] of this matrix, and likewise
        for columns.

        :param list sigma: a permutation of range(n)
        :param list tau: a permutation of range(n)
        :rtype: BistochasticMatrix
        """
        sigma = check_permutation(sigma, self.n)
        tau = check_permutation(tau, self.n)
        return BistochasticMatrix(self._entries[np.ix_(sigma, tau)],
                                  tol=self.tol)

    def max_deviation(self, other):
        """Return max |self - other| over all entries."""
        other = getattr(other, 'entries', other)
        return float(np.max(np.abs(self._entries - np.asarray(other))))

    def __eq__(self, other):
        return (isinstance(other, BistochasticMatrix) and
                self._entries.shape == other.entries.shape and
                bool(np.all(self._entries == other.entries)))

    def __ne__(self, other):
        return not self.__eq__(other)

    def __repr__(self):
        return '<BistochasticMatrix n={n} {rows}>'.format(
            n=self.n, rows=np.round(self._entries, 6).tolist())


def check_permutation(perm, n):
    """Validate a permutation of range(n) and return it as an int array.

    :raise DimensionMismatch: if it has the wrong size
    :raise InvalidArgument: if it is not a permutation
    """
    perm = np.asarray(perm, dtype=int)
    if perm.shape != (n,):
        raise DimensionMismatch(
            'Permutation of size {} applied to size {}'.format(
                perm.size, n),
        )
    if sorted(perm.tolist()) != list(range(n)):
        raise InvalidArgument(
            '{} is not a permutation of 0..{}'.format(perm.tolist(), n - 1))
    return perm


class VectorEntryMatrix(object):
    """An n x n matrix whose entries are vectors of F^d."""

    def __init__(self, field, entries):
        """Constructor.

        :param str field: one of 'R', 'C', 'H'
        :param array_like entries: coefficients of shape (n, n, d, r),
            indexed [row, column, component, coefficient]
        :raise InvalidArgument: on a malformed shape
        """
        self.field = FieldTag.parse(field)
        entries = np.array(entries, dtype=float)
        real_dim = FieldTag.real_dim(self.field)
        if entries.ndim != 4 or entries.shape[0] != entries.shape[1] or \
                entries.shape[0] < 1 or entries.shape[2] < 1 or \
                entries.shape[3] != real_dim:
            raise InvalidArgument(
                'Entries over {} must have shape (n, n, d, {}), '
                'got {}'.format(self.field, real_dim, entries.shape),
            )
        if not np.all(np.isfinite(entries)):
            raise InvalidArgument('Matrix entries must be finite')
        self._entries = _readonly(entries)

    @classmethod
    def from_columns(cls, field, columns, n, d):
        """Build a matrix from its column matrix.

        :param str field: the scalar field
        :param np.ndarray columns: array of shape (n * d, n, r), whose
            column i is w_i = (v_i^1, ..., v_i^n)
        :rtype: VectorEntryMatrix
        """
        columns = np.asarray(columns, dtype=float)
        real_dim = columns.shape[-1]
        entries = columns.reshape(n, d, n, real_dim).transpose(0, 2, 1, 3)
        return cls(field, entries)

    @property
    def entries(self):
        return self._entries

    @property
    def n(self):
        return self._entries.shape[0]

    @property
    def d(self):
        return self._entries.shape[2]

    @property
    def real_dim(self):
        return self._entries.shape[3]

    def entry(self, row, column):
        """Return v_column^row as an FVector."""
        return FVector(self._entries[row, column])

    def columns(self):
        """Return the (n * d, n, r) column matrix of the operator
        F^n -> F^{nd}.

        :rtype: np.ndarray
        """
        n, d, r = self.n, self.d, self.real_dim
        return self._entries.transpose(0, 2, 1, 3).reshape(n * d, n, r)

    def squared_norms(self):
        """Return the real n x n matrix of ||v_i^j||^2, without any
        isometry check."""
        return np.sum(squared_norm(self._entries), axis=-1)

    def __eq__(self, other):
        return (isinstance(other, VectorEntryMatrix) and
                self.field == other.field and
                self._entries.shape == other.entries.shape and
                bool(np.all(self._entries == other.entries)))

    def __ne__(self, other):
        return not self.__eq__(other)

    def __repr__(self):
        return '<VectorEntryMatrix field={field} n={n} d={d}>'.format(
            field=self.field, n=self.n, d=self.d)


class IsometryReport(object):
    """The outcome of `is_isometry`.

    `residual_cols[i, k]` is the norm of sum_j <v_i^j, v_k^j> - delta(i, k)
    and `residual_rows[j, k]` the norm of sum_i <v_i^j, v_i^k> - delta(j, k).
    """

    def __init__(self, residual_cols, residual_rows, tol):
        self.residual_cols = _readonly(residual_cols)
        self.residual_rows = _readonly(residual_rows)
        self.tol = tol

    @property
    def max_residual_cols(self):
        return float(self.residual_cols.max())

    @property
    def max_residual_rows(self):
        return float(self.residual_rows.max())

    @property
    def max_residual_row_norms(self):
        """The largest deviation of a row block's squared norm from 1."""
        return float(np.max(np.diag(self.residual_rows)))

    @property
    def worst_pair(self):
        """The (i, k) index pair of the worst column residual."""
        i, k = np.unravel_index(np.argmax(self.residual_cols),
                                self.residual_cols.shape)
        return int(i), int(k)

    @property
    def ok(self):
        return self.max_residual_cols <= self.tol

    def to_dict(self):
        return {
            'ok': self.ok,
            'tol': self.tol,
            'max_residual_cols': self.max_residual_cols,
            'max_residual_rows': self.max_residual_rows,
            'worst_pair': list(self.worst_pair),
            'residual_cols': self.residual_cols.tolist(),
            'residual_rows': self.residual_rows.tolist(),
        }


def _gram(vectors):
    """Gram matrix of a set of vectors stored as (N, m, r): returns the
    (m, m, r) array of <x_a, x_b>."""
    return inner_arrays(vectors[:, :, None, :], vectors[:, None, :, :],
                        axis=0)


def _identity_residual(gram):
    target = np.zeros_like(gram)
    m = gram.shape[0]
    target[np.arange(m), np.arange(m), 0] = 1.0
    return np.sqrt(squared_norm(gram - target))


def is_isometry(V, tol=DEFAULT_TOLERANCE):
    """Check the column and row conditions of an isometry.

    The verdict `ok` is decided by the column condition alone. For d = 1
    both residuals vanish together; for d > 1 the off-diagonal row residuals
    may stay large on a genuine isometry (they are reported for diagnosis).

    :param VectorEntryMatrix V: the matrix to check
    :param float tol: the tolerance for the column residual
    :rtype: IsometryReport
    """
    columns = V.columns()
    residual_cols = _identity_residual(_gram(columns))
    # rows as vectors of (F^d)^n: axis 0 runs over (column, component)
    rows = V.entries.reshape(V.n, V.n * V.d, V.real_dim).transpose(1, 0, 2)
    residual_rows = _identity_residual(_gram(rows))
    return IsometryReport(residual_cols, residual_rows, tol)


def nu(V, tol=DEFAULT_TOLERANCE, bistochastic_tol=None):
    """The squared norm map: p_i^j = ||v_i^j||^2.

    :param VectorEntryMatrix V: an isometry
    :param float tol: the isometry tolerance
    :param float bistochastic_tol: the tolerance of the bistochastic check
        of the output (default 2 * tol)
    :rtype: BistochasticMatrix
    :raise IsometryViolation: if V fails the column condition
    :raise NotBistochastic: if V is an isometry whose row blocks are not
        normalized (possible only for d > 1)
    """
    report = is_isometry(V, tol)
    if not report.ok:
        raise IsometryViolation(
            'Matrix is not an isometry: residual {:.3e} at {} exceeds '
            '{:.3e}'.format(report.max_residual_cols, report.worst_pair, tol),
            residual=report.max_residual_cols,
            pair=list(report.worst_pair),
        )
    if bistochastic_tol is None:
        bistochastic_tol = 2 * tol
    return BistochasticMatrix(V.squared_norms(), tol=bistochastic_tol)


def _qr_orthonormalize(matrix):
    q, r = np.linalg.qr(matrix)
    diagonal = np.diag(r)
    if np.any(np.abs(diagonal) <= 1e-14):
        raise InvalidArgument('Columns are linearly dependent')
    # Fix the free phases so that Q matches Gram-Schmidt
    return q * (diagonal / np.abs(diagonal))


def _gram_schmidt(columns):
    """Gram-Schmidt with one reorthogonalization pass, for any field.

    Coefficients are applied on the right, as F^N is a right module.
    """
    q = np.zeros_like(columns)
    for k in range(columns.shape[1]):
        v = columns[:, k].copy()
        for _ in range(2):
            if k == 0:
                break
            basis = q[:, :k]
            coefficients = np.sum(
                multiply(conjugate(basis), v[:, None, :]), axis=0)
            v = v - np.sum(multiply(basis, coefficients[None, :, :]), axis=1)
        norm = np.sqrt(np.sum(squared_norm(v)))
        if norm <= 1e-14:
            raise InvalidArgument('Columns are linearly dependent')
        q[:, k] = v / norm
    return q


def orthonormalize_columns(columns):
    """Orthonormalize the columns of an (N, m, r) coefficient array.

    Returns the Q factor of the Gram-Schmidt process. R and C use a
    Householder QR with the diagonal phases normalized, which yields the
    same Q. H runs the quaternionic Gram-Schmidt directly.

    :param np.ndarray columns: array of shape (N, m, r) with N >= m
    :rtype: np.ndarray
    :raise InvalidArgument: if the columns are linearly dependent
    """
    columns = np.asarray(columns, dtype=float)
    if columns.shape[0] < columns.shape[1]:
        raise DimensionMismatch(
            'Cannot orthonormalize {} columns in dimension {}'.format(
                columns.shape[1], columns.shape[0])
        )
    real_dim = columns.shape[-1]
    if real_dim == 1:
        return _qr_orthonormalize(columns[..., 0])[..., None]
    if real_dim == 2:
        q = _qr_orthonormalize(columns[..., 0] + 1j * columns[..., 1])
        return np.stack([q.real, q.imag], axis=-1)
    return _gram_schmidt(columns)


def complex_form(columns):
    """Return the complex matrix of an (N, m, r) coefficient array.

    R and C give an N x m matrix. A quaternion matrix Q = A + B j, with
    A = w + x i and B = y + z i, gives the 2N x 2m matrix

        [[A, B], [-conj(B), conj(A)]]

    which turns quaternionic products and conjugate transposes into
    complex ones.

    :param np.ndarray columns: array of shape (N, m, r)
    :rtype: np.ndarray
    """
    columns = np.asarray(columns, dtype=float)
    real_dim = columns.shape[-1]
    if real_dim == 1:
        return columns[..., 0]
    if real_dim == 2:
        return columns[..., 0] + 1j * columns[..., 1]
    a = columns[..., 0] + 1j * columns[..., 1]
    b = columns[..., 2] + 1j * columns[..., 3]
    return np.block([[a, b], [-b.conj(), a.conj()]])


def from_complex_form(matrix, real_dim):
    """Inverse of `complex_form`.

    For H the two copies of each block are averaged, which also projects a
    slightly perturbed matrix back onto quaternionic ones.

    :param np.ndarray matrix: the complex matrix
    :param int real_dim: 1, 2 or 4
    :rtype: np.ndarray
    """
    if real_dim == 1:
        return np.real(matrix)[..., None]
    if real_dim == 2:
        return np.stack([matrix.real, matrix.imag], axis=-1)
    rows, cols = matrix.shape[0] // 2, matrix.shape[1] // 2
    a = (matrix[:rows, :cols] + matrix[rows:, cols:].conj()) / 2.0
    b = (matrix[:rows, cols:] - matrix[rows:, :cols].conj()) / 2.0
    return np.stack([a.real, a.imag, b.real, b.imag], axis=-1)


def polar_orthonormalize(columns):
    """Return the closest matrix with orthonormal columns (polar factor).

    Works for every field through `complex_form`; the polar factor of a
    quaternionic matrix is quaternionic.

    :param np.ndarray columns: array of shape (N, m, r) with N >= m
    :rtype: np.ndarray
    :raise np.linalg.LinAlgError: if the SVD does not converge
    """
    columns = np.asarray(columns, dtype=float)
    if columns.shape[0] < columns.shape[1]:
        raise DimensionMismatch(
            'Cannot orthonormalize {} columns in dimension {}'.format(
                columns.shape[1], columns.shape[0])
        )
    u, _, vh = np.linalg.svd(complex_form(columns), full_matrices=False)
    return from_complex_form(u.dot(vh), columns.shape[-1])
