"""Change of field and of internal dimension.

All maps here send isometries to isometries and preserve every squared norm
exactly: they only reorder, copy or pad coefficients.
"""
import numpy as np

from bistochastic.core.errors import FieldMismatch, InvalidArgument
from bistochastic.core.matrices import VectorEntryMatrix
from bistochastic.core.scalars import FieldTag


def _require_field(V, field):
    if V.field != field:
        raise FieldMismatch(
            'Expected a matrix over {}, got {}'.format(field, V.field),
            expected=field, actual=V.field,
        )


def realify(V):
    """Identify C^d with R^{2d} through z = x + iy.

    A vector (z_1, ..., z_d) becomes (x_1, ..., x_d, y_1, ..., y_d). The
    real inner product is the real part of the complex one, so isometries
    stay isometries.

    :param VectorEntryMatrix V: a matrix over C with internal dimension d
    :return: a matrix over R with internal dimension 2d
    :rtype: VectorEntryMatrix
    """
    _require_field(V, FieldTag.C)
    entries = V.entries
    real = np.concatenate([entries[..., 0], entries[..., 1]], axis=-1)
    return VectorEntryMatrix(FieldTag.R, real[..., None])


def complexify_from_quaternion(V):
    """Identify H^d with C^{2d}.

    A quaternion is split as q = z1 + j*z2 with z1 = w + xi and
    z2 = y - zi. With this split H^d is a right C-module isomorphic to
    C^{2d}, and the complex inner product is the complex part of the
    quaternionic one.

    :param VectorEntryMatrix V: a matrix over H with internal dimension d
    :return: a matrix over C with internal dimension 2d
    :rtype: VectorEntryMatrix
    """
    _require_field(V, FieldTag.H)
    entries = V.entries
    z1 = entries[..., [0, 1]]
    z2 = np.stack([entries[..., 2], -entries[..., 3]], axis=-1)
    return VectorEntryMatrix(FieldTag.C, np.concatenate([z1, z2], axis=2))


def realify_quaternion(V):
    """Identify H^d with R^{4d}, as realify after
    complexify_from_quaternion."""
    return realify(complexify_from_quaternion(V))


def lift_field(V, field):
    """Include V in a larger field: R in C in H.

    Coefficients of the new imaginary units are zero, so inner products
    and squared norms do not change.

    :param VectorEntryMatrix V: the matrix to lift
    :param str field: the target field, at least as large as V's
    :rtype: VectorEntryMatrix
    """
    field = FieldTag.parse(field)
    source_dim = V.real_dim
    target_dim = FieldTag.real_dim(field)
    if target_dim < source_dim:
        raise FieldMismatch(
            'Cannot lift a matrix over {} to {}'.format(V.field, field),
            expected=field, actual=V.field,
        )
    padding = [(0, 0)] * 3 + [(0, target_dim - source_dim)]
    return VectorEntryMatrix(field, np.pad(V.entries, padding))


def pad_dimension(V, d_new):
    """Extend every entry of V by zeros to dimension `d_new`.

    :param VectorEntryMatrix V: the matrix to pad
    :param int d_new: the new internal dimension, d_new >= V.d
    :rtype: VectorEntryMatrix
    :raise InvalidArgument: if d_new < V.d
    """
    d_new = int(d_new)
    if d_new < V.d:
        raise InvalidArgument(
            'Cannot pad dimension {} down to {}'.format(V.d, d_new),
            d=V.d, d_new=d_new,
        )
    padding = [(0, 0), (0, 0), (0, d_new - V.d), (0, 0)]
    return VectorEntryMatrix(V.field, np.pad(V.entries, padding))
