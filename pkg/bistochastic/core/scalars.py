# -*- coding: utf-8 -*-
"""Arithmetic over the three scalar fields R, C and H.

A scalar is stored as its real coefficients: one for R, two for C
(re, im) and four for H (w + xi + yj + zk). All array helpers in this module
operate on numpy arrays whose LAST axis holds those coefficients, so that the
matrix code elsewhere can stay field-generic.

F^d is treated as a right F-module and the inner product is
conjugate-linear in its first slot:

    <u, v> = sum_k conj(u_k) * v_k
"""
import numpy as np

from bistochastic.core.errors import (DimensionMismatch, FieldMismatch,
                                      InvalidArgument)


class FieldTag(object):
    """The scalar field of a vector or a matrix."""

    R = 'R'
    C = 'C'
    H = 'H'

    ALL = (R, C, H)

    _REAL_DIM = {R: 1, C: 2, H: 4}

    @classmethod
    def real_dim(cls, field):
        """Return the dimension of the field over the reals.

        :param str field: one of 'R', 'C', 'H'
        :rtype: int
        """
        return cls._REAL_DIM[cls.parse(field)]

    @classmethod
    def from_real_dim(cls, real_dim):
        """Return the field whose elements have `real_dim` coefficients.

        :param int real_dim: 1, 2 or 4
        :rtype: str
        """
        for field, dim in cls._REAL_DIM.items():
            if dim == real_dim:
                return field
        raise InvalidArgument(
            'No scalar field has {} real coefficients'.format(real_dim))

    @classmethod
    def parse(cls, value):
        """Normalize a user supplied field name.

        :param str value: e.g. 'R', 'c', 'H'
        :rtype: str
        :raise InvalidArgument: if the value does not name a field
        """
        field = str(value).strip().upper()
        if field not in cls._REAL_DIM:
            raise InvalidArgument(
                'Invalid field `{}`, expected one of R, C, H'.format(value),
                field=value,
            )
        return field


def _check_same_field(a, b):
    if a.shape[-1] != b.shape[-1]:
        raise FieldMismatch(
            'Cannot combine {} and {} scalars'.format(
                FieldTag.from_real_dim(a.shape[-1]),
                FieldTag.from_real_dim(b.shape[-1]),
            )
        )


def multiply(a, b):
    """Multiply scalars coefficient-wise arrays, with numpy broadcasting.

    Quaternion multiplication follows i*j = k, j*k = i, k*i = j and is not
    commutative: the result is a*b, not b*a.

    :param np.ndarray a: array of shape (..., r)
    :param np.ndarray b: array of shape (..., r)
    :return: the products, shape (..., r)
    :rtype: np.ndarray
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    _check_same_field(a, b)
    real_dim = a.shape[-1]
    if real_dim == 1:
        return a * b
    if real_dim == 2:
        ar, ai = a[..., 0], a[..., 1]
        br, bi = b[..., 0], b[..., 1]
        return np.stack([ar * br - ai * bi, ar * bi + ai * br], axis=-1)
    if real_dim == 4:
        a0, a1, a2, a3 = (a[..., m] for m in range(4))
        b0, b1, b2, b3 = (b[..., m] for m in range(4))
        return np.stack([
            a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
            a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
            a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
            a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
        ], axis=-1)
    raise InvalidArgument(
        'No scalar field has {} real coefficients'.format(real_dim))


def conjugate(a):
    """Return the conjugates of the given scalars.

    :param np.ndarray a: array of shape (..., r)
    :rtype: np.ndarray
    """
    out = np.array(a, dtype=float, copy=True)
    out[..., 1:] *= -1.0
    return out


def squared_norm(a):
    """Return the squared norms of the given scalars, shape (...)."""
    a = np.asarray(a, dtype=float)
    return np.sum(a * a, axis=-1)


def inner_arrays(u, v, axis=-2):
    """Hermitian inner product of vectors stored as coefficient arrays.

    :param np.ndarray u: array of shape (..., d, r)
    :param np.ndarray v: array of shape (..., d, r)
    :param int axis: the axis that runs over the d vector components
    :return: sum over `axis` of conj(u) * v, shape (..., r)
    :rtype: np.ndarray
    """
    return np.sum(multiply(conjugate(u), v), axis=axis)


class Scalar(object):
    """An element of R, C or H.

    Usage:
    >>> i = Scalar((0, 1))
    >>> (i * i).coefficients
    (-1.0, 0.0)
    >>> j, k = Scalar.quaternion(0, 0, 1, 0), Scalar.quaternion(0, 0, 0, 1)
    >>> (j.conj() * k).coefficients
    (0.0, -1.0, 0.0, 0.0)
    """

    __slots__ = ('coefficients',)

    def __init__(self, coefficients):
        coefficients = tuple(float(c) for c in np.ravel(coefficients))
        if len(coefficients) not in (1, 2, 4):
            raise InvalidArgument(
                'A scalar needs 1, 2 or 4 coefficients, got {}'.format(
                    len(coefficients))
            )
        object.__setattr__(self, 'coefficients', coefficients)

    def __setattr__(self, name, value):
        raise AttributeError('Scalar objects are immutable')

    @classmethod
    def real(cls, x):
        return cls((x,))

    @classmethod
    def complex(cls, z):
        z = complex(z)
        return cls((z.real, z.imag))

    @classmethod
    def quaternion(cls, w, x, y, z):
        return cls((w, x, y, z))

    @classmethod
    def one(cls, field):
        coefficients = [0.0] * FieldTag.real_dim(field)
        coefficients[0] = 1.0
        return cls(coefficients)

    @classmethod
    def zero(cls, field):
        return cls([0.0] * FieldTag.real_dim(field))

    @property
    def field(self):
        return FieldTag.from_real_dim(len(self.coefficients))

    def as_array(self):
        return np.array(self.coefficients, dtype=float)

    def conj(self):
        return Scalar(conjugate(self.as_array()))

    def norm_sq(self):
        return float(squared_norm(self.as_array()))

    def norm(self):
        return float(np.sqrt(self.norm_sq()))

    def __mul__(self, other):
        if isinstance(other, Scalar):
            return Scalar(multiply(self.as_array(), other.as_array()))
        try:
            f = float(other)
        except (TypeError, ValueError):
            return NotImplemented
        return Scalar(self.as_array() * f)

    def __rmul__(self, other):
        # Only real numbers reach here, and they commute with everything
        return self.__mul__(other)

    def __add__(self, other):
        if not isinstance(other, Scalar):
            return NotImplemented
        _check_same_field(self.as_array(), other.as_array())
        return Scalar(self.as_array() + other.as_array())

    def __sub__(self, other):
        if not isinstance(other, Scalar):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return Scalar(-self.as_array())

    def __eq__(self, other):
        return (isinstance(other, Scalar) and
                self.coefficients == other.coefficients)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self.coefficients)

    def __repr__(self):
        return '<Scalar {field} {coefficients}>'.format(
            field=self.field, coefficients=self.coefficients)


class FVector(object):
    """A vector of F^d, i.e. d scalars of a common field."""

    def __init__(self, entries):
        """Constructor.

        :param Union[np.ndarray, list] entries: either a (d, r) array of
            coefficients or a non-empty list of Scalar objects
        """
        if (isinstance(entries, (list, tuple)) and entries and
                all(isinstance(s, Scalar) for s in entries)):
            fields = set(s.field for s in entries)
            if len(fields) > 1:
                raise FieldMismatch(
                    'Vector entries belong to different fields: {}'.format(
                        ', '.join(sorted(fields)))
                )
            entries = [s.coefficients for s in entries]
        array = np.array(entries, dtype=float)
        if array.ndim != 2 or array.shape[0] < 1 or \
                array.shape[1] not in (1, 2, 4):
            raise InvalidArgument(
                'Vector coefficients must have shape (d, 1|2|4), '
                'got {}'.format(array.shape)
            )
        array.setflags(write=False)
        self._entries = array

    @property
    def entries(self):
        return self._entries

    @property
    def dim(self):
        return self._entries.shape[0]

    @property
    def field(self):
        return FieldTag.from_real_dim(self._entries.shape[1])

    def __getitem__(self, k):
        return Scalar(self._entries[k])

    def __len__(self):
        return self.dim

    def _check_compatible(self, other):
        if self.field != other.field:
            raise FieldMismatch(
                'Cannot combine vectors over {} and {}'.format(
                    self.field, other.field)
            )
        if self.dim != other.dim:
            raise DimensionMismatch(
                'Cannot combine vectors of dimension {} and {}'.format(
                    self.dim, other.dim)
            )

    def __add__(self, other):
        self._check_compatible(other)
        return FVector(self._entries + other.entries)

    def __sub__(self, other):
        self._check_compatible(other)
        return FVector(self._entries - other.entries)

    def __mul__(self, scalar):
        """Right scalar multiplication, u * lambda."""
        if not isinstance(scalar, Scalar):
            return NotImplemented
        return FVector(multiply(self._entries, scalar.as_array()))

    def __rmul__(self, scalar):
        """Left scalar multiplication, lambda * u."""
        if not isinstance(scalar, Scalar):
            return NotImplemented
        return FVector(multiply(scalar.as_array(), self._entries))

    def norm_sq(self):
        return norm_sq(self)

    def __eq__(self, other):
        return (isinstance(other, FVector) and
                self._entries.shape == other.entries.shape and
                bool(np.all(self._entries == other.entries)))

    def __ne__(self, other):
        return not self.__eq__(other)

    def __repr__(self):
        return '<FVector {field}^{dim} {entries}>'.format(
            field=self.field, dim=self.dim, entries=self._entries.tolist())


def inner(u, v):
    """Return the Hermitian inner product <u, v> = sum_k conj(u_k) * v_k.

    :param FVector u: the conjugated argument
    :param FVector v: the linear argument
    :rtype: Scalar
    :raise FieldMismatch: if the vectors belong to different fields
    :raise DimensionMismatch: if the vectors have different dimensions
    """
    u._check_compatible(v)
    return Scalar(inner_arrays(u.entries, v.entries, axis=0))


def norm_sq(u):
    """Return ||u||^2 = <u, u> as a float."""
    return float(np.sum(squared_norm(u.entries)))
