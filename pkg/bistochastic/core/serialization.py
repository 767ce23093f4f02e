# -*- coding: utf-8 -*-
"""JSON encodings of scalars and matrices.

Scalars: R as a number, C as [re, im], H as [w, x, y, z].

    BistochasticMatrix: {"n": 3, "rows": [[...], [...], [...]]}
    VectorEntryMatrix:  {"field": "C", "n": 2, "d": 1,
                         "rows": [[[[1, 0]], [[0, 0]]], [[[0, 0]], [[1, 0]]]]}

Rows are listed first (row-major) and indices are 0-based.
"""
import numpy as np

from bistochastic.core.errors import (InvalidArgument, MalformedInput,
                                      NotBistochastic)
from bistochastic.core.matrices import (DEFAULT_TOLERANCE, BistochasticMatrix,
                                        VectorEntryMatrix)
from bistochastic.core.scalars import FieldTag


def encode_scalar(coefficients):
    """Return the JSON value of a scalar given its coefficients.

    :param Sequence[float] coefficients: 1, 2 or 4 real coefficients
    :rtype: Union[float, list]
    """
    coefficients = [float(c) for c in np.ravel(coefficients)]
    if len(coefficients) == 1:
        return coefficients[0]
    return coefficients


def decode_scalar(value, field):
    """Parse the JSON value of a scalar of the given field.

    :param Union[float, list] value: the JSON value
    :param str field: the expected field
    :return: the coefficients
    :rtype: tuple
    """
    real_dim = FieldTag.real_dim(field)
    if real_dim == 1 and isinstance(value, (list, tuple)) and len(value) == 1:
        value = value[0]
    if real_dim == 1:
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise MalformedInput(
                'Expected a real number, got `{}`'.format(value))
        return (float(value),)
    if not isinstance(value, (list, tuple)) or len(value) != real_dim:
        raise MalformedInput(
            'Expected a list of {} numbers for a scalar over {}, '
            'got `{}`'.format(real_dim, field, value)
        )
    try:
        return tuple(float(c) for c in value)
    except (TypeError, ValueError):
        raise MalformedInput('Invalid scalar `{}`'.format(value))


def _require(data, *keys):
    if not isinstance(data, dict):
        raise MalformedInput('Expected a JSON object')
    missing = [k for k in keys if k not in data]
    if missing:
        raise MalformedInput(
            'Missing key(s): {}'.format(', '.join(missing)), missing=missing)


def bistochastic_to_dict(P):
    return {'n': P.n, 'rows': P.entries.tolist()}


def bistochastic_from_dict(data, tol=DEFAULT_TOLERANCE):
    """Parse a bistochastic matrix.

    :param dict data: the JSON object
    :param float tol: validation tolerance
    :rtype: BistochasticMatrix
    :raise MalformedInput: on a bad document, including one that
        describes a matrix that is not bistochastic
    """
    _require(data, 'rows')
    try:
        rows = np.array(data['rows'], dtype=float)
    except (TypeError, ValueError):
        raise MalformedInput('Rows must be lists of numbers')
    n = data.get('n', rows.shape[0] if rows.ndim else 0)
    if rows.ndim != 2 or rows.shape != (n, n):
        raise MalformedInput(
            'Expected {n} rows of {n} numbers, got shape {shape}'.format(
                n=n, shape=rows.shape)
        )
    try:
        return BistochasticMatrix(rows, tol=tol)
    except NotBistochastic as e:
        raise MalformedInput(e.message, **e.details)


def vector_matrix_to_dict(V):
    rows = [
        [
            [encode_scalar(V.entries[j, i, a]) for a in range(V.d)]
            for i in range(V.n)
        ]
        for j in range(V.n)
    ]
    return {'field': V.field, 'n': V.n, 'd': V.d, 'rows': rows}


def vector_matrix_from_dict(data):
    """Parse a vector-entry matrix.

    :param dict data: the JSON object
    :rtype: VectorEntryMatrix
    :raise MalformedInput: on a bad document
    """
    _require(data, 'field', 'n', 'd', 'rows')
    try:
        field = FieldTag.parse(data['field'])
    except InvalidArgument as e:
        raise MalformedInput(e.message)
    n, d = data['n'], data['d']
    rows = data['rows']
    if not isinstance(n, int) or not isinstance(d, int) or n < 1 or d < 1:
        raise MalformedInput('`n` and `d` must be positive integers')
    if not isinstance(rows, list) or len(rows) != n or \
            any(not isinstance(row, list) or len(row) != n for row in rows):
        raise MalformedInput('Expected {n} rows of {n} entries'.format(n=n))

    entries = np.zeros((n, n, d, FieldTag.real_dim(field)))
    for j, row in enumerate(rows):
        for i, vector in enumerate(row):
            if not isinstance(vector, list) or len(vector) != d:
                raise MalformedInput(
                    'Entry ({}, {}) must be a list of {} scalars'.format(
                        j, i, d),
                    row=j, column=i,
                )
            for a, value in enumerate(vector):
                entries[j, i, a] = decode_scalar(value, field)
    return VectorEntryMatrix(field, entries)
