from bistochastic.core.dimensions import DimensionReport, dims
from bistochastic.core.embeddings import (complexify_from_quaternion,
                                          lift_field, pad_dimension, realify,
                                          realify_quaternion)
from bistochastic.core.matrices import (DEFAULT_TOLERANCE, BistochasticMatrix,
                                        IsometryReport, VectorEntryMatrix,
                                        complex_form, from_complex_form,
                                        is_bistochastic, is_isometry, nu,
                                        orthonormalize_columns,
                                        polar_orthonormalize)
from bistochastic.core.scalars import (FieldTag, FVector, Scalar, inner,
                                       norm_sq)
from bistochastic.core.symmetries import act_diag, act_perm

__all__ = [
    'DEFAULT_TOLERANCE', 'BistochasticMatrix', 'DimensionReport', 'FieldTag',
    'FVector', 'IsometryReport', 'Scalar', 'VectorEntryMatrix', 'act_diag',
    'act_perm', 'complex_form', 'complexify_from_quaternion', 'dims',
    'from_complex_form', 'inner', 'is_bistochastic', 'is_isometry',
    'lift_field', 'norm_sq', 'nu', 'orthonormalize_columns', 'pad_dimension',
    'polar_orthonormalize', 'realify', 'realify_quaternion',
]
