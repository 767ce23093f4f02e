"""Real dimension counts of the isometry sets and of their quotients by
the diagonal symmetry groups.

The values are formula evaluations, not manifold computations: for d > n the
diagonal actions stop being free and the quotient formulas may even turn
negative. `DimensionReport.admissible` flags the range 2 <= n, d <= n where the
counts are meaningful (n = 1 is degenerate: the quaternionic
quotient formula gives -2 there).
"""
from bistochastic.core.errors import InvalidArgument
from bistochastic.core.scalars import FieldTag


class DimensionReport(object):
    """Dimension counts for a (field, n, d) triple."""

    def __init__(self, field, n, d, dim_iso, dim_doc):
        self.field = field
        self.n = n
        self.d = d
        self.dim_iso = dim_iso
        self.dim_doc = dim_doc

    @property
    def dim_birkhoff(self):
        """The dimension of the set of n x n bistochastic matrices."""
        return (self.n - 1) ** 2

    @property
    def admissible(self):
        return 2 <= self.n and self.d <= self.n

    def to_dict(self):
        return {
            'field': self.field,
            'n': self.n,
            'd': self.d,
            'dim_iso': self.dim_iso,
            'dim_doc': self.dim_doc,
            'dim_birkhoff': self.dim_birkhoff,
            'admissible': self.admissible,
        }

    def __repr__(self):
        return ('<DimensionReport {field} n={n} d={d} iso={iso} '
                'doc={doc}>').format(field=self.field, n=self.n, d=self.d,
                                     iso=self.dim_iso, doc=self.dim_doc)


def dims(field, n, d):
    """Return the real dimensions of Iso(F, n, d) and of its quotient.

    Specializing to d = 1 gives dim O(n) = n(n-1)/2, dim U(n) = n^2 and
    dim Sp(n) = 2n^2 + n.

    :param str field: one of 'R', 'C', 'H'
    :param int n: matrix size, n >= 1
    :param int d: internal dimension, d >= 1
    :rtype: DimensionReport
    """
    field = FieldTag.parse(field)
    n, d = int(n), int(d)
    if n < 1 or d < 1:
        raise InvalidArgument(
            'n and d must be positive, got n={} d={}'.format(n, d))

    if field == FieldTag.R:
        # Both numerators are even for every n, d
        dim_iso = ((2 * d - 1) * n * n - n) // 2
        dim_doc = ((2 * d - 1) * n * n - (d * d - d + 1) * n) // 2
    elif field == FieldTag.C:
        dim_iso = (2 * d - 1) * n * n
        dim_doc = (2 * d - 1) * n * n - (d * d + 1) * n + 1
    else:
        dim_iso = (4 * d - 2) * n * n + n
        dim_doc = (4 * d - 2) * n * n - (d * d + d + 2) * n

    return DimensionReport(field, n, d, dim_iso, dim_doc)
