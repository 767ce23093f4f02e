# -*- coding: utf-8 -*-
import numpy as np
import pytest
from bistochastic.core.errors import (DimensionMismatch, FieldMismatch,
                                      InvalidArgument)
from bistochastic.core.scalars import (FieldTag, FVector, Scalar, conjugate,
                                       inner, multiply, norm_sq,
                                       squared_norm)
from numpy.testing import assert_allclose

ONE, I, J, K = (Scalar.quaternion(*row) for row in np.eye(4))


def left_matrix(a):
    """The real 4 x 4 matrix of b -> a * b."""
    a0, a1, a2, a3 = np.moveaxis(np.asarray(a), -1, 0)
    return np.stack([
        np.stack([a0, -a1, -a2, -a3], axis=-1),
        np.stack([a1, a0, -a3, a2], axis=-1),
        np.stack([a2, a3, a0, -a1], axis=-1),
        np.stack([a3, -a2, a1, a0], axis=-1),
    ], axis=-2)


class TestFieldTag(object):
    """Tests the FieldTag helpers."""

    def test_real_dim(self):
        assert [FieldTag.real_dim(f) for f in FieldTag.ALL] == [1, 2, 4]
        assert FieldTag.from_real_dim(4) == 'H'

    def test_parse(self):
        assert FieldTag.parse(' c ') == 'C'
        with pytest.raises(InvalidArgument):
            FieldTag.parse('Q')
        with pytest.raises(InvalidArgument):
            FieldTag.from_real_dim(3)


class TestQuaternionProduct(object):
    """Tests the Hamilton product."""

    def test_unit_rules(self):
        assert I * J == K
        assert J * K == I
        assert K * I == J
        assert J * I == -K
        assert I * I == -ONE
        assert I * J * K == -ONE

    def test_matches_real_matrix_representation(self):
        rng = np.random.default_rng(0)
        a, b = rng.standard_normal((2, 10000, 4))
        expected = np.einsum('nij,nj->ni', left_matrix(a), b)
        assert_allclose(multiply(a, b), expected, atol=1e-13)

    def test_norm_is_multiplicative(self):
        rng = np.random.default_rng(1)
        a, b = rng.standard_normal((2, 20, 4))
        assert_allclose(squared_norm(multiply(a, b)),
                        squared_norm(a) * squared_norm(b), rtol=1e-12)

    def test_conjugate_reverses_products(self):
        rng = np.random.default_rng(2)
        a, b = rng.standard_normal((2, 4))
        assert_allclose(conjugate(multiply(a, b)),
                        multiply(conjugate(b), conjugate(a)), atol=1e-14)


def test_complex_product_matches_python():
    z, w = 1.5 - 2j, -0.5 + 3j
    product = Scalar.complex(z) * Scalar.complex(w)
    assert_allclose(product.coefficients, [(z * w).real, (z * w).imag])


def test_mixed_fields_are_rejected():
    with pytest.raises(FieldMismatch):
        multiply(np.ones(1), np.ones(2))
    with pytest.raises(FieldMismatch):
        Scalar.real(1) + Scalar.complex(1j)


class TestScalar(object):
    """Tests the Scalar value type."""

    def test_immutable(self):
        s = Scalar.real(2)
        with pytest.raises(AttributeError):
            s.coefficients = (3.0,)

    def test_real_multiplication_commutes(self):
        assert 2 * J == J * 2 == Scalar.quaternion(0, 0, 2, 0)

    def test_norm(self):
        assert Scalar.quaternion(1, 2, 2, 4).norm() == 5.0
        assert Scalar.complex(3 + 4j).norm_sq() == 25.0

    def test_invalid_size(self):
        with pytest.raises(InvalidArgument):
            Scalar((1, 2, 3))

    def test_one_and_zero(self):
        assert Scalar.one('C').coefficients == (1.0, 0.0)
        assert Scalar.zero('H').coefficients == (0.0,) * 4


class TestFVector(object):
    """Tests vectors of F^d and their inner product."""

    def test_from_scalars(self):
        u = FVector([I, J])
        assert u.field == 'H'
        assert u.dim == 2
        assert u[1] == J

    def test_mixed_scalars_are_rejected(self):
        with pytest.raises(FieldMismatch):
            FVector([Scalar.real(1), Scalar.complex(1j)])

    def test_read_only(self):
        u = FVector(np.ones((2, 2)))
        with pytest.raises(ValueError):
            u.entries[0, 0] = 5

    def test_inner_is_conjugate_linear_in_first_slot(self):
        rng = np.random.default_rng(3)
        u = FVector(rng.standard_normal((3, 4)))
        v = FVector(rng.standard_normal((3, 4)))
        lam = Scalar(rng.standard_normal(4))
        assert_allclose(inner(u * lam, v).coefficients,
                        (lam.conj() * inner(u, v)).coefficients, atol=1e-13)
        assert_allclose(inner(u, v * lam).coefficients,
                        (inner(u, v) * lam).coefficients, atol=1e-13)

    def test_inner_is_hermitian(self):
        rng = np.random.default_rng(4)
        u = FVector(rng.standard_normal((3, 4)))
        v = FVector(rng.standard_normal((3, 4)))
        assert_allclose(inner(v, u).coefficients,
                        inner(u, v).conj().coefficients, atol=1e-13)

    def test_left_and_right_products_differ(self):
        u = FVector([I])
        assert (u * J)[0] == K
        assert (J * u)[0] == -K

    def test_norm_sq(self):
        u = FVector([Scalar.complex(3j), Scalar.complex(4)])
        assert norm_sq(u) == 25.0
        assert inner(u, u).coefficients == (25.0, 0.0)

    def test_incompatible_vectors(self):
        with pytest.raises(DimensionMismatch):
            inner(FVector(np.ones((2, 1))), FVector(np.ones((3, 1))))
        with pytest.raises(FieldMismatch):
            FVector(np.ones((2, 1))) + FVector(np.ones((2, 2)))
