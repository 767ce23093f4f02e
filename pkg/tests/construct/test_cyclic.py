import numpy as np
import pytest
from bistochastic.construct.cyclic import (alternating_signs, build_skew,
                                           solve_cyclic)
from bistochastic.core.errors import EvenN, InfeasibleXi, InvalidArgument
from numpy.testing import assert_allclose


def dense_solve(xi):
    """Solve x_i + x_{i+1} = xi_{i+2} with a generic solver."""
    n = len(xi)
    system = np.eye(n) + np.roll(np.eye(n), 1, axis=1)
    return np.linalg.solve(system, np.roll(xi, -2))


class TestSolveCyclic(object):
    """Tests the closed form of the cyclic system."""

    def test_symmetric(self):
        assert_allclose(solve_cyclic([1, 1, 1]), [0.5, 0.5, 0.5])

    def test_five(self):
        assert_allclose(solve_cyclic([1, 2, 3, 4, 5]),
                        [2.5, 0.5, 3.5, 1.5, -0.5], atol=1e-15)

    def test_signs(self):
        assert alternating_signs(7).tolist() == [-1, 1, 1, -1, 1, -1, 1]
        assert alternating_signs(1).tolist() == [1]

    def test_single(self):
        assert_allclose(solve_cyclic([3.0]), [1.5])

    def test_matches_dense_solver(self):
        rng = np.random.default_rng(99)
        for n in range(3, 100, 2):
            for _ in range(100):
                xi = rng.uniform(-1, 1, n)
                x = solve_cyclic(xi)
                expected = dense_solve(xi)
                assert_allclose(x, expected, rtol=1e-10,
                                atol=1e-10 * np.max(np.abs(expected)))
                residual = x + np.roll(x, -1) - np.roll(xi, -2)
                assert np.max(np.abs(residual)) <= 1e-12 * n * \
                    np.max(np.abs(xi))

    @pytest.mark.parametrize('xi', [[1, 1], [1, 2, 3, 4], []])
    def test_even_or_empty(self, xi):
        error = EvenN if xi else InvalidArgument
        with pytest.raises(error):
            solve_cyclic(xi)


class TestBuildSkew(object):
    """Tests the skew matrix with prescribed row square sums."""

    def test_uniform(self):
        A = build_skew([1.0 / 3] * 3)
        assert np.array_equal(A, -A.T)
        off = ~np.eye(3, dtype=bool)
        assert_allclose(A[off] ** 2, 1.0 / 6, atol=1e-15)
        assert_allclose(np.sum(A ** 2, axis=1), [1.0 / 3] * 3, atol=1e-15)

    def test_signs(self):
        A = build_skew([1.0 / 3] * 3)
        assert A[0, 1] > 0 and A[1, 2] > 0 and A[0, 2] > 0

    def test_boundary(self):
        A = build_skew([0.5, 0.25, 0.25])
        assert A[1, 2] == A[2, 1] == 0
        assert_allclose(A[0, 1] ** 2, 0.25)
        assert_allclose(A[0, 2] ** 2, 0.25)
        assert_allclose(np.sum(A ** 2, axis=1), [0.5, 0.25, 0.25],
                        atol=1e-15)

    def test_support_is_cyclic_neighbors(self):
        rng = np.random.default_rng(7)
        xi = 1.0 + 0.1 * rng.random(9)
        A = build_skew(xi)
        assert np.array_equal(A, -A.T)
        for j in range(9):
            for i in range(9):
                if (i - j) % 9 not in (1, 8):
                    assert A[j, i] == 0
        assert_allclose(np.sum(A ** 2, axis=1), xi, atol=1e-12)

    def test_infeasible(self):
        with pytest.raises(InfeasibleXi) as e:
            build_skew([1, 0.1, 0.1])
        assert e.value.details['index'] == 0
        assert_allclose(e.value.details['x'][0], -0.4)

    def test_invalid(self):
        with pytest.raises(EvenN):
            build_skew([1, 1, 1, 1])
        with pytest.raises(InvalidArgument):
            build_skew([1])
        with pytest.raises(InvalidArgument):
            build_skew([1, -1, 1])
