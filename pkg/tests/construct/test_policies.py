import numpy as np
import pytest
from bistochastic.construct.policies import (PaperLiteralPolicy,
                                             WeightedPolicy,
                                             create_coefficient_policy,
                                             parse_coefficient_policy)
from bistochastic.core.errors import (EvenN, InvalidArgument,
                                      WeightedInfeasible, ZeroDivisor)
from bistochastic.core.matrices import BistochasticMatrix
from bistochastic.sample import sample_symmetric_feasible
from numpy.testing import assert_allclose


class TestPolicyFactories(object):
    """Tests creating coefficient policies from their IDs."""

    @pytest.mark.parametrize('policy_id,policy_class', [
        ('paper', PaperLiteralPolicy),
        ('paper_literal', PaperLiteralPolicy),
        ('PAPER_LITERAL', PaperLiteralPolicy),
        ('weighted', WeightedPolicy),
    ])
    def test_create(self, policy_id, policy_class):
        assert isinstance(create_coefficient_policy(policy_id), policy_class)

    def test_create_invalid(self):
        with pytest.raises(InvalidArgument) as e:
            create_coefficient_policy('greedy')
        assert 'weighted' in e.value.details['choices']

    def test_parse(self):
        policy = WeightedPolicy()
        assert parse_coefficient_policy(policy) is policy
        assert isinstance(parse_coefficient_policy('paper'),
                          PaperLiteralPolicy)
        parsed = parse_coefficient_policy(
            'bistochastic.construct.policies.PaperLiteralPolicy')
        assert isinstance(parsed, PaperLiteralPolicy)

    def test_parse_bad_path(self):
        with pytest.raises(InvalidArgument):
            parse_coefficient_policy('bistochastic.construct.Missing')


class TestWeightedPolicy(object):
    """Tests the weighted cyclic system."""

    def test_uniform(self, uniform3):
        policy = WeightedPolicy()
        assert_allclose(policy.edge_squares(uniform3), [1.0 / 18] * 3)
        A = policy.coefficients(uniform3)
        off = ~np.eye(3, dtype=bool)
        assert_allclose(A[off] ** 2, 1.0 / 6, atol=1e-15)

    def test_circulant(self, circulant3):
        y = WeightedPolicy().edge_squares(circulant3)
        assert_allclose(y, [0.0375] * 3, atol=1e-15)

    def test_skew_after_weighting(self, circulant3):
        A = WeightedPolicy().coefficients(circulant3)
        C = A * np.sqrt(circulant3.entries)
        assert_allclose(C, -C.T, atol=1e-15)
        assert np.all(np.diag(A) == 0)

    def test_zero_divisor(self, identity3):
        with pytest.raises(ZeroDivisor) as e:
            WeightedPolicy().coefficients(identity3)
        assert [0, 1] in e.value.details['pairs']
        assert len(e.value.details['pairs']) == 6

    def test_infeasible(self, weighted_infeasible3):
        with pytest.raises(WeightedInfeasible) as e:
            WeightedPolicy().coefficients(weighted_infeasible3)
        assert e.value.details['index'] == 1
        assert_allclose(e.value.details['y'], [0.04, -0.24, 0.04])

    def test_even(self):
        with pytest.raises(EvenN):
            WeightedPolicy().coefficients(
                BistochasticMatrix(np.full((4, 4), 0.25)))


class TestPaperLiteralPolicy(object):
    """Tests the coefficients taken from the diagonal alone."""

    def test_uses_diagonal_only(self, circulant3):
        policy = PaperLiteralPolicy()
        A = policy.coefficients(circulant3)
        assert_allclose(np.sum(A ** 2, axis=1), [0.2] * 3, atol=1e-15)

    @pytest.mark.parametrize('n', [3, 5, 7])
    def test_agrees_with_weighted_on_symmetric(self, n):
        for seed in range(20):
            P = sample_symmetric_feasible(n, seed)
            paper = PaperLiteralPolicy().coefficients(P)
            weighted = WeightedPolicy().coefficients(P)
            assert_allclose(paper ** 2, weighted ** 2, atol=1e-12)
