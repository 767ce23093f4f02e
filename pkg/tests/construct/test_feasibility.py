import numpy as np
import pytest
from bistochastic.construct.feasibility import (BOUNDARY, INFEASIBLE,
                                                STRICT_INTERIOR,
                                                check_feasibility,
                                                inequality_offsets)
from bistochastic.core.errors import EvenN
from bistochastic.core.matrices import BistochasticMatrix
from bistochastic.sample import sample_sinkhorn
from numpy.testing import assert_allclose


def test_offsets():
    assert inequality_offsets(3) == ([0], [1, 2])
    assert inequality_offsets(5) == ([0, 3], [1, 2, 4])
    assert inequality_offsets(7) == ([0, 3, 5], [1, 2, 4, 6])


class TestCheckFeasibility(object):
    """Tests the verdicts of the alternating inequalities."""

    def test_uniform(self, uniform3):
        report = check_feasibility(uniform3)
        assert report.verdict == STRICT_INTERIOR
        assert_allclose(report.slacks, [1.0 / 3] * 3)

    def test_swap_is_infeasible(self, swap3):
        report = check_feasibility(swap3)
        assert report.verdict == INFEASIBLE
        assert report.slacks.tolist() == [-1.0, 1.0, 1.0]

    def test_identity_is_boundary(self, identity3):
        report = check_feasibility(identity3)
        assert report.min_slack == 1.0
        assert len(report.offdiag_zero_pairs) == 6
        assert report.verdict == BOUNDARY

    def test_zero_slack_is_boundary(self):
        P = BistochasticMatrix(
            [[0.5, 0.25, 0.25], [0.25, 0.25, 0.5], [0.25, 0.5, 0.25]])
        report = check_feasibility(P)
        assert report.slacks[0] == 0.0
        assert report.verdict == BOUNDARY

    def test_five(self):
        report = check_feasibility(BistochasticMatrix(np.full((5, 5), 0.2)))
        assert_allclose(report.slacks, [0.2] * 5, atol=1e-15)
        assert report.verdict == STRICT_INTERIOR

    def test_even(self):
        with pytest.raises(EvenN):
            check_feasibility(BistochasticMatrix(np.eye(4)))

    def test_to_dict(self, uniform3):
        data = check_feasibility(uniform3).to_dict()
        assert data['verdict'] == STRICT_INTERIOR
        assert data['offdiag_zero_pairs'] == []

    def test_matches_triangle_inequalities(self):
        for seed in range(2000):
            P = sample_sinkhorn(3, seed)
            p = P.diagonal
            if any(p[i] > p[(i + 1) % 3] + p[(i + 2) % 3] + 1e-12
                   for i in range(3)):
                expected = INFEASIBLE
            elif all(p[i] < p[(i + 1) % 3] + p[(i + 2) % 3] - 1e-12
                     for i in range(3)):
                expected = STRICT_INTERIOR
            else:
                expected = BOUNDARY
            assert check_feasibility(P).verdict == expected
