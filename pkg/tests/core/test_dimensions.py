import pytest
from bistochastic.core.dimensions import dims
from bistochastic.core.errors import InvalidArgument


@pytest.mark.parametrize('k', range(1, 11))
def test_groups_at_d_one(k):
    assert dims('R', k, 1).dim_iso == k * (k - 1) // 2
    assert dims('C', k, 1).dim_iso == k * k
    assert dims('H', k, 1).dim_iso == 2 * k * k + k


@pytest.mark.parametrize('n', range(1, 11))
def test_unistochastic_dimension(n):
    assert dims('C', n, 1).dim_doc == (n - 1) ** 2


def test_report():
    report = dims('c', 4, 1)
    assert report.to_dict() == {
        'field': 'C', 'n': 4, 'd': 1, 'dim_iso': 16, 'dim_doc': 9,
        'dim_birkhoff': 9, 'admissible': True,
    }


def test_values_for_larger_d():
    assert dims('R', 3, 2).dim_iso == 12
    assert dims('R', 3, 2).dim_doc == 9
    assert dims('C', 3, 2).dim_doc == 13
    assert dims('H', 3, 2).dim_doc == 30


def test_admissible():
    assert not dims('R', 3, 4).admissible
    assert not dims('H', 1, 1).admissible
    assert dims('H', 1, 1).dim_doc == -2


def test_invalid():
    with pytest.raises(InvalidArgument):
        dims('R', 0, 1)
    with pytest.raises(InvalidArgument):
        dims('X', 2, 1)


def test_real_three_by_three():
    assert dims('R', 3, 1).dim_doc == 3


@pytest.mark.parametrize('field', ['R', 'C', 'H'])
def test_monotone_in_d(field):
    for n in range(1, 9):
        reports = [dims(field, n, d) for d in range(1, n + 1)]
        for smaller, larger in zip(reports, reports[1:]):
            assert larger.dim_iso > smaller.dim_iso
            assert larger.dim_doc >= smaller.dim_doc
            assert 0 <= larger.dim_doc <= larger.dim_iso
