import json

import pytest
from bistochastic.core.errors import MalformedInput
from bistochastic.core.serialization import (bistochastic_from_dict,
                                             bistochastic_to_dict,
                                             decode_scalar, encode_scalar,
                                             vector_matrix_from_dict,
                                             vector_matrix_to_dict)
from bistochastic.sample import sample_isometry


class TestScalars(object):
    """Tests the JSON encoding of scalars."""

    def test_encode(self):
        assert encode_scalar([2.5]) == 2.5
        assert encode_scalar([1, -1]) == [1.0, -1.0]

    def test_decode(self):
        assert decode_scalar(3, 'R') == (3.0,)
        assert decode_scalar([3], 'R') == (3.0,)
        assert decode_scalar([0, 1, 0, 0], 'H') == (0.0, 1.0, 0.0, 0.0)

    @pytest.mark.parametrize('value,field', [
        ('3', 'R'), (True, 'R'), (1.0, 'C'), ([1, 2], 'H'), (['a', 1], 'C'),
    ])
    def test_decode_invalid(self, value, field):
        with pytest.raises(MalformedInput):
            decode_scalar(value, field)


class TestBistochasticDocument(object):
    """Tests the bistochastic matrix document."""

    def test_to_dict(self, uniform3):
        data = bistochastic_to_dict(uniform3)
        assert data['n'] == 3
        assert bistochastic_from_dict(json.loads(json.dumps(data))) == \
            uniform3

    def test_n_is_optional(self):
        assert bistochastic_from_dict({'rows': [[1]]}).n == 1

    def test_missing_rows(self):
        with pytest.raises(MalformedInput) as e:
            bistochastic_from_dict({'n': 2})
        assert e.value.details['missing'] == ['rows']

    def test_wrong_shape(self):
        with pytest.raises(MalformedInput):
            bistochastic_from_dict({'n': 3, 'rows': [[0.5, 0.5], [0.5, 0.5]]})

    def test_not_bistochastic(self):
        with pytest.raises(MalformedInput) as e:
            bistochastic_from_dict({'rows': [[0.9, 0.1], [0.2, 0.8]]})
        assert e.value.code == 'MALFORMED_INPUT'
        assert 'violation' in e.value.details


class TestVectorMatrixDocument(object):
    """Tests the vector-entry matrix document."""

    def test_layout(self):
        data = vector_matrix_to_dict(sample_isometry('C', 2, 1, seed=0))
        assert data['field'] == 'C'
        assert (data['n'], data['d']) == (2, 1)
        assert len(data['rows'][1][0][0]) == 2

    @pytest.mark.parametrize('field', ['R', 'C', 'H'])
    def test_from_dict(self, field):
        V = sample_isometry(field, 2, 2, seed=1, balanced=True)
        data = json.loads(json.dumps(vector_matrix_to_dict(V)))
        assert vector_matrix_from_dict(data) == V

    @pytest.mark.parametrize('data', [
        {'field': 'R', 'n': 1, 'd': 1},
        {'field': 'Z', 'n': 1, 'd': 1, 'rows': [[[1]]]},
        {'field': 'R', 'n': 0, 'd': 1, 'rows': []},
        {'field': 'R', 'n': 2, 'd': 1, 'rows': [[[1]]]},
        {'field': 'R', 'n': 1, 'd': 2, 'rows': [[[1]]]},
        {'field': 'C', 'n': 1, 'd': 1, 'rows': [[[1]]]},
        [1, 2],
    ])
    def test_malformed(self, data):
        with pytest.raises(MalformedInput):
            vector_matrix_from_dict(data)
