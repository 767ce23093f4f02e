import numpy as np
import pytz
from bistochastic.common.utils import (import_to_python, make_rng, now,
                                       spawn_int_seeds, spawn_seeds)
from bistochastic.construct.policies import WeightedPolicy


def test_make_rng_is_deterministic():
    first = make_rng(42).standard_normal(5)
    second = make_rng(42).standard_normal(5)
    assert np.array_equal(first, second)
    assert not np.array_equal(first, make_rng(43).standard_normal(5))


def test_make_rng_accepts_negative_and_spawned_seeds():
    assert make_rng(-1).random() == make_rng(2 ** 64 - 1).random()
    child = spawn_seeds(7, 1)[0]
    assert make_rng(child).random() == make_rng(spawn_seeds(7, 1)[0]).random()


def test_spawned_streams_are_distinct():
    values = [make_rng(s).random() for s in spawn_seeds(42, 4)]
    assert len(set(values)) == 4


def test_spawn_int_seeds():
    seeds = spawn_int_seeds(42, 3)
    assert seeds == spawn_int_seeds(42, 3)
    assert len(set(seeds)) == 3
    assert all(isinstance(s, int) and 0 <= s < 2 ** 64 for s in seeds)


def test_import_to_python():
    path = 'bistochastic.construct.policies.WeightedPolicy'
    assert import_to_python(path) is WeightedPolicy


def test_now_is_utc():
    assert now().tzinfo is pytz.utc
