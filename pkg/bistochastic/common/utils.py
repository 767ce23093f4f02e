import importlib
from datetime import datetime

import numpy as np
import pytz


def now():
    """Return the current datetime, as a UTC-aware object.

    :rtype: datetime
    """
    return datetime.utcnow().replace(tzinfo=pytz.utc)  # pragma no cover


def import_to_python(import_str):
    """Given a string 'a.b.c' return object c from a.b module.

    :param str import_str: a path like a.b.c.
    """
    mod_name, obj_name = import_str.rsplit('.', 1)
    obj = getattr(importlib.import_module(mod_name), obj_name)
    return obj


def make_rng(seed):
    """Return a counter-based random generator for the given seed.

    Philox is used so that independent streams can be split off the same
    seed without overlap.

    :param Union[int, np.random.SeedSequence] seed: a 64-bit integer seed
        or an already spawned seed sequence
    :rtype: np.random.Generator
    """
    if not isinstance(seed, np.random.SeedSequence):
        seed = np.random.SeedSequence(int(seed) & 0xFFFFFFFFFFFFFFFF)
    return np.random.Generator(np.random.Philox(seed))


def spawn_seeds(seed, count):
    """Split the given seed into `count` disjoint child sequences.

    Usage:
    >>> streams = spawn_seeds(42, 3)
    >>> rngs = [make_rng(s) for s in streams]

    :param int seed: the parent seed
    :param int count: the number of child streams
    :return: a list of SeedSequence objects
    :rtype: list
    """
    parent = np.random.SeedSequence(int(seed) & 0xFFFFFFFFFFFFFFFF)
    return parent.spawn(count)


def spawn_int_seeds(seed, count):
    """Like `spawn_seeds`, but return 64-bit integers that can be echoed
    in output records and passed back on the command line.

    :rtype: list
    """
    return [
        int(child.generate_state(1, dtype=np.uint64)[0])
        for child in spawn_seeds(seed, count)
    ]
