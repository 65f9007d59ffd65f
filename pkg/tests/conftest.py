import random

import pytest

from incsig import HmacTestBackend, RandomizeFn, SchemeParams

SMALL_PARAMS = {
    2: SchemeParams(b=16, k=8, d=2),
    3: SchemeParams(b=24, k=8, d=3),
    4: SchemeParams(b=32, k=8, d=4),
    8: SchemeParams(b=64, k=8, d=8),
}


@pytest.fixture
def rng():
    return random.Random(0xC0FFEE)


@pytest.fixture
def backend():
    return HmacTestBackend()


@pytest.fixture
def keypair(backend):
    return backend.keygen(b"test-seed")


def make_rf(params=None):
    if params is None:
        return RandomizeFn()
    return RandomizeFn.for_params(params)
