import numpy as np
import pytest


@pytest.fixture
def rng():
    return np.random.default_rng(1234)


@pytest.fixture
def rng_factory():
    def make(seed):
        return np.random.default_rng(seed)
    return make
