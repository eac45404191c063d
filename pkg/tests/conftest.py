import random

import numpy as np
import pytest

from src.counting import TableCache
from src.series import EXACT, CoefficientRing, from_coefficients
from src.verify import SuiteContext, get_profile

# pbar_3(0..7) and pbar_3(14)
PBAR3 = [1, 6, 24, 80, 234, 624, 1552, 3648]
PBAR3_14 = 535008


@pytest.fixture
def zz():
    return EXACT


@pytest.fixture
def mod72():
    return CoefficientRing.modular(72)


@pytest.fixture
def rng():
    return random.Random(20240611)


@pytest.fixture(scope="session")
def quick_ctx():
    """Quick-profile context with its own table cache, shared by the session."""
    return SuiteContext(get_profile("quick"), TableCache())


@pytest.fixture(scope="session")
def default_ctx():
    return SuiteContext(get_profile("default"), TableCache())


def random_series(rng, ring, trunc, bound=50, density=1.0):
    values = [rng.randint(-bound, bound) if rng.random() < density else 0 for _ in range(trunc + 1)]
    return from_coefficients(ring, values)


def naive_product(x, y, length):
    out = [0] * length
    for i, a in enumerate(x[:length]):
        for j, b in enumerate(y[: length - i]):
            out[i + j] += a * b
    return out


def as_ints(array):
    return [int(v) for v in np.asarray(array)]
