import random

import pytest
from hypothesis import HealthCheck, settings

import tri_extremal as te

settings.register_profile(
    "suite",
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much],
)
settings.load_profile("suite")


@pytest.fixture(autouse=True)
def _restore_kernel_lane():
    from tri_extremal import kernel

    before = kernel._active
    yield
    kernel._active = before


@pytest.fixture
def square():
    return te.validate([(0, 0), (0, 1), (1, 1), (1, 0)])


@pytest.fixture
def triangle():
    return te.validate([(0, 0), (1, 3), (3, 0)])


def rand_poly(n, seed, bound=10 ** 6):
    return te.random_convex(n, seed=seed, bound=bound)


def rand_cases(count, n_lo, n_hi, seed0=1, bound=10 ** 6):
    """Deterministic pool of random instances for oracle comparisons."""
    out = []
    for seed in range(seed0, seed0 + count):
        n = random.Random(seed).randint(n_lo, n_hi)
        out.append(te.random_convex(n, seed=seed, bound=bound))
    return out
