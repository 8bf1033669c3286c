from functools import lru_cache

import pytest
from hypothesis import settings

from forkalg.algebra import build_algebra

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@lru_cache(maxsize=None)
def algebra(n: int, k: int):
    """Shared, memoised algebra builds for the whole session."""
    return build_algebra(n, k)


@pytest.fixture
def alg():
    return algebra


def small_blocks(max_n: int):
    return [(n, k) for n in range(1, max_n + 1) for k in range(n + 1)]
