import pytest

from jackpoly.recursion import RecursionCache


@pytest.fixture(scope="session")
def shared_cache():
    """One memo store for the whole run; results must not depend on it."""
    return RecursionCache()
