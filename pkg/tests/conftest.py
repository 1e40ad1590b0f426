import pytest

from wheelmac.macdonald import MacdonaldTable


@pytest.fixture(scope="session")
def tables():
    """One shared Macdonald table per variable count.

    compute_P caches everything it touches, so sharing the tables across
    test modules is what keeps the suite inside its runtime budget.
    """
    cache = {}

    def get(n):
        if n not in cache:
            cache[n] = MacdonaldTable(n)
        return cache[n]

    return get
