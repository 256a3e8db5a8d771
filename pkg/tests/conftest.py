import pytest

from finitary.ordinals import enumerate_ordinals


@pytest.fixture(scope="session")
def corpus8():
    """All valid ordinals with at most 8 list nodes (200 of them)."""
    return enumerate_ordinals(8)


@pytest.fixture(scope="session")
def corpus7():
    return enumerate_ordinals(7)
