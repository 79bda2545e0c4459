import pytest

from catalan_hankel.hankel import DetTable


@pytest.fixture(scope="session")
def table():
    """One shared determinant table; entries are exact and order-independent."""
    return DetTable()
