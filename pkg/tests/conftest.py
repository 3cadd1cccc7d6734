import pytest

from seg17.tables import load_default


@pytest.fixture(scope="session")
def registry():
    return load_default()
