import pytest

from trigprod.constants import compute_constants


@pytest.fixture(scope="session")
def consts():
    return compute_constants()
