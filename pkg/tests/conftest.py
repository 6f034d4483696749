import pytest

from graphutil import k3


@pytest.fixture
def triangle():
    return k3()
