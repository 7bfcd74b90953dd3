import pytest

from normlogic.geometry import construct_l1


@pytest.fixture(scope="session")
def l1():
    """The constructed plane with default parameters: (params, space)."""
    return construct_l1()


@pytest.fixture(scope="session")
def l1_params(l1):
    return l1[0]


@pytest.fixture(scope="session")
def l1_space(l1):
    return l1[1]
