import pytest

from strata.linalg import FieldSpec
from strata.shapes import awning_space, triangle_with_strap_space


@pytest.fixture(scope="session")
def awning():
    return awning_space()


@pytest.fixture(scope="session")
def strap():
    return triangle_with_strap_space()


@pytest.fixture(scope="session")
def gf2():
    return FieldSpec(2)
