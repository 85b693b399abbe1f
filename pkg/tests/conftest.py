import pytest

from singlib import milnor_basis, parse_poly


@pytest.fixture(scope="session")
def h():
    return parse_poly("x^14+y^14-x^6*y^6", ["x", "y"])


@pytest.fixture(scope="session")
def g():
    return parse_poly("x^14+y^14-x^6*y^6+z^5", ["x", "y", "z"])


@pytest.fixture(scope="session")
def basis_h(h):
    return milnor_basis(h)
