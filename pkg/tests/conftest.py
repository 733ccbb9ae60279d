"""
Pytest configuration and fixtures.
"""

import pytest

from src.algebra.multipoly import matrix_var_names, parse_poly
from src.config import get_settings
from src.groups.catalog import named_group


@pytest.fixture(autouse=True)
def fresh_settings(monkeypatch):
    """Drop cached settings so each test sees its own environment."""
    for key in ("TORIC_DEFAULT_ORDER", "TORIC_DEFAULT_STRATEGY", "TORIC_CLOSURE_CAP"):
        monkeypatch.delenv(key, raising=False)
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture(scope="session")
def tetrahedral():
    """The binary tetrahedral group, order 24."""
    return named_group("binary-tetrahedral")


@pytest.fixture(scope="session")
def octahedral():
    return named_group("binary-octahedral")


@pytest.fixture(scope="session")
def icosahedral():
    return named_group("binary-icosahedral")


@pytest.fixture
def xyw():
    """Variable names for three-variable ideals; z is reserved for the root of unity."""
    return ["x", "y", "w"]


@pytest.fixture
def parse_xyw(xyw):
    """Parse polynomials in x, y, w over Q."""

    def parse(*texts):
        return [parse_poly(t, xyw) for t in texts]

    return parse


@pytest.fixture
def matrix_names():
    return matrix_var_names(2)
