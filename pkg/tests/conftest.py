import pytest

from deg8covers.picard import SurfaceModel


@pytest.fixture
def F1():
    return SurfaceModel(1)


@pytest.fixture
def Y(F1):
    return F1.blow_up("P")
