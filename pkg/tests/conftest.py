import pytest

from socrank.fixtures import XYZ, XYZW, example1


@pytest.fixture
def xyz():
    return XYZ


@pytest.fixture
def xyzw():
    return XYZW


@pytest.fixture
def ex1():
    """(roster, first ranking, second ranking) of the four-person worked example."""
    r1, r2 = example1()
    return XYZW, r1, r2
