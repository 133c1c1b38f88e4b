import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from kmbruhat import AffineWeyl, BruhatOrder, WeylGroup, datum_from_cartan  # noqa: E402

A1 = [[2]]
A2 = [[2, -1], [-1, 2]]
HYPERBOLIC = [[2, -3], [-2, 2]]
AFFINE_A1 = [[2, -2], [-2, 2]]


@pytest.fixture(scope="session")
def a1():
    return datum_from_cartan(A1)


@pytest.fixture(scope="session")
def a2():
    return datum_from_cartan(A2)


@pytest.fixture(scope="session")
def hyp():
    return datum_from_cartan(HYPERBOLIC)


@pytest.fixture(scope="session")
def aff():
    return datum_from_cartan(AFFINE_A1)


@pytest.fixture(scope="session")
def W_a2(a2):
    return WeylGroup(a2)


@pytest.fixture(scope="session")
def W_hyp(hyp):
    return WeylGroup(hyp)


@pytest.fixture(scope="session")
def W_aff(aff):
    return WeylGroup(aff)


@pytest.fixture(scope="session")
def aw_a1(a1):
    return AffineWeyl.from_datum(a1)


@pytest.fixture(scope="session")
def aw_a2(a2):
    return AffineWeyl.from_datum(a2)


@pytest.fixture(scope="session")
def aw_hyp(hyp):
    return AffineWeyl.from_datum(hyp)


@pytest.fixture(scope="session")
def aw_aff(aff):
    return AffineWeyl.from_datum(aff)


@pytest.fixture(scope="session")
def order_a2(aw_a2):
    return BruhatOrder(aw_a2)


@pytest.fixture(scope="session")
def order_hyp(aw_hyp):
    return BruhatOrder(aw_hyp)


@pytest.fixture(scope="session")
def order_aff(aw_aff):
    return BruhatOrder(aw_aff)
