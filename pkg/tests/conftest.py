from fractions import Fraction

import pytest
from hypothesis import settings

from axial.constructions import close_family, family_params
from axial.matsuo import build_matsuo

settings.register_profile("suite", max_examples=50, deadline=None)
settings.load_profile("suite")

HALF = Fraction(1, 2)


@pytest.fixture(scope="session")
def sym4():
    return close_family(family_params("sym", m=4))


@pytest.fixture(scope="session")
def sym4_alg(sym4):
    return build_matsuo(sym4, HALF)


@pytest.fixture(scope="session")
def wr2_5():
    return close_family(family_params("wr2", n=5))


@pytest.fixture(scope="session")
def wr2_5_alg(wr2_5):
    return build_matsuo(wr2_5, HALF)


@pytest.fixture(scope="session")
def wr3_4():
    return close_family(family_params("wr3", n=4))


@pytest.fixture(scope="session")
def wr3_4_alg(wr3_4):
    return build_matsuo(wr3_4, HALF)


@pytest.fixture(scope="session")
def sp3():
    return close_family(family_params("sp", m=3))


@pytest.fixture(scope="session")
def sp3_alg(sp3):
    return build_matsuo(sp3, HALF)


@pytest.fixture(scope="session")
def frob9():
    return close_family(family_params("frob9"))
