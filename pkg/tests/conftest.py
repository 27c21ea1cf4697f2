import pytest

from heckesphere import catalog
from heckesphere.coxeter import CoxeterSystem
from heckesphere.hecke import HeckeAlgebra


@pytest.fixture(scope="session")
def a2():
    return CoxeterSystem(catalog.A2, 10)


@pytest.fixture(scope="session")
def b2():
    return CoxeterSystem(catalog.B2, 10)


@pytest.fixture(scope="session")
def a3():
    return CoxeterSystem(catalog.A3, 12)


@pytest.fixture(scope="session")
def b3():
    return CoxeterSystem(catalog.B3, 12)


@pytest.fixture(scope="session")
def h3():
    return CoxeterSystem(catalog.H3, 18)


@pytest.fixture(scope="session")
def i2_7():
    return CoxeterSystem(catalog.I2_7, 10)


@pytest.fixture(scope="session")
def inf_dihedral():
    return CoxeterSystem(catalog.INF_DIHEDRAL, 8)


@pytest.fixture(scope="session")
def a2_algebra(a2):
    return HeckeAlgebra(a2)


@pytest.fixture(scope="session")
def b2_algebra(b2):
    return HeckeAlgebra(b2)
