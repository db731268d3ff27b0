import pytest

from loopforge import LoopTable, SchreierData
from loopforge.core import identity_perm
from loopforge.gallery import named_group, symmetric_group


@pytest.fixture(scope="session")
def z2():
    return LoopTable.cyclic(2)


@pytest.fixture(scope="session")
def z3():
    return LoopTable.cyclic(3)


@pytest.fixture(scope="session")
def z4():
    return LoopTable.cyclic(4)


@pytest.fixture(scope="session")
def v4():
    return named_group("v4")


@pytest.fixture(scope="session")
def s3():
    return symmetric_group(3)


@pytest.fixture(scope="session")
def q8():
    return named_group("q8")


# a nonassociative loop of order 5 with trivial nuclei
LOOP5_ROWS = ((0, 1, 2, 3, 4),
              (1, 0, 3, 4, 2),
              (2, 3, 4, 0, 1),
              (3, 4, 1, 2, 0),
              (4, 2, 0, 1, 3))


@pytest.fixture(scope="session")
def loop5():
    return LoopTable(LOOP5_ROWS)


@pytest.fixture(scope="session")
def data_z4(z2):
    # K = G = Z2, trivial action, f(a,a) = the generator: builds Z4
    return SchreierData(z2, z2, (identity_perm(2),) * 2, ((0, 0), (0, 1)))


@pytest.fixture(scope="session")
def data_s3f(z2, s3):
    # K = Z2, G = S3, trivial action, f(a,a) = a transposition
    return SchreierData(z2, s3, (identity_perm(6),) * 2, ((0, 0), (0, 2)))


@pytest.fixture(scope="session")
def data_v4(z2, v4):
    # K = Z2, G = V4, f = e, the action swaps the two generators
    return SchreierData(z2, v4, (identity_perm(4), (0, 2, 1, 3)),
                        ((0, 0), (0, 0)))


@pytest.fixture(scope="session")
def bol8():
    from loopforge.verify import fixture_bol8
    return fixture_bol8()
