import pytest

from lrclcd.galois import make_field


@pytest.fixture(scope="session")
def gf2():
    return make_field(2)


@pytest.fixture(scope="session")
def gf7():
    return make_field(7)


@pytest.fixture(scope="session")
def gf13():
    return make_field(13)


@pytest.fixture(scope="session")
def gf17():
    return make_field(17)


@pytest.fixture(scope="session")
def gf37():
    return make_field(37)


@pytest.fixture(scope="session")
def gf67():
    return make_field(67)


@pytest.fixture(scope="session")
def gf8():
    return make_field(2, 3)


@pytest.fixture(scope="session")
def gf64():
    return make_field(2, 6)
