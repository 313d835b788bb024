import pytest

from triembed.designs import gen_cayley_latin, gen_sts, latin_to_triple_system


@pytest.fixture(scope="session")
def sts7():
    return gen_sts(7)


@pytest.fixture(scope="session")
def sts9():
    return gen_sts(9)


@pytest.fixture(scope="session")
def sts13():
    return gen_sts(13)


@pytest.fixture(scope="session")
def sts15():
    return gen_sts(15)


@pytest.fixture(scope="session")
def ls3():
    return gen_cayley_latin(3)


@pytest.fixture(scope="session")
def ls3_ts(ls3):
    return latin_to_triple_system(ls3)


@pytest.fixture(scope="session")
def ls5_ts():
    return latin_to_triple_system(gen_cayley_latin(5))


@pytest.fixture(scope="session")
def ls7_ts():
    return latin_to_triple_system(gen_cayley_latin(7))
