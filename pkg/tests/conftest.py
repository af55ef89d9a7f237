import pytest

from centralsets.catalog import cyclic_group, left_zero, mod_mul, right_zero


@pytest.fixture(scope="session")
def z3():
    return cyclic_group(3)


@pytest.fixture(scope="session")
def z2():
    return cyclic_group(2)


@pytest.fixture(scope="session")
def mod2():
    # multiplication mod 2: 0 is absorbing, 1 is the identity
    return mod_mul(2)


@pytest.fixture(scope="session")
def rz2():
    return right_zero(2)


@pytest.fixture(scope="session")
def lz2():
    return left_zero(2)
