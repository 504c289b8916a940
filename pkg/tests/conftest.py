import pytest

from moufang import build_corpus, generalized_octonion, generalized_quaternion

# The order-5 loop with a two-sided identity that is neither power-associative
# nor Moufang; element 1 is an involution, elements 2..4 generate everything.
ORDER5_TABLE = [
    [0, 1, 2, 3, 4],
    [1, 0, 3, 4, 2],
    [2, 3, 4, 0, 1],
    [3, 4, 1, 2, 0],
    [4, 2, 0, 1, 3],
]


@pytest.fixture(scope="session")
def q8():
    return generalized_quaternion(2)


@pytest.fixture(scope="session")
def o16():
    return generalized_octonion(2)


@pytest.fixture(scope="session")
def corpus16():
    return build_corpus(16)


@pytest.fixture(scope="session")
def corpus32():
    return build_corpus(32)
