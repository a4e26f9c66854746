import pytest

from syzygy.corpus import builtin


@pytest.fixture(scope="session")
def lam():
    return builtin("paper_lambda").algebra


@pytest.fixture(scope="session")
def a2():
    return builtin("linear_An(2)").algebra


@pytest.fixture(scope="session")
def loop2():
    return builtin("loop(2)").algebra
