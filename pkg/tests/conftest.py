import pytest

from weft import fixtures


@pytest.fixture(scope="session")
def worked_sig():
    return fixtures.worked_signature()


@pytest.fixture(scope="session")
def corpus(worked_sig):
    return fixtures.worked_diagrams(worked_sig)


@pytest.fixture(scope="session")
def zigzag_sig():
    return fixtures.zigzag_signature()
