import pytest

from corpus import corpus


@pytest.fixture(scope="session")
def shape_corpus():
    return corpus()
