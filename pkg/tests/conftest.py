import pytest

from ordbool import all_fixtures


def fs(*labels: str) -> frozenset:
    return frozenset(labels)


@pytest.fixture(scope="session")
def fixtures():
    """One instance of every built-in fixture poset, by name."""
    return all_fixtures()


@pytest.fixture(scope="session")
def v1(fixtures):
    return fixtures["v1"]


@pytest.fixture(scope="session")
def supinf(fixtures):
    return fixtures["supinf"]


@pytest.fixture(scope="session")
def pprime(fixtures):
    return fixtures["pprime"]
