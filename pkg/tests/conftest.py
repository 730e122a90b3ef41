import pytest

from oracles import enumerate_pmf


@pytest.fixture
def brute_pmf():
    return enumerate_pmf
