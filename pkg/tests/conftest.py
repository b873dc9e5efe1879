import pytest

from cgsum.geometry import standard_diagram
from cgsum.invariants import invariant_report


@pytest.fixture(scope="session")
def h():
    cache = {}

    def get(n):
        if n not in cache:
            cache[n] = standard_diagram(n)
        return cache[n]
    return get


@pytest.fixture(scope="session")
def report():
    cache = {}

    def get(d):
        key = id(d)
        if key not in cache:
            cache[key] = (d, invariant_report(d))
        return cache[key][1]
    return get
