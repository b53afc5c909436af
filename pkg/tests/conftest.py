import random

import pytest

from cographic import build_fan, catalog_graph, catalog_names

CATALOG_NAMES = catalog_names()
SMALL = ["TREE3", "LOOP1", "B2", "B3", "C3", "C4", "C5"]


def pytest_addoption(parser):
    parser.addoption("--seed", type=int, default=20260808,
                     help="seed for the randomized property suites")


@pytest.fixture
def rng(request):
    return random.Random(request.config.getoption("--seed"))


@pytest.fixture(scope="session")
def graphs():
    return {name: catalog_graph(name) for name in CATALOG_NAMES}


class _FanCache:
    def __init__(self):
        self._fans = {}

    def __call__(self, name):
        if name not in self._fans:
            self._fans[name] = build_fan(catalog_graph(name))
        return self._fans[name]


@pytest.fixture(scope="session")
def fan_of():
    """Session-wide fan cache; the big catalog fans are built once."""
    return _FanCache()
