import pytest

from gencactus import CoxeterSystem, RacgContext

_systems = {}
_contexts = {}


def get_system(name):
    if name not in _systems:
        _systems[name] = CoxeterSystem.from_name(name)
    return _systems[name]


def get_context(name):
    # contexts carry group tables and rep caches; share them across tests
    if name not in _contexts:
        _contexts[name] = RacgContext(get_system(name))
    return _contexts[name]


@pytest.fixture(scope="session")
def system():
    return get_system


@pytest.fixture(scope="session")
def context():
    return get_context
