import functools

import pytest
from hypothesis import settings

from succulent import analyze, fixtures

settings.register_profile("default", deadline=None, max_examples=40)
settings.load_profile("default")


@functools.lru_cache(maxsize=None)
def _analysis(name):
    g, spec = fixtures.VERTEX_FIXTURES[name]()
    return analyze(g, spec)


@pytest.fixture
def analysed():
    """Cached analysis of a named vertex fixture."""
    return _analysis


@pytest.fixture
def f1(analysed):
    return analysed("wheel4")


@pytest.fixture
def f2(analysed):
    return analysed("series3")
