"""Shared fixtures.  Contexts are immutable, so each field is built once."""

import pytest
from hypothesis import HealthCheck, settings

from purecubic import build_context

settings.register_profile(
    "suite",
    derandomize=True,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")

# the nine desk-scale fields exercised throughout the suite
FIELD_MS = (2, 3, 5, 6, 7, 10, 17, 19, 28)

_cache = {}


def context_for(m):
    if m not in _cache:
        _cache[m] = build_context(m)
    return _cache[m]


@pytest.fixture(params=FIELD_MS, ids=lambda m: "m%d" % m)
def any_ctx(request):
    return context_for(request.param)


@pytest.fixture
def ctx2():
    return context_for(2)


@pytest.fixture
def ctx10():
    return context_for(10)


@pytest.fixture
def ctx17():
    return context_for(17)
