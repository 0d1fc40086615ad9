"""Shared test configuration for pytest"""

import numpy as np
import pytest

from lcdkit.core.config import settings
from lcdkit.core.field import GF


@pytest.fixture
def gf2():
    return GF(2)


@pytest.fixture
def gf3():
    return GF(3)


@pytest.fixture
def gf5():
    return GF(5)


@pytest.fixture(params=[2, 3, 5])
def small_field(request):
    """Each of the small fields used by the randomized checks"""
    return GF(request.param)


@pytest.fixture
def rng():
    """Seeded generator so randomized checks are reproducible"""
    return np.random.default_rng(20241017)


@pytest.fixture
def tight_budget(monkeypatch):
    """Shrink every enumeration budget for the duration of a test"""
    monkeypatch.setattr(settings, "enumeration_budget", 10)
    monkeypatch.setattr(settings, "group_budget", 100)
    monkeypatch.setattr(settings, "distance_budget", 4)
    monkeypatch.setattr(settings, "mass_max_length", 3)
    return settings
