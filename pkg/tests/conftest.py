"""Shared fixtures for the zd-rigidity test suite."""

from collections.abc import Iterator

import pytest

from zd_rigidity import fixtures
from zd_rigidity.config import EngineSettings, get_settings
from zd_rigidity.models.presentation import ModulePresentation


@pytest.fixture(autouse=True)
def _fresh_settings(monkeypatch: pytest.MonkeyPatch) -> Iterator[None]:
    """Drop cached settings and ZDRIGID_* variables around every test."""
    import os

    for name in list(os.environ):
        if name.startswith("ZDRIGID_"):
            monkeypatch.delenv(name)
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def fast_settings() -> EngineSettings:
    """Coarser resolutions for tests that only need qualitative answers."""
    return EngineSettings(mahler_grid=128, roots_of_unity_order=32, mixing_bound=2)


@pytest.fixture
def ledrappier() -> ModulePresentation:
    return fixtures.ledrappier()


@pytest.fixture
def full_shift_1() -> ModulePresentation:
    return fixtures.full_shift(1)


@pytest.fixture
def full_shift_2() -> ModulePresentation:
    return fixtures.full_shift(2)


@pytest.fixture
def diagonal_binomial() -> ModulePresentation:
    return fixtures.diagonal_binomial()


@pytest.fixture
def times_two() -> ModulePresentation:
    return fixtures.times_two()


@pytest.fixture
def two_torsion() -> ModulePresentation:
    return fixtures.two_torsion()
