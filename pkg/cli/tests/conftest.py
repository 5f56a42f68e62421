"""Shared fixtures for the zdrigid CLI tests."""

import os
from pathlib import Path

import pytest
from click.testing import CliRunner

from zd_rigidity.config import get_settings

SYSTEMS_DIR = Path(__file__).resolve().parents[2] / "docs" / "systems"


@pytest.fixture(autouse=True)
def _fast_settings(monkeypatch: pytest.MonkeyPatch):
    """Run every command at coarse resolutions with a clean settings cache."""
    for key in list(os.environ):
        if key.startswith("ZDRIGID_"):
            monkeypatch.delenv(key)
    monkeypatch.setenv("ZDRIGID_MAHLER_GRID", "96")
    monkeypatch.setenv("ZDRIGID_ROOTS_OF_UNITY_ORDER", "24")
    monkeypatch.setenv("ZDRIGID_MIXING_BOUND", "2")
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def runner() -> CliRunner:
    """Create a Click test runner."""
    return CliRunner()


@pytest.fixture
def systems_dir() -> Path:
    """Directory of the bundled system files."""
    return SYSTEMS_DIR
