import numpy as np
import pytest

from regsym.models.options import EngineOptions, Tolerances
from regsym.parsers.fixture_parser import FixtureParser, bundled_fixtures_path


@pytest.fixture(autouse=True)
def _no_precision_override(monkeypatch):
    monkeypatch.delenv("REGSYM_PRECISION", raising=False)


@pytest.fixture
def rng():
    return np.random.default_rng(20240229)


@pytest.fixture
def tolerances():
    return Tolerances()


@pytest.fixture
def options():
    return EngineOptions()


@pytest.fixture(scope="session")
def bundled_fixtures():
    return FixtureParser().parse_file(bundled_fixtures_path())

