"""Pytest configuration and fixtures.

Builtin graphs are parsed once per session; labelings and random
generators are fresh for each test.
"""

import os
import random

import pytest

# Wide console so rich tables are not wrapped in CliRunner output.
os.environ.setdefault("COLUMNS", "200")

from chf_cli.core.builtins import builtin  # noqa: E402
from chf_cli.core.ribbon_graph import EdgeLabeling, RibbonGraph  # noqa: E402


@pytest.fixture(scope="session")
def theta() -> RibbonGraph:
    """Two vertices joined by three edges, <3,3|2,2,2>."""
    return builtin("theta")


@pytest.fixture(scope="session")
def tetrahedron() -> RibbonGraph:
    """<3,3,3,3|3,3,3,3>."""
    return builtin("tetrahedron")


@pytest.fixture(scope="session")
def cube() -> RibbonGraph:
    """<3,3,3,3,3,3,3,3|4,4,4,4,4,4>."""
    return builtin("cube")


@pytest.fixture(scope="session")
def quotient411() -> RibbonGraph:
    """<3,3|4,1,1>, the irregular example."""
    return builtin("quotient411")


@pytest.fixture(scope="session")
def twisted_theta() -> RibbonGraph:
    """Genus-1 graph with a single face."""
    return builtin("twisted_theta")


@pytest.fixture
def rng() -> random.Random:
    """Seeded generator for sampled properties."""
    return random.Random(42)


@pytest.fixture
def zero_theta(theta: RibbonGraph) -> EdgeLabeling:
    return EdgeLabeling.zero(theta)


@pytest.fixture(autouse=True)
def isolated_settings(monkeypatch: pytest.MonkeyPatch, tmp_path_factory: pytest.TempPathFactory) -> None:
    """Keep the user's settings file and CHF_* variables out of the tests."""
    monkeypatch.setattr(
        "chf_cli.config.schema.SETTINGS_FILE",
        tmp_path_factory.mktemp("config") / "settings.yaml",
    )
    for var in (
        "CHF_TOLERANCE",
        "CHF_DEPTH_LIMIT",
        "CHF_CLOSURE_BOUND",
        "CHF_SEED",
        "CHF_SAMPLES",
        "CHF_SVG_WIDTH",
    ):
        monkeypatch.delenv(var, raising=False)
