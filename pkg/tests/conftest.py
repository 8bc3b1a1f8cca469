import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from positroids import fixtures  # noqa: E402


@pytest.fixture(scope="session")
def square4():
    return fixtures.load("square4")


@pytest.fixture(scope="session")
def schubert36():
    return fixtures.load("schubert36")


@pytest.fixture(scope="session")
def d4():
    return fixtures.load("d4")


@pytest.fixture(scope="session")
def tri6():
    return fixtures.load("tri6")


@pytest.fixture(scope="session")
def chamber_graph():
    return fixtures.load("chamber_s2s1s2")
