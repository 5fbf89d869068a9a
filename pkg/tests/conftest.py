"""Shared pytest fixtures for prerad-lab tests."""
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from prerad_lab.ring import make_ring  # noqa: E402
from prerad_lab.universe import build_universe, parse_module  # noqa: E402


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: full suite runs over the larger preset rings")


@pytest.fixture(scope="session")
def zn2():
    return make_ring("zn:2")


@pytest.fixture(scope="session")
def zn4():
    return make_ring("zn:4")


@pytest.fixture(scope="session")
def zn6():
    return make_ring("zn:6")


@pytest.fixture(scope="session")
def u_zn2(zn2):
    """Universe over Z/2: 0, Z2 and Z2+Z2."""
    return build_universe(zn2)


@pytest.fixture(scope="session")
def u_zn4(zn4):
    """Universe over Z/4: every abelian group of exponent 4 with at most two generators."""
    return build_universe(zn4)


@pytest.fixture(scope="session")
def u_zn6(zn6):
    return build_universe(zn6)


@pytest.fixture(scope="session")
def z4(zn4):
    """Z4 as a module over Z/4."""
    return parse_module(zn4, "Z4")


@pytest.fixture
def write_config(tmp_path):
    """Write a JSON config document and return its path."""
    def write(text: str, name: str = "run.json") -> Path:
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return path
    return write
