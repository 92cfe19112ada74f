from __future__ import annotations

import pytest
from hypothesis import HealthCheck, settings

from clusterwb.cli import load_quiver_arg
from clusterwb.dencheck import Workbench
from clusterwb.inventory import build_inventory

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

# inventories used by the invariant tests, with the transjective depth
INVENTORY_CASES = {
    "a2": 0,
    "a3linear": 0,
    "d4": 0,
    "kronecker": 4,
    "a2tilde-q": 3,
}

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def quiver():
    return load_quiver_arg


@pytest.fixture(scope="session")
def a3_bench():
    return Workbench(load_quiver_arg("a3cyclic"))


@pytest.fixture(scope="session")
def a2t_bench():
    return Workbench(load_quiver_arg("a2tilde-q"))


@pytest.fixture(scope="session")
def inventories():
    return {name: build_inventory(load_quiver_arg(name), depth) for name, depth in INVENTORY_CASES.items()}


@pytest.fixture(scope="session")
def acceptance_log():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
