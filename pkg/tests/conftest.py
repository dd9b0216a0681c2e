import pytest

from autmap.polyring import VarRegistry

from corpus import random_corpus


@pytest.fixture(scope="session")
def corpus():
    return random_corpus()


@pytest.fixture
def xy():
    return VarRegistry(["x", "y"])



ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
