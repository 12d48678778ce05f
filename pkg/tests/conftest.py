import pytest

from omnisearch.core import run_deep

ACCEPTANCE_RESULTS = {}


@pytest.fixture
def deep():
    """Run a callable on a big-stack thread; deep lazy searches need it."""
    return run_deep


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_RESULTS):
        terminalreporter.write_line(ACCEPTANCE_RESULTS[key])
