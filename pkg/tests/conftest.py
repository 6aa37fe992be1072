import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from schurkit import lr


@pytest.fixture
def fresh_cache():
    """Isolate tests that inspect the module-level LR cache."""
    saved = lr.default_cache().records()
    lr.default_cache().clear()
    yield lr.default_cache()
    lr.default_cache().clear()
    for key, value in saved.items():
        lr.default_cache()[key] = value


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
