import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from shodapairs import algebra  # noqa: E402

_CRITERIA: dict[int, str] = {}


@pytest.fixture
def check_idempotents(monkeypatch):
    monkeypatch.setattr(algebra, "CHECK_IDEMPOTENTS", True)


@pytest.fixture
def criterion():
    """Record one PASS/FAIL line for an acceptance criterion, then assert it."""
    def record(number: int, ok: bool, detail: str):
        line = f"criterion {number}: {'PASS' if ok else 'FAIL'} - {detail}"
        _CRITERIA[number] = line
        print(line)
        assert ok, line
    return record


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_CRITERIA):
        terminalreporter.write_line(_CRITERIA[n])
