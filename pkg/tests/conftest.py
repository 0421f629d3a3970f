from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parents[1]

# criterion number -> (passed, detail), filled in by test_acceptance
CRITERIA: dict[int, tuple[bool, str]] = {}


@pytest.fixture
def fixtures_dir() -> Path:
    return ROOT / "fixtures"


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(CRITERIA):
        passed, detail = CRITERIA[number]
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'} criterion {number}: {detail}")
