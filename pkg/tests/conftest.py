import pytest

from a1count.fixtures import load_fixtures
from a1count.tables import solved_tables


@pytest.fixture(scope="session")
def sol():
    return solved_tables()


@pytest.fixture(scope="session")
def fixtures():
    return load_fixtures()


def pytest_terminal_summary(terminalreporter):
    lines = []
    for status in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(status, []):
            nodeid = getattr(rep, "nodeid", "")
            if "test_acceptance.py" not in nodeid or getattr(rep, "when", "call") != "call":
                continue
            lines.append((nodeid, "PASS" if status == "passed" else "FAIL"))
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for nodeid, verdict in sorted(lines):
        terminalreporter.write_line(f"{verdict}  {nodeid.split('::', 1)[1]}")
